#pragma once

#include "schubert/node_set.hpp"
#include "schubert/root_system.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Verdict on whether X_w is L_I-spherical, with the intermediate data that
/// produced it. d = w_0(I) w.
struct ClassificationResult {
  Word w_word;
  NodeSet levi;
  Word d_word;
  NodeSet support_d;
  int len_w = 0;
  int len_w0I = 0;
  int len_d = 0;
  bool is_spherical = false;
};

/// Decides L_I-sphericality of the Schubert variety X_w: spherical iff
/// w_0(I) w is a standard Coxeter element.
///
/// Requires I to be contained in the left descent set of w; otherwise throws
/// HypothesisViolation listing the offending nodes. Throws InconsistencyError
/// if l(w) != l(w_0(I)) + l(w_0(I) w).
ClassificationResult classify(const RootSystem& rs, const WeylElement& w, NodeSet levi);

/// Same as classify() with w_0(I) supplied by the caller (the census reuses
/// one longest element per subset).
ClassificationResult classify_with_longest(const RootSystem& rs, const WeylElement& w,
                                           NodeSet levi, const WeylElement& w0_levi,
                                           NodeSet descents);

/// Toric case (I empty): w is a standard Coxeter element.
bool classify_toric(const RootSystem& rs, const WeylElement& w);

}  // namespace schubert
