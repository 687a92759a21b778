#include "schubert/sphericality.hpp"

#include <string>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::string format_nodes(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int n : s.nodes()) {
    if (!first) out += ',';
    out += std::to_string(n);
    first = false;
  }
  return out + "}";
}

}  // namespace

ClassificationResult classify_with_longest(const RootSystem& rs, const WeylElement& w,
                                           NodeSet levi, const WeylElement& w0_levi,
                                           NodeSet descents) {
  if (!levi.is_subset_of(descents)) {
    throw HypothesisViolation("levi nodes " + format_nodes(levi - descents) +
                              " are not left descents of w (descents " +
                              format_nodes(descents) + ")");
  }

  ClassificationResult r;
  r.levi = levi;
  r.w_word = reduced_word(rs, w);
  r.len_w = static_cast<int>(r.w_word.size());
  r.len_w0I = length(rs, w0_levi);

  // w_0(I) is an involution, so d = w_0(I)^{-1} w = w_0(I) w.
  const WeylElement d = multiply(w0_levi, w);
  r.d_word = reduced_word(rs, d);
  r.len_d = static_cast<int>(r.d_word.size());
  for (int letter : r.d_word) r.support_d.insert(letter);

  if (r.len_w != r.len_w0I + r.len_d) {
    throw InconsistencyError("length additivity failed: l(w)=" + std::to_string(r.len_w) +
                             ", l(w0(I))=" + std::to_string(r.len_w0I) +
                             ", l(d)=" + std::to_string(r.len_d));
  }
  r.is_spherical = r.len_d == r.support_d.size();
  return r;
}

ClassificationResult classify(const RootSystem& rs, const WeylElement& w, NodeSet levi) {
  if (levi.max_node() > rs.rank()) {
    throw InvalidInput("levi set " + format_nodes(levi) + " exceeds rank " +
                       std::to_string(rs.rank()));
  }
  return classify_with_longest(rs, w, levi, longest_parabolic(rs, levi), left_descents(rs, w));
}

bool classify_toric(const RootSystem& rs, const WeylElement& w) {
  return is_standard_coxeter(rs, w);
}

}  // namespace schubert
