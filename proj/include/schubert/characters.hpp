#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/node_set.hpp"
#include "schubert/root_system.hpp"
#include "schubert/weight.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Finite formal sum of weights with nonzero integer coefficients.
class WeightPoly {
 public:
  using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

  WeightPoly() = default;
  static WeightPoly monomial(const Weight& w, std::int64_t coeff = 1);

  void add(const Weight& w, std::int64_t coeff);
  std::int64_t coeff(const Weight& w) const;

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Sum of coefficients; the dimension when this is a module character.
  std::int64_t mass() const;

  const Map& terms() const { return terms_; }
  /// Terms ascending in graded-lexicographic order of the weight.
  std::vector<std::pair<Weight, std::int64_t>> sorted_terms() const;

  WeightPoly& operator+=(const WeightPoly& o);
  WeightPoly& operator-=(const WeightPoly& o);
  WeightPoly& operator*=(std::int64_t k);
  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(std::int64_t k, WeightPoly a) { return a *= k; }

  friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

 private:
  Map terms_;
};

struct DecompositionEntry {
  Weight mu;
  std::int64_t multiplicity = 0;
  friend bool operator==(const DecompositionEntry&, const DecompositionEntry&) = default;
};

/// Ceiling on the number of terms any intermediate character may carry.
inline constexpr std::size_t kDefaultTermCeiling = 5'000'000;

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
Weight reflect_weight(const RootSystem& rs, const Weight& lambda, int node);

/// Isobaric divided difference pi_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}).
/// On a monomial e^lambda with k = <lambda, alpha_i^vee>:
///   k >= 0:  sum_{j=0..k} e^{lambda - j alpha_i}
///   k = -1:  0
///   k <= -2: -sum_{j=1..-k-1} e^{lambda + j alpha_i}
/// Throws BudgetExceeded if the result would exceed `term_ceiling` terms.
WeightPoly demazure_op(const RootSystem& rs, const WeightPoly& f, int node,
                       std::size_t term_ceiling = kDefaultTermCeiling);

/// Applies pi_{a_1} pi_{a_2} ... pi_{a_k} to f for word a_1 ... a_k, i.e. the
/// last letter acts first.
WeightPoly apply_demazure_word(const RootSystem& rs, WeightPoly f, const Word& word,
                               std::size_t term_ceiling = kDefaultTermCeiling);

/// Character of the Demazure module V_lambda^w. Requires lambda dominant.
WeightPoly demazure_char(const RootSystem& rs, const Weight& lambda, const WeylElement& w,
                         std::size_t term_ceiling = kDefaultTermCeiling);

/// Character of the irreducible L_I-module of highest weight mu.
/// Requires mu to be L_I-dominant.
WeightPoly levi_irreducible_char(const RootSystem& rs, const Weight& mu, NodeSet levi,
                                 std::size_t term_ceiling = kDefaultTermCeiling);

/// Integer functional h with h(alpha_i) = 2 for every i in I: pairing with
/// the sum of the positive coroots of the I-subsystem. Coefficients are
/// indexed by 0-based node.
std::vector<std::int64_t> levi_height(const RootSystem& rs, NodeSet levi);

/// Writes f as a nonnegative integer combination of irreducible L_I
/// characters by repeatedly peeling off a dominance-maximal weight. Entries
/// are returned in ascending graded-lex order of mu. Throws NotLeviCharacter
/// if f is not the character of an L_I-module.
std::vector<DecompositionEntry> decompose_levi(const RootSystem& rs, WeightPoly f,
                                               NodeSet levi,
                                               std::size_t term_ceiling = kDefaultTermCeiling);

struct MultiplicityCheck {
  bool multiplicity_free = true;
  std::optional<DecompositionEntry> witness;  // first entry with multiplicity >= 2
  std::vector<DecompositionEntry> decomposition;
};

/// Decomposes the Demazure character of (lambda, w) into L_I irreducibles.
/// Requires lambda dominant and I contained in the left descents of w.
MultiplicityCheck is_multiplicity_free(const RootSystem& rs, const Weight& lambda,
                                       const WeylElement& w, NodeSet levi,
                                       std::size_t term_ceiling = kDefaultTermCeiling);

struct WitnessOptions {
  int coeff_cap = 2;
  std::size_t lambda_budget = 10'000;
  std::size_t term_ceiling = kDefaultTermCeiling;
  unsigned jobs = 1;
};

enum class WitnessStatus {
  Found,
  Exhausted,     // every candidate lambda checked, none failed
  Inconclusive,  // lambda budget or term ceiling hit before finishing
};

struct WitnessResult {
  WitnessStatus status = WitnessStatus::Exhausted;
  std::size_t lambdas_checked = 0;
  std::optional<Weight> lambda;
  std::optional<DecompositionEntry> witness;
};

/// Dominant weights with every coordinate in [0, cap], ascending graded-lex.
std::vector<Weight> dominant_weights_up_to(int rank, int cap);

/// Searches for a dominant lambda whose Demazure module V_lambda^w is not a
/// multiplicity-free L_I-module. Failing to find one proves nothing.
WitnessResult witness_search(const RootSystem& rs, const WeylElement& w, NodeSet levi,
                             const WitnessOptions& options = {});

}  // namespace schubert
