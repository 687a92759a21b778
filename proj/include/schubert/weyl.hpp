#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "schubert/node_set.hpp"
#include "schubert/root_system.hpp"

namespace schubert {

/// A Weyl group element, represented by its action on the root lattice in
/// the simple-root basis. Column j is the image of alpha_{j+1}. Two elements
/// are equal iff their matrices are equal.
///
/// Entries of such matrices are root coordinates, so they are bounded by the
/// coefficients of the highest root (at most 6 in absolute value).
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);

  int rank() const { return rank_; }
  int operator()(int row, int col) const { return entries_[row * rank_ + col]; }

  bool is_identity() const;

  /// Image of a root-lattice vector.
  RootVector apply(std::span<const int> v) const;

  /// True if w(alpha_{node}) is a negative root, i.e. node is a right descent.
  bool sends_simple_root_negative(int node) const;

  /// In-place w <- w * s_node.
  void right_multiply_simple(const CartanMatrix& cartan, int node);
  /// In-place w <- s_node * w.
  void left_multiply_simple(const CartanMatrix& cartan, int node);

  /// Row-major matrix entries; the canonical byte encoding used for
  /// hashing, deduplication and ordering.
  std::string_view encoding() const {
    return {reinterpret_cast<const char*>(entries_.data()), entries_.size()};
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// Lexicographic order on the signed matrix entries.
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.entries_ < b.entries_;
  }

  friend WeylElement multiply(const WeylElement& u, const WeylElement& v);

 private:
  int rank_ = 0;
  std::vector<std::int8_t> entries_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept {
    return std::hash<std::string_view>{}(w.encoding());
  }
};

/// Product of simple reflections in the given order. Words need not be
/// reduced. Throws InvalidInput naming the first offending position.
WeylElement from_word(const RootSystem& rs, const Word& word);

WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// Positive roots alpha with w^{-1}(alpha) negative, in positive_roots() order.
std::vector<RootVector> left_inversions(const RootSystem& rs, const WeylElement& w);

int length(const RootSystem& rs, const WeylElement& w);

NodeSet left_descents(const RootSystem& rs, const WeylElement& w);
NodeSet right_descents(const WeylElement& w);

enum class DescentChoice { Smallest, Largest };

/// Reduced word obtained by repeatedly stripping a left descent (the smallest
/// one by default) and emitting it. The word evaluates back to w.
Word reduced_word(const RootSystem& rs, const WeylElement& w,
                  DescentChoice choice = DescentChoice::Smallest);

/// Letters occurring in any reduced word of w.
NodeSet support(const RootSystem& rs, const WeylElement& w);

/// Longest element w_0(I) of the parabolic subgroup W_I.
WeylElement longest_parabolic(const RootSystem& rs, NodeSet nodes);

/// True iff d is a product of distinct simple reflections, i.e.
/// length(d) == |support(d)|. The identity qualifies (empty product).
bool is_standard_coxeter(const RootSystem& rs, const WeylElement& d);

/// Default ceiling on |W| for enumerate_group. E7 needs an explicit raise.
inline constexpr std::uint64_t kDefaultGroupCap = 2'000'000;

/// All elements of W, each once, in order of nondecreasing length; within a
/// length, ascending by canonical encoding. Throws BudgetExceeded when |W| is
/// larger than `cap` (nothing is returned in that case).
std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                         std::uint64_t cap = kDefaultGroupCap);

}  // namespace schubert
