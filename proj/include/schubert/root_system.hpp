#pragma once

#include <span>
#include <vector>

#include "schubert/cartan_type.hpp"
#include "schubert/node_set.hpp"
#include "schubert/weight.hpp"

namespace schubert {

/// Coordinates of a root in the simple-root basis.
using RootVector = std::vector<int>;

/// Square integer matrix, row-major. Entry (i, j) with 0-based indices.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(int rank) : rank_(rank), entries_(rank * rank, 0) {}

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[i * rank_ + j]; }
  int& operator()(int i, int j) { return entries_[i * rank_ + j]; }

  CartanMatrix transposed() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// Cartan matrix for a finite type, Bourbaki numbering, with the convention
/// C(i, j) = <alpha_i, alpha_j^vee>. Consequently
///   s_j(alpha_i) = alpha_i - C(i, j) alpha_j   and   alpha_i = sum_j C(i, j) omega_j.
CartanMatrix cartan_matrix(const CartanType& type);

/// Positive roots generated from `seed` by applying simple reflections until
/// nothing new with nonnegative coordinates appears. Sorted by height, then
/// lexicographically.
std::vector<RootVector> positive_root_closure(const CartanMatrix& cartan,
                                              std::vector<RootVector> seed);

/// Immutable root data for one finite Cartan type. Safe to share between
/// threads once built.
class RootSystem {
 public:
  explicit RootSystem(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }

  std::span<const RootVector> positive_roots() const { return positive_roots_; }

  /// Positive coroots in simple-coroot coordinates (positive roots of the
  /// transposed Cartan matrix).
  std::span<const RootVector> positive_coroots() const { return positive_coroots_; }

  /// Index of `root` in positive_roots(), or -1.
  int index_of(const RootVector& root) const;

 private:
  CartanType type_;
  CartanMatrix cartan_;
  std::vector<RootVector> positive_roots_;
  std::vector<RootVector> positive_coroots_;
};

inline RootSystem build_root_system(const CartanType& type) { return RootSystem(type); }

/// Positive roots whose support lies inside `nodes`, in positive_roots() order.
std::vector<RootVector> phi_plus_of_subset(const RootSystem& rs, NodeSet nodes);

/// alpha_i expressed in the fundamental-weight basis: row i of the Cartan matrix.
Weight simple_root_in_weight_basis(const RootSystem& rs, int node);

/// True if every coordinate is >= 0 and at least one is nonzero.
bool is_positive(std::span<const int> v);

}  // namespace schubert
