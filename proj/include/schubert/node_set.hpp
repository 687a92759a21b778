#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "schubert/cartan_type.hpp"

namespace schubert {

/// A sequence of simple-reflection indices, 1-based. Not necessarily reduced.
using Word = std::vector<int>;

/// A subset of the Dynkin nodes {1..rank}, stored as a bitmask.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) {
    for (int n : nodes) insert(n);
  }

  static NodeSet from_bits(std::uint64_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }
  static NodeSet all(int rank) {
    return from_bits(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }

  bool contains(int node) const { return (bits_ >> (node - 1)) & 1u; }
  void insert(int node) { bits_ |= std::uint64_t{1} << (node - 1); }
  void erase(int node) { bits_ &= ~(std::uint64_t{1} << (node - 1)); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  bool is_subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// Largest node index present, 0 when empty.
  int max_node() const { return 64 - std::countl_zero(bits_); }

  /// Members in ascending order.
  std::vector<int> nodes() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// All subsets, ordered by ascending bitmask (empty set first).
  std::vector<NodeSet> subsets() const {
    std::vector<NodeSet> out;
    std::uint64_t sub = 0;
    do {
      out.push_back(from_bits(sub));
      sub = (sub - bits_) & bits_;
    } while (sub != 0);
    return out;
  }

  friend NodeSet operator|(NodeSet a, NodeSet b) { return from_bits(a.bits_ | b.bits_); }
  friend NodeSet operator&(NodeSet a, NodeSet b) { return from_bits(a.bits_ & b.bits_); }
  friend NodeSet operator-(NodeSet a, NodeSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend bool operator==(NodeSet, NodeSet) = default;
  friend auto operator<=>(NodeSet, NodeSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace schubert
