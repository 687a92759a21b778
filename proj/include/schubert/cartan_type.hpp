#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace schubert {

/// Largest rank accepted for any family. Node subsets are 64-bit masks.
inline constexpr int kMaxRank = 64;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A finite Cartan type such as A5, D4 or E8 (Bourbaki node numbering).
class CartanType {
 public:
  /// Throws InvalidInput unless (family, rank) names a finite type:
  /// A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F4, G2.
  CartanType(Family family, int rank);

  /// Parses "A5", "d4", "E8", ... (case-insensitive family, decimal rank).
  static CartanType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// Order of the Weyl group, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> weyl_group_order() const;

  /// Number of positive roots.
  int positive_root_count() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  Family family_;
  int rank_;
};

}  // namespace schubert
