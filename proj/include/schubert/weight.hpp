#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace schubert {

/// An integral weight in the fundamental-weight basis: coords[i] = <lambda, alpha_{i+1}^vee>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight fundamental(int rank, int node);
  static Weight rho(int rank) { return Weight(std::vector<int>(rank, 1)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }

  /// Coordinate for Dynkin node `node` (1-based).
  int at(int node) const { return coords_[node - 1]; }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }

  bool is_dominant() const;
  int degree() const;  // sum of coordinates

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (int& c : a.coords_) c *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

/// Graded-lexicographic order: by coordinate sum, then lexicographically.
bool graded_lex_less(const Weight& a, const Weight& b);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int c : w.coords()) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

}  // namespace schubert
