#include "schubert/cartan_type.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

bool valid(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 3;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

std::optional<std::uint64_t> checked_factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) {
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(k), &r)) return std::nullopt;
  }
  return r;
}

std::optional<std::uint64_t> checked_shift(std::optional<std::uint64_t> v, int bits) {
  if (!v || bits >= 64 || (*v >> (64 - bits)) != 0) return std::nullopt;
  return *v << bits;
}

}  // namespace

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  if (rank > kMaxRank || !valid(family, rank)) {
    throw InvalidInput("invalid Cartan type " + std::string(1, static_cast<char>(family)) +
                       std::to_string(rank) +
                       " (valid: A n>=1, B n>=2, C n>=3, D n>=4, E6-E8, F4, G2; rank <= " +
                       std::to_string(kMaxRank) + ")");
  }
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidInput("cannot parse Cartan type '" + std::string(text) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') {
    throw InvalidInput("unknown Cartan family in '" + std::string(text) + "'");
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidInput("cannot parse rank in Cartan type '" + std::string(text) + "'");
  }
  return CartanType(static_cast<Family>(letter), rank);
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

std::optional<std::uint64_t> CartanType::weyl_group_order() const {
  const int n = rank_;
  switch (family_) {
    case Family::A: return checked_factorial(n + 1);
    case Family::B:
    case Family::C: return checked_shift(checked_factorial(n), n);
    case Family::D: return checked_shift(checked_factorial(n), n - 1);
    case Family::E:
      return n == 6 ? 51'840ull : n == 7 ? 2'903'040ull : 696'729'600ull;
    case Family::F: return 1'152ull;
    case Family::G: return 12ull;
  }
  return std::nullopt;
}

int CartanType::positive_root_count() const {
  const int n = rank_;
  switch (family_) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace schubert
