#include "schubert/weight.hpp"

#include <algorithm>
#include <numeric>

namespace schubert {

Weight Weight::fundamental(int rank, int node) {
  Weight w = zero(rank);
  w.coords_[node - 1] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

int Weight::degree() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

bool graded_lex_less(const Weight& a, const Weight& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.coords() < b.coords();
}

}  // namespace schubert
