#include "schubert/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

struct Edge {
  int a, b;  // 1-based nodes
};

// Dynkin diagram edges (Bourbaki numbering) together with squared root
// lengths. Multiple bonds are implied by the length ratio of their ends.
struct Diagram {
  std::vector<Edge> edges;
  std::vector<int> length2;  // indexed by 0-based node
};

Diagram diagram(const CartanType& type) {
  const int n = type.rank();
  Diagram d;
  d.length2.assign(n, 2);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.edges.push_back({i, i + 1});
  };
  switch (type.family()) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n);
      std::fill(d.length2.begin(), d.length2.end(), 4);
      d.length2[n - 1] = 2;
      break;
    case Family::C:
      chain(1, n);
      d.length2[n - 1] = 4;
      break;
    case Family::D:
      chain(1, n - 1);
      d.edges.push_back({n - 2, n});
      break;
    case Family::E:
      d.edges.push_back({1, 3});
      d.edges.push_back({2, 4});
      chain(3, n);
      break;
    case Family::F:
      chain(1, 4);
      d.length2 = {4, 4, 2, 2};
      break;
    case Family::G:
      d.edges.push_back({1, 2});
      d.length2 = {2, 6};
      break;
  }
  return d;
}

RootVector reflect_root(const CartanMatrix& cartan, const RootVector& v, int i) {
  // s_i(v) = v - <v, alpha_i^vee> alpha_i, and <alpha_k, alpha_i^vee> = C(k, i).
  int pairing = 0;
  for (int k = 0; k < cartan.rank(); ++k) pairing += v[k] * cartan(k, i);
  RootVector out = v;
  out[i] -= pairing;
  return out;
}

bool root_order(const RootVector& a, const RootVector& b) {
  int ha = std::accumulate(a.begin(), a.end(), 0);
  int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

CartanMatrix CartanMatrix::transposed() const {
  CartanMatrix t(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) t(i, j) = (*this)(j, i);
  return t;
}

CartanMatrix cartan_matrix(const CartanType& type) {
  const Diagram d = diagram(type);
  const int n = type.rank();
  CartanMatrix c(n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  for (const Edge& e : d.edges) {
    const int i = e.a - 1, j = e.b - 1;
    // (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2) / 2 for joined nodes.
    const int inner = -std::max(d.length2[i], d.length2[j]) / 2;
    c(i, j) = 2 * inner / d.length2[j];
    c(j, i) = 2 * inner / d.length2[i];
  }
  return c;
}

std::vector<RootVector> positive_root_closure(const CartanMatrix& cartan,
                                              std::vector<RootVector> seed) {
  const int n = cartan.rank();
  std::set<RootVector> found(seed.begin(), seed.end());
  std::vector<RootVector> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const RootVector& v : frontier) {
      for (int i = 0; i < n; ++i) {
        RootVector r = reflect_root(cartan, v, i);
        if (is_positive(r) && found.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVector> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

namespace {

std::vector<RootVector> simple_roots(int n) {
  std::vector<RootVector> out;
  for (int i = 0; i < n; ++i) {
    RootVector v(n, 0);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RootSystem::RootSystem(const CartanType& type)
    : type_(type),
      cartan_(cartan_matrix(type)),
      positive_roots_(positive_root_closure(cartan_, simple_roots(type.rank()))),
      positive_coroots_(positive_root_closure(cartan_.transposed(), simple_roots(type.rank()))) {
  if (static_cast<int>(positive_roots_.size()) != type.positive_root_count()) {
    throw InconsistencyError("root closure for " + type.name() + " produced " +
                             std::to_string(positive_roots_.size()) + " positive roots");
  }
}

int RootSystem::index_of(const RootVector& root) const {
  auto it = std::lower_bound(positive_roots_.begin(), positive_roots_.end(), root, root_order);
  if (it == positive_roots_.end() || *it != root) return -1;
  return static_cast<int>(it - positive_roots_.begin());
}

std::vector<RootVector> phi_plus_of_subset(const RootSystem& rs, NodeSet nodes) {
  std::vector<RootVector> out;
  for (const RootVector& r : rs.positive_roots()) {
    bool inside = true;
    for (int k = 0; k < rs.rank() && inside; ++k) inside = r[k] == 0 || nodes.contains(k + 1);
    if (inside) out.push_back(r);
  }
  return out;
}

Weight simple_root_in_weight_basis(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank()) {
    throw InvalidInput("node " + std::to_string(node) + " out of range 1.." +
                       std::to_string(rs.rank()));
  }
  std::vector<int> coords(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) coords[j] = rs.cartan()(node - 1, j);
  return Weight(std::move(coords));
}

bool is_positive(std::span<const int> v) {
  bool nonzero = false;
  for (int c : v) {
    if (c < 0) return false;
    nonzero |= c != 0;
  }
  return nonzero;
}

}  // namespace schubert
