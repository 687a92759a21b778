#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "schubert/errors.hpp"
#include "schubert/root_system.hpp"

using namespace schubert;

namespace {

const std::vector<std::string> kAllSmallTypes = {
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8",
    "C3", "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4",
    "G2"};

// Classical |Phi+| table.
int classical_count(const std::string& name) {
  const char f = name[0];
  const int n = std::stoi(name.substr(1));
  switch (f) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return std::map<int, int>{{6, 36}, {7, 63}, {8, 120}}.at(n);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

// Cartan matrix from explicit Euclidean simple roots: <a_i, a_j^vee> = 2(a_i,a_j)/(a_j,a_j).
std::vector<std::vector<int>> euclidean_cartan(const std::vector<std::vector<double>>& simple) {
  std::vector<std::vector<int>> c(simple.size(), std::vector<int>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j)
      c[i][j] = static_cast<int>(
          std::lround(2 * oracle::dot(simple[i], simple[j]) / oracle::dot(simple[j], simple[j])));
  return c;
}

void check_cartan(const std::string& type, const std::vector<std::vector<double>>& simple) {
  CAPTURE(type);
  const CartanMatrix c = cartan_matrix(CartanType::parse(type));
  const auto expected = euclidean_cartan(simple);
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) CHECK(c(i, j) == expected[i][j]);
}

}  // namespace

TEST_CASE("Cartan type parsing") {
  CHECK(CartanType::parse("A5").name() == "A5");
  CHECK(CartanType::parse("d4").family() == Family::D);
  CHECK(CartanType::parse("E8").rank() == 8);
  CHECK(CartanType::parse("g2").name() == "G2");

  for (const char* bad : {"A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "X4", "A", "Aa", "",
                          "A-1", "D4x", "A65"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CartanType::parse(bad), InvalidInput);
  }
}

TEST_CASE("Weyl group orders") {
  CHECK(CartanType::parse("A2").weyl_group_order() == 6u);
  CHECK(CartanType::parse("B3").weyl_group_order() == 48u);
  CHECK(CartanType::parse("D4").weyl_group_order() == 192u);
  CHECK(CartanType::parse("E6").weyl_group_order() == 51840u);
  CHECK(CartanType::parse("F4").weyl_group_order() == 1152u);
  CHECK_FALSE(CartanType::parse("A40").weyl_group_order().has_value());
}

TEST_CASE("rank one system") {
  const RootSystem rs(CartanType::parse("A1"));
  CHECK(rs.cartan()(0, 0) == 2);
  REQUIRE(rs.positive_roots().size() == 1);
  CHECK(rs.positive_roots()[0] == RootVector{1});
}

TEST_CASE("Cartan matrices match Euclidean realisations") {
  check_cartan("B3", {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
  check_cartan("C3", {{1, -1, 0}, {0, 1, -1}, {0, 0, 2}});
  check_cartan("D4", {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}});
  check_cartan("F4", {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {0.5, -0.5, -0.5, -0.5}});
  check_cartan("G2", {{1, -1, 0}, {-2, 1, 1}});
  check_cartan("E8", {{0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5},
                      {1, 1, 0, 0, 0, 0, 0, 0},
                      {-1, 1, 0, 0, 0, 0, 0, 0},
                      {0, -1, 1, 0, 0, 0, 0, 0},
                      {0, 0, -1, 1, 0, 0, 0, 0},
                      {0, 0, 0, -1, 1, 0, 0, 0},
                      {0, 0, 0, 0, -1, 1, 0, 0},
                      {0, 0, 0, 0, 0, -1, 1, 0}});
}

TEST_CASE("root system invariants for every type up to rank 8") {
  for (const std::string& name : kAllSmallTypes) {
    CAPTURE(name);
    const RootSystem rs(CartanType::parse(name));
    const CartanMatrix& c = rs.cartan();
    const int n = rs.rank();

    for (int i = 0; i < n; ++i) {
      CHECK(c(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(c(i, j) <= 0);
        CHECK((c(i, j) == 0) == (c(j, i) == 0));
      }
    }

    CHECK(static_cast<int>(rs.positive_roots().size()) == classical_count(name));
    CHECK(rs.positive_coroots().size() == rs.positive_roots().size());

    for (int i = 0; i < n; ++i) {
      RootVector simple(n, 0);
      simple[i] = 1;
      CHECK(rs.index_of(simple) >= 0);
    }

    // s_i permutes Phi+ \ {alpha_i} and sends alpha_i to -alpha_i.
    for (int i = 0; i < n; ++i) {
      int flips = 0;
      for (const RootVector& r : rs.positive_roots()) {
        int pairing = 0;
        for (int k = 0; k < n; ++k) pairing += r[k] * c(k, i);
        RootVector image = r;
        image[i] -= pairing;
        if (is_positive(image)) {
          CHECK(rs.index_of(image) >= 0);
        } else {
          ++flips;
          for (int& x : image) x = -x;
          RootVector simple(n, 0);
          simple[i] = 1;
          CHECK(image == simple);
        }
      }
      CHECK(flips == 1);
    }

    const std::vector<RootVector> again(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(positive_root_closure(c, again) == again);
  }
}

TEST_CASE("G2 and E8 root counts") {
  CHECK(RootSystem(CartanType::parse("G2")).positive_roots().size() == 6);
  CHECK(RootSystem(CartanType::parse("E8")).positive_roots().size() == 120);
}

TEST_CASE("G2 highest root") {
  const RootSystem rs(CartanType::parse("G2"));
  // alpha_1 short: the highest root is 3 alpha_1 + 2 alpha_2.
  CHECK(rs.positive_roots().back() == RootVector{3, 2});
}

TEST_CASE("phi_plus_of_subset") {
  const RootSystem a2(CartanType::parse("A2"));
  CHECK(phi_plus_of_subset(a2, {1}) == std::vector<RootVector>{{1, 0}});
  CHECK(phi_plus_of_subset(a2, {1, 2}).size() == 3);
  CHECK(phi_plus_of_subset(a2, {}).empty());

  const RootSystem e8(CartanType::parse("E8"));
  CHECK(phi_plus_of_subset(e8, {2, 3, 4, 5}).size() == 12);  // D4
  CHECK(phi_plus_of_subset(e8, {7, 8}).size() == 3);         // A2
}

TEST_CASE("simple roots in the weight basis") {
  CHECK(simple_root_in_weight_basis(RootSystem(CartanType::parse("A1")), 1) == Weight{2});
  CHECK(simple_root_in_weight_basis(RootSystem(CartanType::parse("A2")), 1) == Weight{2, -1});
  // F4: alpha_2 long, alpha_3 short, so <alpha_2, alpha_3^vee> = -2.
  CHECK(simple_root_in_weight_basis(RootSystem(CartanType::parse("F4")), 2) ==
        Weight{-1, 2, -2, 0});
  CHECK_THROWS_AS(simple_root_in_weight_basis(RootSystem(CartanType::parse("A2")), 3),
                  InvalidInput);
}
