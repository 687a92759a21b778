#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "schubert/errors.hpp"
#include "schubert/sphericality.hpp"

using namespace schubert;

namespace {

NodeSet word_letters(const Word& w) {
  NodeSet s;
  for (int l : w) s.insert(l);
  return s;
}

}  // namespace

TEST_CASE("E8 example is spherical") {
  const RootSystem rs(CartanType::parse("E8"));
  const auto r = classify(rs, from_word(rs, fixtures::kE8Word), fixtures::kE8Levi);
  CHECK(r.is_spherical);
  CHECK(r.d_word == Word{1, 6, 7, 8});
  CHECK(r.len_w == 19);
  CHECK(r.len_w0I == 15);
  CHECK(r.len_d == 4);
  CHECK(r.support_d == NodeSet{1, 6, 7, 8});
}

TEST_CASE("F4 examples") {
  const RootSystem rs(CartanType::parse("F4"));
  const auto r = classify(rs, from_word(rs, fixtures::kF4Word), fixtures::kF4Levi);
  CHECK(r.is_spherical);
  CHECK(r.d_word == Word{1, 2, 3, 4});
  CHECK(r.len_w0I == 9);

  const auto r2 = classify(rs, from_word(rs, fixtures::kF4PrimeWord), fixtures::kF4PrimeLevi);
  CHECK_FALSE(r2.is_spherical);
  CHECK(r2.len_d == 10);
  CHECK(r2.support_d.size() == 4);
  CHECK(from_word(rs, r2.d_word) == from_word(rs, fixtures::kF4PrimeD));
}

TEST_CASE("D4 counterexample is not spherical") {
  const RootSystem rs(CartanType::parse("D4"));
  const auto r = classify(rs, from_word(rs, fixtures::kD4Word), fixtures::kD4Levi);
  CHECK_FALSE(r.is_spherical);
  CHECK(from_word(rs, r.d_word) == from_word(rs, fixtures::kD4D));
  CHECK(r.len_d == 4);
  CHECK(r.support_d == NodeSet{1, 2, 4});
  CHECK(r.len_w == r.len_w0I + r.len_d);
}

TEST_CASE("levi set outside the descents is refused") {
  const RootSystem rs(CartanType::parse("D4"));
  const WeylElement w = from_word(rs, fixtures::kD4Word);
  try {
    classify(rs, w, {1, 2});
    FAIL("expected HypothesisViolation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("{1}") != std::string::npos);
  }
  CHECK_THROWS_AS(classify(rs, w, {5}), InvalidInput);
}

TEST_CASE("non-reduced input words classify the group element") {
  const RootSystem rs(CartanType::parse("D4"));
  Word padded = fixtures::kD4Word;
  padded.insert(padded.begin(), {1, 1});
  const auto a = classify(rs, from_word(rs, padded), fixtures::kD4Levi);
  const auto b = classify(rs, from_word(rs, fixtures::kD4Word), fixtures::kD4Levi);
  CHECK(a.w_word == b.w_word);
  CHECK(a.is_spherical == b.is_spherical);
}

TEST_CASE("toric classification") {
  const RootSystem rs(CartanType::parse("A2"));
  CHECK(classify_toric(rs, WeylElement::identity(2)));
  CHECK(classify_toric(rs, from_word(rs, {1})));
  CHECK(classify_toric(rs, from_word(rs, {2})));
  CHECK_FALSE(classify_toric(rs, from_word(rs, {1, 2, 1})));
}

TEST_CASE("A2 exhaustive ground truth against the permutation oracle") {
  const RootSystem rs(CartanType::parse("A2"));
  const auto truth = oracle::type_a_census(2);
  CHECK(truth.size() == 13);

  std::map<std::pair<oracle::Perm, std::set<int>>, bool> expected;
  for (const auto& p : truth) expected[{p.w, p.levi}] = p.spherical;

  int nonspherical = 0;
  std::size_t pairs = 0;
  for (const WeylElement& w : enumerate_group(rs)) {
    const oracle::Perm perm = oracle::perm_from_word(3, reduced_word(rs, w));
    for (NodeSet levi : left_descents(rs, w).subsets()) {
      ++pairs;
      const auto r = classify(rs, w, levi);
      const std::vector<int> nodes = levi.nodes();
      const std::set<int> levi_set(nodes.begin(), nodes.end());
      CHECK(expected.at({perm, levi_set}) == r.is_spherical);
      if (!r.is_spherical) {
        ++nonspherical;
        CHECK(r.len_w == 3);
        CHECK(levi.empty());
      }
    }
  }
  CHECK(pairs == 13);
  CHECK(nonspherical == 1);
}

TEST_CASE("type A3 agrees with the permutation oracle") {
  const RootSystem rs(CartanType::parse("A3"));
  std::map<std::pair<oracle::Perm, std::set<int>>, bool> expected;
  for (const auto& p : oracle::type_a_census(3)) expected[{p.w, p.levi}] = p.spherical;
  std::size_t pairs = 0;
  for (const WeylElement& w : enumerate_group(rs)) {
    const oracle::Perm perm = oracle::perm_from_word(4, reduced_word(rs, w));
    for (NodeSet levi : left_descents(rs, w).subsets()) {
      ++pairs;
      const std::vector<int> nodes = levi.nodes();
      const std::set<int> levi_set(nodes.begin(), nodes.end());
      CHECK(expected.at({perm, levi_set}) == classify(rs, w, levi).is_spherical);
    }
  }
  CHECK(pairs == expected.size());
}

TEST_CASE("classification agrees with the direct definition on whole groups") {
  for (const char* name : {"A3", "B3", "G2", "D4", "F4"}) {
    CAPTURE(name);
    const RootSystem rs(CartanType::parse(name));
    for (const WeylElement& w : enumerate_group(rs)) {
      const int len_w = length(rs, w);
      for (NodeSet levi : left_descents(rs, w).subsets()) {
        const auto r = classify(rs, w, levi);
        const WeylElement d = multiply(longest_parabolic(rs, levi), w);
        const bool direct = length(rs, d) == support(rs, d).size();
        REQUIRE(r.is_spherical == direct);
        REQUIRE(r.is_spherical == (r.len_d == word_letters(r.d_word).size()));
        if (levi.empty()) REQUIRE(r.is_spherical == (len_w == support(rs, w).size()));
      }
    }
  }
}
