#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "schubert/census.hpp"
#include "schubert/errors.hpp"

using namespace schubert;

namespace {

std::vector<CensusRecord> collect(const RootSystem& rs, CensusOptions opts, CensusSummary* out = nullptr) {
  std::vector<CensusRecord> records;
  opts.sink = [&](const CensusRecord& r) { records.push_back(r); };
  const CensusSummary s = run_census(rs, opts);
  if (out) *out = s;
  return records;
}

}  // namespace

TEST_CASE("A2 census") {
  const RootSystem a2(CartanType::parse("A2"));
  CensusSummary s;
  const auto records = collect(a2, {}, &s);
  CHECK(s.group_order == 6);
  CHECK(s.pair_count == 13);
  CHECK(s.pair_count == oracle::type_a_census(2).size());
  CHECK(s.spherical_count == 12);
  CHECK(s.toric_count == 5);
  REQUIRE(records.size() == 13);
  for (const CensusRecord& r : records) {
    if (!r.spherical) {
      CHECK(r.length == 3);
      CHECK(r.levi.empty());
    }
  }
  CHECK(s.by_length.at(0).pairs == 1);
  CHECK(s.by_length.at(3).elements == 1);
  CHECK(s.by_length.at(3).pairs == 4);
}

TEST_CASE("A1 census is entirely spherical") {
  const RootSystem a1(CartanType::parse("A1"));
  CensusSummary s;
  collect(a1, {}, &s);
  CHECK(s.group_order == 2);
  CHECK(s.pair_count == 3);
  CHECK(s.spherical_count == s.pair_count);
  CHECK(s.toric_count == 2);
}

TEST_CASE("census records are internally consistent") {
  for (const char* name : {"B3", "G2", "D4"}) {
    CAPTURE(name);
    const RootSystem rs(CartanType::parse(name));
    CensusSummary s;
    const auto records = collect(rs, {}, &s);
    CHECK(records.size() == s.pair_count);
    std::uint64_t elements = 0, pairs = 0, spherical = 0, toric = 0;
    for (const auto& [len, b] : s.by_length) {
      elements += b.elements;
      pairs += b.pairs;
      spherical += b.spherical;
      toric += b.toric;
    }
    CHECK(elements == s.group_order);
    CHECK(pairs == s.pair_count);
    CHECK(spherical == s.spherical_count);
    CHECK(toric == s.toric_count);
    CHECK(s.spherical_count <= s.pair_count);
    CHECK(s.toric_count <= s.group_order);

    int prev_len = 0;
    std::uint64_t toric_direct = 0;
    for (const CensusRecord& r : records) {
      const WeylElement w = from_word(rs, r.w_word);
      REQUIRE(static_cast<int>(r.w_word.size()) == r.length);
      REQUIRE(r.length >= prev_len);
      prev_len = r.length;
      REQUIRE(r.levi.is_subset_of(left_descents(rs, w)));
      const WeylElement d = multiply(longest_parabolic(rs, r.levi), w);
      REQUIRE(from_word(rs, r.d_word) == d);
      REQUIRE(r.spherical == (length(rs, d) == support(rs, d).size()));
      if (r.levi.empty() && length(rs, w) == support(rs, w).size()) ++toric_direct;
    }
    CHECK(toric_direct == s.toric_count);
  }
}

TEST_CASE("F4 census") {
  const RootSystem f4(CartanType::parse("F4"));
  const CensusSummary s = run_census(f4, {});
  CHECK(s.group_order == 1152);
  CHECK(s.by_length.rbegin()->first == 24);
}

TEST_CASE("census is deterministic and independent of job count") {
  const RootSystem b3(CartanType::parse("B3"));
  CensusOptions one, three;
  three.jobs = 3;
  const auto a = collect(b3, one);
  const auto b = collect(b3, one);
  const auto c = collect(b3, three);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("cap is enforced before any output") {
  const RootSystem f4(CartanType::parse("F4"));
  CensusOptions opts;
  opts.cap = 1000;
  int emitted = 0;
  opts.sink = [&](const CensusRecord&) { ++emitted; };
  CHECK_THROWS_AS(run_census(f4, opts), BudgetExceeded);
  CHECK(emitted == 0);
  CHECK_THROWS_AS(run_census(RootSystem(CartanType::parse("E8")), {}), BudgetExceeded);
}

TEST_CASE("full-descent-only mode") {
  const RootSystem d4(CartanType::parse("D4"));
  CensusOptions opts;
  opts.levi_mode = LeviMode::FullDescentOnly;
  CensusSummary s;
  const auto records = collect(d4, opts, &s);
  CHECK(s.pair_count == 192);
  for (const CensusRecord& r : records) CHECK(r.levi == left_descents(d4, from_word(d4, r.w_word)));
  // The D4 counterexample appears with its full descent set.
  bool seen = false;
  for (const CensusRecord& r : records) {
    if (from_word(d4, r.w_word) == from_word(d4, fixtures::kD4Word)) {
      seen = true;
      CHECK(r.levi == fixtures::kD4Levi);
      CHECK_FALSE(r.spherical);
    }
  }
  CHECK(seen);
}

TEST_CASE("deterministic sampling") {
  CHECK(default_sample_fraction(500) == 1.0);
  CHECK(default_sample_fraction(501) == 0.05);
  int hits = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) hits += in_sample(k, 0.05);
  CHECK(hits == 50);
  for (std::uint64_t k = 0; k < 10; ++k) {
    CHECK(in_sample(k, 1.0));
    CHECK_FALSE(in_sample(k, 0.0));
  }
}

TEST_CASE("cross-check on A2") {
  const RootSystem a2(CartanType::parse("A2"));
  const auto records = collect(a2, {});
  const std::vector<Weight> battery = {{1, 0}, {0, 1}, {1, 1}};
  const CrossCheckReport r = cross_check(a2, records, battery);
  CHECK(r.violations.empty());
  CHECK(r.spherical_checked == 12);
  CHECK(r.nonspherical_checked == 1);
  CHECK(r.witnesses_found == 1);
  CHECK(r.inconclusive == 0);

  const CrossCheckReport empty = cross_check(a2, records, {});
  CHECK(empty.violations.empty());
  CHECK(empty.spherical_checked == 12);

  CrossCheckOptions par;
  par.jobs = 4;
  const CrossCheckReport r4 = cross_check(a2, records, battery, par);
  CHECK(r4.witnesses_found == r.witnesses_found);
  CHECK(r4.spherical_checked == r.spherical_checked);

  const std::vector<Weight> bad = {{-1, 0}};
  CHECK_THROWS_AS(cross_check(a2, records, bad), InvalidInput);
}

TEST_CASE("cross-check finds the D4 witness and flags a mislabelled record") {
  const RootSystem d4(CartanType::parse("D4"));
  const auto cls = classify(d4, from_word(d4, fixtures::kD4Word), fixtures::kD4Levi);
  CensusRecord rec{d4.type(), cls.w_word, cls.len_w, fixtures::kD4Levi, cls.d_word, cls.is_spherical};
  const std::vector<Weight> battery = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const std::vector<CensusRecord> one{rec};
  const CrossCheckReport r = cross_check(d4, one, battery);
  CHECK(r.witnesses_found == 1);
  CHECK(r.violations.empty());

  // Claiming the pair is spherical must surface a violation for some weight
  // of a battery that contains a witness.
  rec.spherical = true;
  const WitnessResult wr = witness_search(d4, from_word(d4, fixtures::kD4Word), fixtures::kD4Levi);
  REQUIRE(wr.lambda);
  const std::vector<Weight> with_witness{*wr.lambda};
  const std::vector<CensusRecord> liar{rec};
  const CrossCheckReport bad = cross_check(d4, liar, with_witness);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].lambda == *wr.lambda);
  CHECK(bad.violations[0].witness.multiplicity >= 2);
}

TEST_CASE("toric counts match the Coxeter-element count of each Dynkin subgraph") {
  // Products of distinct simple reflections: a forest with e edges has 2^e
  // Coxeter elements, so the total is the sum of 2^{e(S)} over node subsets S.
  for (const char* name : {"B3", "C4", "D4", "D5", "F4", "G2", "E6"}) {
    CAPTURE(name);
    const RootSystem rs(CartanType::parse(name));
    std::uint64_t expected = 0;
    for (NodeSet s : NodeSet::all(rs.rank()).subsets()) {
      int edges = 0;
      for (int i : s.nodes())
        for (int j : s.nodes())
          if (i < j && rs.cartan()(i - 1, j - 1) != 0) ++edges;
      expected += std::uint64_t{1} << edges;
    }
    CensusOptions opts;
    opts.levi_mode = LeviMode::FullDescentOnly;
    CHECK(run_census(rs, opts).toric_count == expected);
  }
}

TEST_CASE("census totals regression") {
  struct Row {
    const char* type;
    std::uint64_t order, pairs, spherical, toric;
  };
  for (const Row& row : {Row{"B2", 8, 17, 12, 5}, Row{"G2", 12, 25, 12, 5},
                         Row{"B3", 48, 147, 52, 13}, Row{"D4", 192, 865, 240, 35},
                         Row{"F4", 1152, 5089, 228, 34}}) {
    CAPTURE(row.type);
    const CensusSummary s = run_census(RootSystem(CartanType::parse(row.type)), {});
    CHECK(s.group_order == row.order);
    CHECK(s.pair_count == row.pairs);
    CHECK(s.spherical_count == row.spherical);
    CHECK(s.toric_count == row.toric);
  }
  // B_n and C_n share a Coxeter group, so their censuses agree.
  const CensusSummary b = run_census(RootSystem(CartanType::parse("B4")), {});
  const CensusSummary c = run_census(RootSystem(CartanType::parse("C4")), {});
  CHECK(b.pair_count == c.pair_count);
  CHECK(b.spherical_count == c.spherical_count);
}
