#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schubert/characters.hpp"
#include "schubert/node_set.hpp"
#include "schubert/root_system.hpp"
#include "schubert/sphericality.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// One classified pair (w, I), as persisted in census JSONL files.
struct CensusRecord {
  CartanType type;
  Word w_word;
  int length = 0;
  NodeSet levi;
  Word d_word;
  bool spherical = false;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct LengthBucket {
  std::uint64_t elements = 0;
  std::uint64_t pairs = 0;
  std::uint64_t spherical = 0;
  std::uint64_t toric = 0;
};

struct CensusSummary {
  std::uint64_t group_order = 0;
  std::uint64_t pair_count = 0;
  std::uint64_t spherical_count = 0;
  std::uint64_t toric_count = 0;
  std::map<int, LengthBucket> by_length;
};

enum class LeviMode { AllSubsets, FullDescentOnly };

using CensusSink = std::function<void(const CensusRecord&)>;

struct CensusOptions {
  LeviMode levi_mode = LeviMode::AllSubsets;
  std::uint64_t cap = kDefaultGroupCap;
  unsigned jobs = 1;
  CensusSink sink;  // may be empty
};

/// Classifies every pair (w, I) with w in W and I admissible for w (any subset
/// of the left descents, or the full descent set). Records reach the sink in
/// enumeration order regardless of `jobs`. Throws BudgetExceeded before
/// emitting anything if |W| > cap.
CensusSummary run_census(const RootSystem& rs, const CensusOptions& options);

struct Violation {
  CensusRecord record;
  Weight lambda;
  DecompositionEntry witness;
};

struct CrossCheckReport {
  std::uint64_t spherical_checked = 0;
  std::uint64_t nonspherical_checked = 0;
  std::uint64_t witnesses_found = 0;
  std::uint64_t inconclusive = 0;
  std::vector<Violation> violations;  // spherical records that are not multiplicity-free
};

struct CrossCheckOptions {
  double sample = 1.0;  // fraction of records examined
  WitnessOptions witness;
  unsigned jobs = 1;
};

/// Default sampling density: everything for groups up to 500 elements, 5% beyond.
double default_sample_fraction(std::uint64_t group_order);

/// Whether record index k (0-based) is in a deterministic sample of the given density.
bool in_sample(std::uint64_t k, double fraction);

/// Character-level audit of census records. Spherical records must be
/// multiplicity-free for every battery weight; non-spherical ones get a
/// witness search whose misses are counted, not reported as failures.
CrossCheckReport cross_check(const RootSystem& rs, std::span<const CensusRecord> records,
                             std::span<const Weight> battery,
                             const CrossCheckOptions& options = {});

}  // namespace schubert
