#include "schubert/census.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

struct ChunkResult {
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

void merge_into(CensusSummary& total, const CensusSummary& part) {
  total.group_order += part.group_order;
  total.pair_count += part.pair_count;
  total.spherical_count += part.spherical_count;
  total.toric_count += part.toric_count;
  for (const auto& [len, b] : part.by_length) {
    LengthBucket& t = total.by_length[len];
    t.elements += b.elements;
    t.pairs += b.pairs;
    t.spherical += b.spherical;
    t.toric += b.toric;
  }
}

ChunkResult classify_chunk(const RootSystem& rs, std::span<const WeylElement> elements,
                           const std::vector<WeylElement>& longest_by_mask, LeviMode mode,
                           bool keep_records) {
  ChunkResult out;
  for (const WeylElement& w : elements) {
    const NodeSet descents = left_descents(rs, w);
    const std::vector<NodeSet> levis =
        mode == LeviMode::AllSubsets ? descents.subsets() : std::vector<NodeSet>{descents};

    const bool toric = is_standard_coxeter(rs, w);
    int len = 0;
    for (NodeSet levi : levis) {
      const ClassificationResult r =
          classify_with_longest(rs, w, levi, longest_by_mask[levi.bits()], descents);
      len = r.len_w;
      ++out.summary.pair_count;
      LengthBucket& bucket = out.summary.by_length[len];
      ++bucket.pairs;
      if (r.is_spherical) {
        ++out.summary.spherical_count;
        ++bucket.spherical;
      }
      if (keep_records) {
        out.records.push_back(
            CensusRecord{rs.type(), r.w_word, r.len_w, levi, r.d_word, r.is_spherical});
      }
    }
    LengthBucket& bucket = out.summary.by_length[len];
    ++out.summary.group_order;
    ++bucket.elements;
    if (toric) {
      ++out.summary.toric_count;
      ++bucket.toric;
    }
  }
  return out;
}

}  // namespace

CensusSummary run_census(const RootSystem& rs, const CensusOptions& options) {
  const std::vector<WeylElement> elements = enumerate_group(rs, options.cap);

  // Every group that fits under a realistic cap has rank well below 20.
  if (rs.rank() > 20) throw BudgetExceeded("census rank too large");
  std::vector<WeylElement> longest_by_mask;
  longest_by_mask.reserve(std::size_t{1} << rs.rank());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rs.rank()); ++mask)
    longest_by_mask.push_back(longest_parabolic(rs, NodeSet::from_bits(mask)));

  const bool keep = static_cast<bool>(options.sink);
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, elements.size());
  const std::size_t chunk = (elements.size() + jobs - 1) / jobs;
  std::span<const WeylElement> all(elements);

  std::vector<ChunkResult> parts;
  if (jobs == 1) {
    parts.push_back(classify_chunk(rs, all, longest_by_mask, options.levi_mode, keep));
  } else {
    std::vector<std::future<ChunkResult>> futures;
    for (std::size_t start = 0; start < elements.size(); start += chunk) {
      auto slice = all.subspan(start, std::min(chunk, elements.size() - start));
      futures.push_back(std::async(std::launch::async, [&, slice] {
        return classify_chunk(rs, slice, longest_by_mask, options.levi_mode, keep);
      }));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  // Chunks are contiguous, so emitting them in sequence preserves the
  // enumeration order.
  CensusSummary summary;
  for (const ChunkResult& part : parts) {
    merge_into(summary, part.summary);
    if (keep)
      for (const CensusRecord& r : part.records) options.sink(r);
  }
  return summary;
}

double default_sample_fraction(std::uint64_t group_order) {
  return group_order > 500 ? 0.05 : 1.0;
}

bool in_sample(std::uint64_t k, double fraction) {
  if (fraction >= 1.0) return true;
  if (fraction <= 0.0) return false;
  return std::floor(static_cast<double>(k + 1) * fraction) >
         std::floor(static_cast<double>(k) * fraction);
}

namespace {

CrossCheckReport check_records(const RootSystem& rs, std::span<const CensusRecord> records,
                               std::span<const Weight> battery,
                               const CrossCheckOptions& options) {
  CrossCheckReport report;
  for (const CensusRecord& rec : records) {
    const WeylElement w = from_word(rs, rec.w_word);
    if (rec.spherical) {
      ++report.spherical_checked;
      for (const Weight& lambda : battery) {
        MultiplicityCheck mc =
            is_multiplicity_free(rs, lambda, w, rec.levi, options.witness.term_ceiling);
        if (!mc.multiplicity_free) report.violations.push_back({rec, lambda, *mc.witness});
      }
    } else {
      ++report.nonspherical_checked;
      WitnessOptions wopts = options.witness;
      wopts.jobs = 1;
      const WitnessResult wr = witness_search(rs, w, rec.levi, wopts);
      if (wr.status == WitnessStatus::Found) {
        ++report.witnesses_found;
      } else {
        ++report.inconclusive;
      }
    }
  }
  return report;
}

}  // namespace

CrossCheckReport cross_check(const RootSystem& rs, std::span<const CensusRecord> records,
                             std::span<const Weight> battery, const CrossCheckOptions& options) {
  for (const Weight& lambda : battery) {
    if (lambda.rank() != rs.rank() || !lambda.is_dominant()) {
      throw InvalidInput("battery weight " + lambda.to_string() + " is not a dominant weight of " +
                         rs.type().name());
    }
  }

  std::vector<CensusRecord> sampled;
  for (std::size_t k = 0; k < records.size(); ++k)
    if (in_sample(k, options.sample)) sampled.push_back(records[k]);
  if (sampled.empty()) return {};

  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, sampled.size());
  if (jobs == 1) return check_records(rs, sampled, battery, options);

  const std::size_t chunk = (sampled.size() + jobs - 1) / jobs;
  std::span<const CensusRecord> all(sampled);
  std::vector<std::future<CrossCheckReport>> futures;
  for (std::size_t start = 0; start < sampled.size(); start += chunk) {
    auto slice = all.subspan(start, std::min(chunk, sampled.size() - start));
    futures.push_back(std::async(std::launch::async, [&, slice] {
      return check_records(rs, slice, battery, options);
    }));
  }
  CrossCheckReport total;
  for (auto& f : futures) {
    CrossCheckReport part = f.get();
    total.spherical_checked += part.spherical_checked;
    total.nonspherical_checked += part.nonspherical_checked;
    total.witnesses_found += part.witnesses_found;
    total.inconclusive += part.inconclusive;
    for (Violation& v : part.violations) total.violations.push_back(std::move(v));
  }
  return total;
}

}  // namespace schubert
