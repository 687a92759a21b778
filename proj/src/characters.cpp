#include "schubert/characters.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <tuple>

#include "schubert/errors.hpp"

namespace schubert {

WeightPoly WeightPoly::monomial(const Weight& w, std::int64_t coeff) {
  WeightPoly p;
  p.add(w, coeff);
  return p;
}

void WeightPoly::add(const Weight& w, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t WeightPoly::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t WeightPoly::mass() const {
  std::int64_t m = 0;
  for (const auto& [w, c] : terms_) m += c;
  return m;
}

std::vector<std::pair<Weight, std::int64_t>> WeightPoly::sorted_terms() const {
  std::vector<std::pair<Weight, std::int64_t>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
  return out;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WeightPoly& WeightPoly::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

namespace {

void check_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank()) {
    throw InvalidInput("node " + std::to_string(node) + " out of range 1.." +
                       std::to_string(rs.rank()));
  }
}

void check_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank()) {
    throw InvalidInput("weight " + w.to_string() + " has " + std::to_string(w.rank()) +
                       " coordinates, expected " + std::to_string(rs.rank()));
  }
}

bool is_levi_dominant(const Weight& mu, NodeSet levi) {
  for (int i : levi.nodes())
    if (mu.at(i) < 0) return false;
  return true;
}

}  // namespace

Weight reflect_weight(const RootSystem& rs, const Weight& lambda, int node) {
  check_node(rs, node);
  const int k = lambda.at(node);
  if (k == 0) return lambda;
  return lambda - k * simple_root_in_weight_basis(rs, node);
}

WeightPoly demazure_op(const RootSystem& rs, const WeightPoly& f, int node,
                       std::size_t term_ceiling) {
  check_node(rs, node);
  const Weight alpha = simple_root_in_weight_basis(rs, node);
  WeightPoly out;
  for (const auto& [lambda, c] : f.terms()) {
    const int k = lambda.at(node);
    if (k >= 0) {
      Weight mu = lambda;
      for (int j = 0; j <= k; ++j) {
        out.add(mu, c);
        mu -= alpha;
      }
    } else if (k <= -2) {
      Weight mu = lambda;
      for (int j = 1; j <= -k - 1; ++j) {
        mu += alpha;
        out.add(mu, -c);
      }
    }
    if (out.size() > term_ceiling) {
      throw BudgetExceeded("character exceeded " + std::to_string(term_ceiling) + " terms");
    }
  }
  return out;
}

WeightPoly apply_demazure_word(const RootSystem& rs, WeightPoly f, const Word& word,
                               std::size_t term_ceiling) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = demazure_op(rs, f, *it, term_ceiling);
  return f;
}

WeightPoly demazure_char(const RootSystem& rs, const Weight& lambda, const WeylElement& w,
                         std::size_t term_ceiling) {
  check_rank(rs, lambda);
  if (!lambda.is_dominant()) {
    throw InvalidInput("weight " + lambda.to_string() + " is not dominant");
  }
  return apply_demazure_word(rs, WeightPoly::monomial(lambda), reduced_word(rs, w),
                             term_ceiling);
}

WeightPoly levi_irreducible_char(const RootSystem& rs, const Weight& mu, NodeSet levi,
                                 std::size_t term_ceiling) {
  check_rank(rs, mu);
  if (!is_levi_dominant(mu, levi)) {
    throw InvalidInput("weight " + mu.to_string() + " is not dominant for the Levi subgroup");
  }
  return apply_demazure_word(rs, WeightPoly::monomial(mu),
                             reduced_word(rs, longest_parabolic(rs, levi)), term_ceiling);
}

std::vector<std::int64_t> levi_height(const RootSystem& rs, NodeSet levi) {
  std::vector<std::int64_t> h(rs.rank(), 0);
  for (const RootVector& coroot : rs.positive_coroots()) {
    bool inside = true;
    for (int k = 0; k < rs.rank() && inside; ++k) inside = coroot[k] == 0 || levi.contains(k + 1);
    if (!inside) continue;
    for (int k = 0; k < rs.rank(); ++k) h[k] += coroot[k];
  }
  return h;
}

std::vector<DecompositionEntry> decompose_levi(const RootSystem& rs, WeightPoly f, NodeSet levi,
                                               std::size_t term_ceiling) {
  // Every weight of char(V_{L_I, nu}) is nu minus a nonnegative combination of
  // alpha_i, i in I, so it has strictly smaller height unless it equals nu.
  // Visiting weights by descending height therefore always visits a
  // dominance-maximal weight of what is left; ties go to the
  // lexicographically largest coordinates.
  const std::vector<std::int64_t> h = levi_height(rs, levi);
  auto height = [&](const Weight& w) {
    std::int64_t s = 0;
    for (int k = 0; k < w.rank(); ++k) s += h[k] * w[k];
    return s;
  };

  std::vector<std::pair<std::int64_t, Weight>> order;
  order.reserve(f.size());
  for (const auto& [w, c] : f.terms()) order.emplace_back(height(w), w);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second) > std::tie(b.first, b.second);
  });

  const Word w0_word = reduced_word(rs, longest_parabolic(rs, levi));
  std::vector<DecompositionEntry> entries;
  for (const auto& [ht, nu] : order) {
    const std::int64_t m = f.coeff(nu);
    if (m == 0) continue;
    if (m < 0) {
      throw NotLeviCharacter("negative coefficient " + std::to_string(m) + " at weight " +
                             nu.to_string());
    }
    if (!is_levi_dominant(nu, levi)) {
      throw NotLeviCharacter("maximal weight " + nu.to_string() +
                             " is not dominant for the Levi subgroup");
    }
    f -= m * apply_demazure_word(rs, WeightPoly::monomial(nu), w0_word, term_ceiling);
    entries.push_back({nu, m});
  }
  if (!f.empty()) {
    const auto& [w, c] = *f.terms().begin();
    throw NotLeviCharacter("residual coefficient " + std::to_string(c) + " at weight " +
                           w.to_string() + " after peeling");
  }

  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return graded_lex_less(a.mu, b.mu);
  });
  return entries;
}

MultiplicityCheck is_multiplicity_free(const RootSystem& rs, const Weight& lambda,
                                       const WeylElement& w, NodeSet levi,
                                       std::size_t term_ceiling) {
  const NodeSet descents = left_descents(rs, w);
  if (!levi.is_subset_of(descents)) {
    throw HypothesisViolation("levi set is not contained in the left descents of w");
  }
  MultiplicityCheck out;
  out.decomposition = decompose_levi(rs, demazure_char(rs, lambda, w, term_ceiling), levi,
                                     term_ceiling);
  for (const DecompositionEntry& e : out.decomposition) {
    if (e.multiplicity >= 2) {
      out.multiplicity_free = false;
      out.witness = e;
      break;
    }
  }
  return out;
}

std::vector<Weight> dominant_weights_up_to(int rank, int cap) {
  std::vector<Weight> out;
  std::vector<int> coords(rank, 0);
  for (;;) {
    out.emplace_back(coords);
    int k = rank - 1;
    while (k >= 0 && coords[k] == cap) coords[k--] = 0;
    if (k < 0) break;
    ++coords[k];
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

WitnessResult witness_search(const RootSystem& rs, const WeylElement& w, NodeSet levi,
                             const WitnessOptions& options) {
  if (!levi.is_subset_of(left_descents(rs, w))) {
    throw HypothesisViolation("levi set is not contained in the left descents of w");
  }
  const std::vector<Weight> candidates = dominant_weights_up_to(rs.rank(), options.coeff_cap);
  const std::size_t limit = std::min(candidates.size(), options.lambda_budget);
  const std::size_t batch = std::max(1u, options.jobs);

  auto evaluate = [&](const Weight& lambda) -> std::optional<MultiplicityCheck> {
    try {
      return is_multiplicity_free(rs, lambda, w, levi, options.term_ceiling);
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  };

  WitnessResult result;
  for (std::size_t start = 0; start < limit; start += batch) {
    const std::size_t stop = std::min(limit, start + batch);
    std::vector<std::optional<MultiplicityCheck>> checks(stop - start);
    if (batch == 1) {
      checks[0] = evaluate(candidates[start]);
    } else {
      std::vector<std::future<std::optional<MultiplicityCheck>>> futures;
      for (std::size_t k = start; k < stop; ++k)
        futures.push_back(std::async(std::launch::async, evaluate, std::cref(candidates[k])));
      for (std::size_t k = 0; k < futures.size(); ++k) checks[k] = futures[k].get();
    }
    // Results are consumed in candidate order, so the outcome does not depend
    // on which worker finished first.
    for (std::size_t k = 0; k < checks.size(); ++k) {
      ++result.lambdas_checked;
      if (!checks[k]) {
        result.status = WitnessStatus::Inconclusive;
        return result;
      }
      if (!checks[k]->multiplicity_free) {
        result.status = WitnessStatus::Found;
        result.lambda = candidates[start + k];
        result.witness = checks[k]->witness;
        return result;
      }
    }
  }
  result.status =
      limit < candidates.size() ? WitnessStatus::Inconclusive : WitnessStatus::Exhausted;
  return result;
}

}  // namespace schubert
