#include "bettisplit/splitting.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

namespace bettisplit {

namespace {

void require_partition(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k) {
  if (!partition_is_valid(i, j, k))
    throw PreconditionError("G(I) is not the disjoint union of G(J) and G(K) with both parts nonzero");
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::uint64_t t = 1; t <= k; ++t)
    r = r * (n - k + t) / t;
  return r;
}

SplittingReport check_with_table(const BettiTable& ti, const MonomialIdeal& j, const MonomialIdeal& k,
                                 FieldSpec field, const ComputeOptions& options) {
  return compare_splitting_tables(ti, graded_betti(j, field, options), graded_betti(k, field, options),
                                  graded_betti(ideal_intersection(j, k), field, options));
}

std::pair<MonomialIdeal, MonomialIdeal> split_by_mask(const MonomialIdeal& ideal, std::uint64_t mask) {
  std::vector<Monomial> in_j;
  std::vector<Monomial> in_k;
  const auto gens = ideal.generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    ((mask >> g) & 1 ? in_j : in_k).push_back(gens[g]);
  return {MonomialIdeal(ideal.num_vars(), std::move(in_j)), MonomialIdeal(ideal.num_vars(), std::move(in_k))};
}

} // namespace

SplittingReport compare_splitting_tables(BettiTable ti, BettiTable tj, BettiTable tk, BettiTable tjk) {
  std::set<BettiTable::Key> keys;
  for (const auto* t : {&ti, &tj, &tk})
    for (const auto& [key, value] : t->entries())
      keys.insert(key);
  for (const auto& [key, value] : tjk.entries())
    keys.insert({key.first + 1, key.second});

  SplittingReport report;
  report.verdict = true;
  for (const auto& [i, j] : keys) {
    if (ti(i, j) != tj(i, j) + tk(i, j) + tjk(i - 1, j)) {
      report.verdict = false;
      report.witness = BettiTable::Key{i, j};
      break;
    }
  }
  report.table_i = std::move(ti);
  report.table_j = std::move(tj);
  report.table_k = std::move(tk);
  report.table_intersection = std::move(tjk);
  return report;
}

SplittingReport is_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                   FieldSpec field, const ComputeOptions& options) {
  require_partition(i, j, k);
  return check_with_table(graded_betti(i, field, options), j, k, field, options);
}

std::pair<MonomialIdeal, MonomialIdeal> xi_split(const MonomialIdeal& ideal, VarIndex i) {
  const std::size_t n = ideal.num_vars();
  if (i < 1 || i > n)
    throw MalformedInput("x" + std::to_string(i) + " is not a variable of a ring with " + std::to_string(n) +
                         " variables");
  std::vector<Monomial> divisible;
  std::vector<Monomial> rest;
  for (const auto& g : ideal.generators())
    (g[i - 1] > 0 ? divisible : rest).push_back(g);
  if (divisible.empty() || rest.empty())
    throw DegenerateSplit("x" + std::to_string(i) + "-partition leaves " + (divisible.empty() ? "J" : "K") +
                          " without generators");
  return {MonomialIdeal(n, std::move(divisible)), MonomialIdeal(n, std::move(rest))};
}

std::vector<VarIndex> admits_xi_splitting(const MonomialIdeal& ideal, FieldSpec field,
                                          const ComputeOptions& options) {
  if (ideal.is_zero())
    throw PreconditionError("x_i-splitting of the zero ideal");
  std::vector<VarIndex> out;
  std::optional<BettiTable> ti;
  for (VarIndex v = 1; v <= ideal.num_vars(); ++v) {
    std::optional<std::pair<MonomialIdeal, MonomialIdeal>> parts;
    try {
      parts = xi_split(ideal, v);
    } catch (const DegenerateSplit&) {
      continue;
    }
    if (!ti)
      ti = graded_betti(ideal, field, options);
    if (check_with_table(*ti, parts->first, parts->second, field, options).verdict)
      out.push_back(v);
  }
  return out;
}

SplittingSearch search_betti_splittings(const MonomialIdeal& ideal, FieldSpec field, std::size_t limit,
                                        const ComputeOptions& options, std::size_t generator_bound) {
  const std::size_t g = ideal.size();
  if (g > generator_bound || g > 63)
    throw ResourceError("splitting search over " + std::to_string(g) + " generators exceeds the bound of " +
                        std::to_string(std::min<std::size_t>(generator_bound, 63)));

  SplittingSearch result;
  if (g < 2)
    return result;
  result.unordered_partitions = (std::uint64_t{1} << (g - 1)) - 1;
  for (std::uint64_t s = 1; s <= g / 2; ++s)
    result.size_limited_choices += binomial_u64(g, s);

  const BettiTable ti = graded_betti(ideal, field, options);
  ComputeOptions inner = options;
  inner.jobs = 1;

  // J always holds generator 0; the other g-1 generators are free, except
  // that all of them going to J would leave K empty.
  auto mask_of = [](std::uint64_t s) { return (s << 1) | 1; };
  const std::uint64_t total = result.unordered_partitions;
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  const std::uint64_t block = jobs == 1 ? 1 : 16 * jobs;

  for (std::uint64_t start = 0; start < total; start += block) {
    const std::uint64_t stop = std::min(total, start + block);
    std::vector<std::optional<SplittingCandidate>> found(stop - start);
    auto work = [&](std::uint64_t s) {
      const auto [j, k] = split_by_mask(ideal, mask_of(s));
      auto report = check_with_table(ti, j, k, field, inner);
      if (report.verdict)
        found[s - start] = SplittingCandidate{mask_of(s), j, k, std::move(report)};
    };
    if (jobs == 1) {
      for (std::uint64_t s = start; s < stop; ++s)
        work(s);
    } else {
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> workers;
      for (std::size_t w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
          try {
            for (std::uint64_t s = start + w; s < stop; s += jobs)
              work(s);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto& t : workers)
        t.join();
      for (const auto& e : errors)
        if (e)
          std::rethrow_exception(e);
    }
    for (std::uint64_t s = start; s < stop; ++s) {
      ++result.partitions_examined;
      if (found[s - start]) {
        result.splittings.push_back(std::move(*found[s - start]));
        if (limit != 0 && result.splittings.size() >= limit)
          return result;
      }
    }
  }
  return result;
}

bool linear_splitting_criterion(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                FieldSpec field, const ComputeOptions& options) {
  require_partition(i, j, k);
  if (!i.is_equigenerated())
    throw PreconditionError("I must be generated in a single degree");
  const BettiTable ti = graded_betti(i, field, options);
  const int d = static_cast<int>(i.indeg());
  if (regularity(ti) != d)
    throw PreconditionError("I does not have a " + std::to_string(d) + "-linear resolution");

  const MonomialIdeal jk = ideal_intersection(j, k);
  const BettiTable tj = graded_betti(j, field, options);
  const BettiTable tk = graded_betti(k, field, options);
  const BettiTable tjk = graded_betti(jk, field, options);
  const bool both_linear = regularity(tj) == d && regularity(tk) == d;
  const bool splits = compare_splitting_tables(ti, tj, tk, tjk).verdict;

  if (both_linear != splits)
    throw InvariantViolation("linear I: splitting verdict disagrees with linearity of the parts");
  if (both_linear && regularity(tjk) != d + 1)
    throw InvariantViolation("J and K are linear but J ∩ K is not (d+1)-linear");
  return both_linear;
}

bool componentwise_splitting_criterion(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                       FieldSpec field, const ComputeOptions& options) {
  require_partition(i, j, k);
  const bool holds = is_componentwise_linear(j, field, options) && is_componentwise_linear(k, field, options);
  if (holds && !is_betti_splitting(i, j, k, field, options).verdict)
    throw InvariantViolation("J and K are componentwise linear but I = J + K is not a Betti splitting");
  return holds;
}

} // namespace bettisplit
