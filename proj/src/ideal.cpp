#include "bettisplit/ideal.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace bettisplit {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
  if (a.num_vars() != b.num_vars())
    throw AmbientMismatch(std::string(op) + ": ideals in " + std::to_string(a.num_vars()) + " and " +
                          std::to_string(b.num_vars()) + " variables");
}

// Appends every exponent vector of total degree `remaining` supported on
// vars[pos..] to `out`, completing `current`.
void enumerate_degree(std::span<const std::size_t> vars, std::size_t pos, std::uint64_t remaining,
                      std::vector<Exponent>& current, std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    current[vars[pos]] = static_cast<Exponent>(remaining);
    out.emplace_back(current);
    current[vars[pos]] = 0;
    return;
  }
  for (std::uint64_t e = remaining + 1; e-- > 0;) {
    current[vars[pos]] = static_cast<Exponent>(e);
    enumerate_degree(vars, pos + 1, remaining - e, current, out);
  }
  current[vars[pos]] = 0;
}

std::vector<Monomial> monomials_on(std::span<const std::size_t> zero_based_vars, std::size_t n, std::uint64_t d) {
  std::vector<Monomial> out;
  if (zero_based_vars.empty()) {
    if (d == 0)
      out.emplace_back(n);
    return out;
  }
  std::vector<Exponent> current(n, 0);
  enumerate_degree(zero_based_vars, 0, d, current, out);
  return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : MonomialIdeal(minimalize(std::move(gens), n)) {}

MonomialIdeal MonomialIdeal::zero(std::size_t n) { return MonomialIdeal(Trusted{}, n, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(Trusted{}, n, {Monomial(n)}); }

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.num_vars() != n_)
    throw AmbientMismatch("membership test for a monomial in " + std::to_string(m.num_vars()) + " variables");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_minimal_generator(const Monomial& m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m, degree_lex_less);
}

std::uint64_t MonomialIdeal::indeg() const {
  if (gens_.empty())
    throw PreconditionError("indeg of the zero ideal");
  return gens_.front().degree();
}

std::uint64_t MonomialIdeal::max_generator_degree() const {
  if (gens_.empty())
    throw PreconditionError("generator degree of the zero ideal");
  return gens_.back().degree();
}

bool MonomialIdeal::is_equigenerated() const { return !gens_.empty() && indeg() == max_generator_degree(); }

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (Exponent e : g.exponents())
      if (e > 1)
        return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty())
    return "0";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty())
      out += ", ";
    out += g.to_string();
  }
  return out;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.num_vars() != n)
      throw MalformedInput("monomial " + g.to_string() + " has " + std::to_string(g.num_vars()) +
                           " exponents, expected " + std::to_string(n));
  std::sort(gens.begin(), gens.end(), degree_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // A proper divisor has strictly smaller degree, hence sits earlier.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant)
      kept.push_back(std::move(g));
  }
  return MonomialIdeal(MonomialIdeal::Trusted{}, n, std::move(kept));
}

MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k) {
  require_same_ring(j, k, "ideal_sum");
  std::vector<Monomial> gens(j.generators().begin(), j.generators().end());
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return minimalize(std::move(gens), j.num_vars());
}

MonomialIdeal ideal_intersection(const MonomialIdeal& j, const MonomialIdeal& k) {
  require_same_ring(j, k, "ideal_intersection");
  std::unordered_set<Monomial, MonomialHash> lcms;
  lcms.reserve(j.size() * k.size());
  for (const auto& a : j.generators())
    for (const auto& b : k.generators())
      lcms.insert(a.lcm(b));
  return minimalize(std::vector<Monomial>(lcms.begin(), lcms.end()), j.num_vars());
}

MonomialIdeal scale_by_monomial(const Monomial& m, const MonomialIdeal& ideal) {
  if (m.num_vars() != ideal.num_vars())
    throw AmbientMismatch("scale_by_monomial: monomial and ideal in different rings");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators())
    gens.push_back(m * g);
  // Multiplication by a fixed monomial preserves both divisibility and
  // degree_lex_less order.
  return MonomialIdeal(MonomialIdeal::Trusted{}, ideal.num_vars(), std::move(gens));
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, VarIndex i) {
  const std::size_t n = ideal.num_vars();
  if (i < 1 || i > n)
    throw MalformedInput("colon by x" + std::to_string(i) + " in " + std::to_string(n) + " variables");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    if (e[i - 1] > 0)
      --e[i - 1];
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), n);
}

MonomialIdeal power_of_subset_ideal(std::span<const VarIndex> vars, unsigned a, std::size_t n) {
  std::vector<std::size_t> zero_based;
  for (VarIndex v : vars) {
    if (v < 1 || v > n)
      throw MalformedInput("variable x" + std::to_string(v) + " outside x1..x" + std::to_string(n));
    zero_based.push_back(v - 1);
  }
  std::sort(zero_based.begin(), zero_based.end());
  zero_based.erase(std::unique(zero_based.begin(), zero_based.end()), zero_based.end());
  if (a == 0)
    return MonomialIdeal::unit(n);
  return minimalize(monomials_on(zero_based, n, a), n);
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, std::uint64_t j) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k)
    all[k] = k;

  std::unordered_set<Monomial, MonomialHash> degree_j;
  for (const auto& g : ideal.generators()) {
    const auto d = g.degree();
    if (d > j)
      break; // generators are sorted by degree
    for (const auto& m : monomials_on(all, n, j - d))
      degree_j.insert(g * m);
  }
  return minimalize(std::vector<Monomial>(degree_j.begin(), degree_j.end()), n);
}

MonomialIdeal squarefree_component(const MonomialIdeal& ideal, std::uint64_t j) {
  if (!ideal.is_squarefree())
    throw PreconditionError("squarefree_component needs a squarefree ideal");
  const std::size_t n = ideal.num_vars();
  std::unordered_set<Monomial, MonomialHash> degree_j;
  for (const auto& g : ideal.generators()) {
    const auto d = g.degree();
    if (d > j)
      break;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] == 0)
        free.push_back(k);
    const std::size_t extra = j - d;
    if (extra > free.size())
      continue;
    // all extra-element subsets of the free variables
    std::vector<std::size_t> pick(extra);
    for (std::size_t t = 0; t < extra; ++t)
      pick[t] = t;
    while (true) {
      std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
      for (std::size_t t : pick)
        e[free[t]] = 1;
      degree_j.insert(Monomial(std::move(e)));
      std::size_t t = extra;
      while (t > 0 && pick[t - 1] == free.size() - extra + t - 1)
        --t;
      if (t == 0)
        break;
      ++pick[t - 1];
      for (std::size_t u = t; u < extra; ++u)
        pick[u] = pick[u - 1] + 1;
    }
  }
  return minimalize(std::vector<Monomial>(degree_j.begin(), degree_j.end()), n);
}

bool partition_is_valid(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k) {
  require_same_ring(i, j, "partition_is_valid");
  require_same_ring(i, k, "partition_is_valid");
  if (j.is_zero() || k.is_zero() || j.size() + k.size() != i.size())
    return false;
  for (const auto& g : j.generators())
    if (!i.is_minimal_generator(g) || k.is_minimal_generator(g))
      return false;
  for (const auto& g : k.generators())
    if (!i.is_minimal_generator(g))
      return false;
  return true;
}

MonomialIdeal relabel(const MonomialIdeal& ideal, std::size_t new_n, std::span<const VarIndex> image) {
  if (image.size() != ideal.num_vars())
    throw MalformedInput("relabel: image has " + std::to_string(image.size()) + " entries, expected " +
                         std::to_string(ideal.num_vars()));
  std::vector<bool> used(new_n + 1, false);
  for (VarIndex v : image) {
    if (v < 1 || v > new_n || used[v])
      throw MalformedInput("relabel: image is not an injection into x1..x" + std::to_string(new_n));
    used[v] = true;
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(new_n, 0);
    for (std::size_t k = 0; k < image.size(); ++k)
      e[image[k] - 1] = g[k];
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), new_n);
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k)
    all[k] = k;
  return monomials_on(all, n, d);
}

} // namespace bettisplit
