#include "bettisplit/betti.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <thread>
#include <unordered_set>

namespace bettisplit {

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (count == 0)
    return;
  if (i < 0)
    throw InvariantViolation("negative homological index in a Betti table");
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::operator()(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty())
    throw PreconditionError("projective dimension of an empty Betti table");
  int pd = 0;
  for (const auto& [key, value] : entries_)
    pd = std::max(pd, key.first);
  return pd;
}

BettiTable BettiTable::shifted(int shift) const {
  BettiTable out(field_, n_);
  for (const auto& [key, value] : entries_)
    out.add(key.first, key.second + shift, value);
  return out;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> points;
  for (const auto& g : ideal.generators()) {
    const std::size_t before = points.size();
    if (seen.insert(g).second)
      points.push_back(g);
    for (std::size_t k = 0; k < before; ++k) {
      Monomial m = g.lcm(points[k]);
      if (seen.insert(m).second)
        points.push_back(std::move(m));
    }
    if (points.size() > cap)
      throw ResourceError("lcm lattice exceeds the cap of " + std::to_string(cap) + " points");
  }
  std::sort(points.begin(), points.end(), degree_lex_less);
  return points;
}

namespace {

// Facets of K^b(I): for each generator g | x^b, the support of b minus the
// coordinates where g already reaches b. A face tau lies in K^b(I) iff it
// avoids all such tight coordinates of some g.
std::vector<FaceMask> koszul_facets(const MonomialIdeal& ideal, const Monomial& b) {
  const std::size_t n = ideal.num_vars();
  const FaceMask support = b.support_mask();
  std::vector<FaceMask> candidates;
  for (const auto& g : ideal.generators()) {
    if (!g.divides(b))
      continue;
    FaceMask tight = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (b[k] != 0 && g[k] == b[k])
        tight |= FaceMask{1} << k;
    candidates.push_back(support & ~tight);
  }
  return maximal_sets(std::move(candidates));
}

// Adds beta_{i,b} for one lattice point to `table`.
void accumulate_point(const MonomialIdeal& ideal, const Monomial& b, FieldSpec field, std::size_t face_cap,
                      BettiTable& table) {
  const auto facets = koszul_facets(ideal, b);
  if (facets.empty())
    return; // x^b not in I: void complex
  FaceMask common = facets.front();
  for (FaceMask f : facets)
    common &= f;
  if (common != 0)
    return; // a cone is acyclic

  std::vector<FaceMask> faces;
  for (FaceMask f : facets) {
    FaceMask sub = f;
    while (true) {
      faces.push_back(sub);
      if (sub == 0)
        break;
      sub = (sub - 1) & f;
    }
    if (faces.size() > 4 * face_cap) {
      std::sort(faces.begin(), faces.end());
      faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    }
    if (faces.size() > 4 * face_cap)
      throw ResourceError("Koszul complex exceeds the face cap of " + std::to_string(face_cap));
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.size() > face_cap)
    throw ResourceError("Koszul complex exceeds the face cap of " + std::to_string(face_cap));

  std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(std::popcount(facets.front())) + 1);
  for (FaceMask f : faces)
    by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  const auto homology = reduced_homology_of_faces(by_size, field);
  const auto degree = static_cast<int>(b.degree());
  for (std::size_t k = 0; k < homology.size(); ++k)
    table.add(static_cast<int>(k), degree, homology[k]);
}

} // namespace

SimplicialComplex koszul_subcomplex(const MonomialIdeal& ideal, const Monomial& b) {
  if (b.num_vars() != ideal.num_vars())
    throw AmbientMismatch("multidegree and ideal live in different rings");
  return {ideal.num_vars(), koszul_facets(ideal, b)};
}

BettiTable graded_betti(const MonomialIdeal& ideal, FieldSpec field, const ComputeOptions& options) {
  BettiTable table(field, ideal.num_vars());
  if (ideal.is_zero())
    return table;
  if (ideal.num_vars() > max_vertices)
    throw ResourceError("the Betti engine supports at most " + std::to_string(max_vertices) + " variables");
  if (ideal.max_generator_degree() > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / 4))
    throw OverflowError("generator degrees too large for Betti table keys");

  const auto lattice = lcm_lattice(ideal, options.lattice_cap);
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, lattice.size()));
  if (jobs == 1) {
    for (const auto& b : lattice)
      accumulate_point(ideal, b, field, options.face_cap, table);
    return table;
  }

  // Strided partition; the merge is a sum, so the result is independent of
  // scheduling.
  std::vector<BettiTable> partial(jobs, BettiTable(field, ideal.num_vars()));
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < lattice.size(); k += jobs)
          accumulate_point(ideal, lattice[k], field, options.face_cap, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers)
    t.join();
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  for (const auto& p : partial)
    for (const auto& [key, value] : p.entries())
      table.add(key.first, key.second, value);
  return table;
}

int regularity(const BettiTable& table) {
  if (table.empty())
    throw UndefinedError("regularity of an empty Betti table (zero ideal)");
  int reg = std::numeric_limits<int>::min();
  for (const auto& [key, value] : table.entries())
    reg = std::max(reg, key.second - key.first);
  return reg;
}

bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field, const ComputeOptions& options) {
  if (ideal.is_zero())
    throw PreconditionError("linear resolution of the zero ideal");
  if (!ideal.is_equigenerated())
    throw NotEquigenerated("ideal has generators in degrees " + std::to_string(ideal.indeg()) + " through " +
                           std::to_string(ideal.max_generator_degree()));
  return regularity(graded_betti(ideal, field, options)) == static_cast<int>(ideal.indeg());
}

std::optional<std::uint64_t> first_nonlinear_component(const MonomialIdeal& ideal, FieldSpec field,
                                                       const ComputeOptions& options) {
  if (ideal.is_zero())
    throw PreconditionError("componentwise linearity of the zero ideal");
  // Components above the top generator degree are m times the previous one.
  // A squarefree ideal is componentwise linear iff every squarefree
  // component I_[j] has a linear resolution, which keeps the components
  // inside the squarefree world.
  const bool squarefree = ideal.is_squarefree();
  for (std::uint64_t j = ideal.indeg(); j <= ideal.max_generator_degree(); ++j) {
    const MonomialIdeal component = squarefree ? squarefree_component(ideal, j) : degree_component(ideal, j);
    if (!has_linear_resolution(component, field, options))
      return j;
  }
  return std::nullopt;
}

bool is_componentwise_linear(const MonomialIdeal& ideal, FieldSpec field, const ComputeOptions& options) {
  return !first_nonlinear_component(ideal, field, options).has_value();
}

} // namespace bettisplit
