#include "bettisplit/simplicial.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace bettisplit {

namespace {

FaceMask vertex_bit(const SimplicialComplex& complex, VertexIndex v) {
  if (v < 1 || v > complex.n_vertices())
    throw MalformedInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(complex.n_vertices()));
  return FaceMask{1} << (v - 1);
}

Monomial squarefree_monomial(std::size_t n, FaceMask support) {
  std::vector<Exponent> e(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    if ((support >> k) & 1)
      e[k] = 1;
  return Monomial(std::move(e));
}

using FacetKey = std::vector<FaceMask>;

FacetKey key_of(const SimplicialComplex& c) { return {c.facets().begin(), c.facets().end()}; }

class DecompositionSearch {
public:
  explicit DecompositionSearch(std::size_t cap) : cap_(cap) {}

  // Returns the first decomposing shedding vertex, 0 for a simplex, or
  // nullopt when Δ is not vertex decomposable.
  std::optional<VertexIndex> solve(const SimplicialComplex& c) {
    if (c.facets().size() <= 1)
      return VertexIndex{0};
    FacetKey key = key_of(c);
    if (const auto it = memo_.find(key); it != memo_.end())
      return it->second;
    if (memo_.size() >= cap_)
      throw ResourceError("vertex decomposability search exceeded " + std::to_string(cap_) + " states");

    std::optional<VertexIndex> answer;
    for (VertexIndex v : face_vertices(c.used_vertices())) {
      if (!is_shedding_vertex(c, v))
        continue;
      if (solve(deletion(c, v)) && solve(link(c, v))) {
        answer = v;
        break;
      }
    }
    memo_.emplace(std::move(key), answer);
    return answer;
  }

private:
  std::size_t cap_;
  std::map<FacetKey, std::optional<VertexIndex>> memo_;
};

// Vertices v of F such that F \ {v} lies in one of `earlier`.
FaceMask covered_ridges(FaceMask facet, std::span<const FaceMask> earlier) {
  FaceMask covered = 0;
  for (FaceMask h : earlier) {
    const FaceMask missing = facet & ~h;
    if (std::popcount(missing) == 1)
      covered |= missing;
  }
  return covered;
}

bool extends_shelling(FaceMask facet, std::span<const FaceMask> earlier) {
  const FaceMask ridges = covered_ridges(facet, earlier);
  // Each earlier G must meet F inside a covered ridge F \ {v}, v ∉ G.
  return std::all_of(earlier.begin(), earlier.end(), [&](FaceMask g) { return (facet & ~g & ridges) != 0; });
}

} // namespace

MonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex) {
  const FaceMask all = full_mask(complex.n_vertices());
  for (FaceMask f : complex.facets())
    if (f == all)
      throw DegenerateComplex("facet " + face_to_string(f) + " is the whole vertex set; its dual generator is 1");
  return alexander_dual_ideal_within(complex, all);
}

MonomialIdeal alexander_dual_ideal_within(const SimplicialComplex& complex, FaceMask ground) {
  if (complex.is_void())
    throw PreconditionError("the void complex has no Alexander dual ideal");
  const std::size_t n = complex.n_vertices();
  std::vector<Monomial> gens;
  gens.reserve(complex.facets().size());
  for (FaceMask f : complex.facets())
    gens.push_back(squarefree_monomial(n, ground & ~f));
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex complex_of_dual_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw PreconditionError("Alexander duality needs a squarefree ideal");
  const FaceMask all = full_mask(ideal.num_vars());
  std::vector<FaceMask> facets;
  for (const auto& g : ideal.generators())
    facets.push_back(all & ~g.support_mask());
  return {ideal.num_vars(), std::move(facets)};
}

SimplicialComplex link(const SimplicialComplex& complex, VertexIndex v) {
  const FaceMask bit = vertex_bit(complex, v);
  std::vector<FaceMask> facets;
  for (FaceMask f : complex.facets())
    if (f & bit)
      facets.push_back(f & ~bit);
  return {complex.n_vertices(), std::move(facets)};
}

SimplicialComplex deletion(const SimplicialComplex& complex, VertexIndex v) {
  const FaceMask bit = vertex_bit(complex, v);
  std::vector<FaceMask> facets;
  for (FaceMask f : complex.facets())
    facets.push_back(f & ~bit);
  return {complex.n_vertices(), std::move(facets)};
}

bool is_shedding_vertex(const SimplicialComplex& complex, VertexIndex v) {
  const FaceMask bit = vertex_bit(complex, v);
  if ((complex.used_vertices() & bit) == 0)
    return false;
  const auto del = deletion(complex, v);
  const auto lk = link(complex, v);
  for (FaceMask f : lk.facets())
    if (std::find(del.facets().begin(), del.facets().end(), f) != del.facets().end())
      return false;
  return true;
}

VertexDecomposition is_vertex_decomposable(const SimplicialComplex& complex, std::size_t state_cap) {
  DecompositionSearch search(state_cap);
  VertexDecomposition out;
  auto first = search.solve(complex);
  if (!first)
    return out;
  out.decomposable = true;
  SimplicialComplex current = complex;
  while (auto v = search.solve(current)) {
    if (*v == 0)
      break;
    out.shedding_sequence.push_back(*v);
    current = deletion(current, *v);
  }
  return out;
}

std::vector<VertexIndex> decomposing_shedding_vertices(const SimplicialComplex& complex, std::size_t state_cap) {
  DecompositionSearch search(state_cap);
  std::vector<VertexIndex> out;
  if (complex.facets().size() <= 1)
    return out;
  for (VertexIndex v : face_vertices(complex.used_vertices()))
    if (is_shedding_vertex(complex, v) && search.solve(deletion(complex, v)) && search.solve(link(complex, v)))
      out.push_back(v);
  return out;
}

bool verify_shelling(const SimplicialComplex& complex, std::span<const FaceMask> order) {
  std::vector<FaceMask> given(order.begin(), order.end());
  std::vector<FaceMask> facets(complex.facets().begin(), complex.facets().end());
  std::sort(given.begin(), given.end());
  std::sort(facets.begin(), facets.end());
  if (given != facets)
    throw PreconditionError("shelling order is not a permutation of the facets");
  for (std::size_t k = 1; k < order.size(); ++k)
    if (!extends_shelling(order[k], order.first(k)))
      return false;
  return true;
}

std::optional<std::vector<FaceMask>> find_shelling(const SimplicialComplex& complex, std::size_t state_cap) {
  const auto facets = complex.facets(); // sorted by decreasing size
  const std::size_t m = facets.size();
  if (m > 63)
    throw ResourceError("shelling search supports at most 63 facets");
  if (m == 0)
    return std::vector<FaceMask>{};

  std::unordered_set<std::uint64_t> dead;
  std::vector<FaceMask> order;
  std::uint64_t used = 0;
  std::size_t visited = 0;
  const std::uint64_t everything = (std::uint64_t{1} << m) - 1;

  auto dfs = [&](auto&& self) -> bool {
    if (used == everything)
      return true;
    if (dead.contains(used))
      return false;
    if (++visited > state_cap)
      throw ResourceError("shelling search exceeded " + std::to_string(state_cap) + " states");
    // Only facets of the largest remaining size may come next.
    int size = -1;
    for (std::size_t k = 0; k < m; ++k)
      if (!((used >> k) & 1)) {
        size = std::popcount(facets[k]);
        break;
      }
    for (std::size_t k = 0; k < m; ++k) {
      if ((used >> k) & 1)
        continue;
      if (std::popcount(facets[k]) != size)
        break;
      if (!order.empty() && !extends_shelling(facets[k], order))
        continue;
      order.push_back(facets[k]);
      used |= std::uint64_t{1} << k;
      if (self(self))
        return true;
      used &= ~(std::uint64_t{1} << k);
      order.pop_back();
    }
    dead.insert(used);
    return false;
  };

  if (dfs(dfs))
    return order;
  return std::nullopt;
}

SplittingReport union_splitting_check(const SimplicialComplex& whole, const SimplicialComplex& first,
                                      const SimplicialComplex& second, FieldSpec field,
                                      const ComputeOptions& options) {
  if (first.n_vertices() != whole.n_vertices() || second.n_vertices() != whole.n_vertices())
    throw PreconditionError("the three complexes must share one vertex set");
  if (first.is_void() || second.is_void())
    throw PreconditionError("both parts of the decomposition need at least one facet");
  std::vector<FaceMask> joined(first.facets().begin(), first.facets().end());
  joined.insert(joined.end(), second.facets().begin(), second.facets().end());
  std::vector<FaceMask> facets(whole.facets().begin(), whole.facets().end());
  std::sort(joined.begin(), joined.end());
  std::sort(facets.begin(), facets.end());
  if (joined != facets)
    throw PreconditionError("facets of the whole complex are not the disjoint union of the parts' facets");
  return is_betti_splitting(alexander_dual_ideal(whole), alexander_dual_ideal(first), alexander_dual_ideal(second),
                            field, options);
}

bool is_sequentially_cm(const SimplicialComplex& complex, FieldSpec field, const ComputeOptions& options) {
  const FaceMask all = full_mask(complex.n_vertices());
  if (!complex.facets().empty() && complex.facets().front() == all)
    return true;
  return is_componentwise_linear(alexander_dual_ideal(complex), field, options);
}

} // namespace bettisplit
