#ifndef BETTISPLIT_SIMPLICIAL_HPP
#define BETTISPLIT_SIMPLICIAL_HPP

#include "bettisplit/betti.hpp"
#include "bettisplit/complex.hpp"
#include "bettisplit/splitting.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bettisplit {

/// I_Δ* = (x_{[n] \ F} : F a facet). PreconditionError for the void complex,
/// DegenerateComplex when some facet is the whole vertex set.
MonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex);

/// Alexander dual with complements taken inside `ground` instead of [n].
/// The ideal still lives in n = complex.n_vertices() variables.
MonomialIdeal alexander_dual_ideal_within(const SimplicialComplex& complex, FaceMask ground);

/// Inverse of alexander_dual_ideal: facets are the complements of the
/// generator supports. Requires a squarefree ideal.
SimplicialComplex complex_of_dual_ideal(const MonomialIdeal& ideal);

/// Faces F with v ∉ F and F ∪ {v} ∈ Δ. Same vertex set as Δ. Void when v is
/// in no facet.
SimplicialComplex link(const SimplicialComplex& complex, VertexIndex v);

/// Faces of Δ not containing v. Same vertex set as Δ.
SimplicialComplex deletion(const SimplicialComplex& complex, VertexIndex v);

/// No facet of link(v) is a facet of deletion(v), and v lies in some facet.
bool is_shedding_vertex(const SimplicialComplex& complex, VertexIndex v);

struct VertexDecomposition {
  bool decomposable = false;
  /// Shedding vertices removed one after another along the deletion chain
  /// until a simplex remains. Empty when Δ is itself a simplex.
  std::vector<VertexIndex> shedding_sequence;
};

inline constexpr std::size_t default_search_state_cap = 2'000'000;

/// Non-pure vertex decomposability: Δ is a simplex (or {∅}, or void), or
/// some shedding vertex v has link(v) and deletion(v) both vertex
/// decomposable. Memoized; ResourceError past `state_cap` memo entries.
VertexDecomposition is_vertex_decomposable(const SimplicialComplex& complex,
                                           std::size_t state_cap = default_search_state_cap);

/// Every shedding vertex v of Δ with link(v) and deletion(v) vertex decomposable.
std::vector<VertexIndex> decomposing_shedding_vertices(const SimplicialComplex& complex,
                                                       std::size_t state_cap = default_search_state_cap);

/// Non-pure shelling test: each facet meets the union of the earlier ones in
/// a pure subcomplex of codimension one in that facet. PreconditionError
/// unless `order` is a permutation of the facets.
bool verify_shelling(const SimplicialComplex& complex, std::span<const FaceMask> order);

/// Backtracking search, facets taken in weakly decreasing size (any
/// shellable complex has such a shelling). nullopt means no shelling exists;
/// ResourceError means the search was cut off.
std::optional<std::vector<FaceMask>> find_shelling(const SimplicialComplex& complex,
                                                   std::size_t state_cap = default_search_state_cap);

/// Betti splitting of I_Δ* induced by Δ = Δ1 ∪ Δ2 with disjoint facet sets.
/// All duals are taken over the common vertex set.
SplittingReport union_splitting_check(const SimplicialComplex& whole, const SimplicialComplex& first,
                                      const SimplicialComplex& second, FieldSpec field,
                                      const ComputeOptions& options = {});

/// Δ is sequentially Cohen-Macaulay iff I_Δ* is componentwise linear. A full
/// simplex (whose dual is the unit ideal) is sequentially Cohen-Macaulay.
bool is_sequentially_cm(const SimplicialComplex& complex, FieldSpec field, const ComputeOptions& options = {});

} // namespace bettisplit

#endif
