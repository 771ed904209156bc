#ifndef BETTISPLIT_COMPLEX_HPP
#define BETTISPLIT_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bettisplit {

/// A face as a vertex bitmask: bit k is vertex k+1.
using FaceMask = std::uint64_t;

/// Vertices are numbered 1..n, like variables.
using VertexIndex = std::size_t;

inline constexpr std::size_t max_vertices = 64;

/// Finite abstract simplicial complex on the fixed vertex set {1..n},
/// represented by its facets. Vertices may appear in no facet.
///
/// Two degenerate cases are kept apart: the void complex has no faces at all
/// (no facets), while the complex {∅} has the empty set as its only facet.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Keeps only the inclusion-maximal sets of `facets`.
  SimplicialComplex(std::size_t n_vertices, std::vector<FaceMask> facets);

  /// Facets given as 1-based vertex lists.
  static SimplicialComplex from_vertex_lists(std::size_t n_vertices,
                                             const std::vector<std::vector<VertexIndex>>& facets);

  static SimplicialComplex void_complex(std::size_t n_vertices) { return {n_vertices, {}}; }
  static SimplicialComplex empty_face_complex(std::size_t n_vertices) { return {n_vertices, {FaceMask{0}}}; }
  static SimplicialComplex simplex(std::size_t n_vertices);

  std::size_t n_vertices() const { return n_; }

  /// Sorted by size (descending) then mask, so equal complexes compare equal.
  std::span<const FaceMask> facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool contains_face(FaceMask face) const;

  /// -1 for {∅}; -2 for the void complex.
  int dimension() const;

  bool is_pure() const;

  /// Union of all facets.
  FaceMask used_vertices() const;

  /// Every face, grouped by cardinality: result[k] holds the k-vertex faces
  /// in increasing mask order. Throws ResourceError past `face_cap` faces.
  std::vector<std::vector<FaceMask>> faces_by_size(std::size_t face_cap) const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<FaceMask> facets_;
};

/// Inclusion-maximal members of `sets`, in the canonical facet order.
std::vector<FaceMask> maximal_sets(std::vector<FaceMask> sets);

FaceMask full_mask(std::size_t n);

/// "[1,2,3]"; the empty face is "[]".
std::string face_to_string(FaceMask face);

/// 1-based sorted vertex list.
std::vector<VertexIndex> face_vertices(FaceMask face);

} // namespace bettisplit

#endif
