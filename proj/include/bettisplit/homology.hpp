#ifndef BETTISPLIT_HOMOLOGY_HPP
#define BETTISPLIT_HOMOLOGY_HPP

#include "bettisplit/complex.hpp"
#include "bettisplit/field.hpp"
#include "bettisplit/linalg.hpp"

#include <cstddef>
#include <vector>

namespace bettisplit {

inline constexpr std::size_t default_face_cap = 50000;

/// Face counts and boundary ranks of the augmented chain complex. Index k
/// refers to faces with k vertices, i.e. dimension k-1; the empty face sits
/// at k = 0.
struct ChainComplexRanks {
  std::vector<std::size_t> face_counts;
  /// boundary_ranks[k] = rank of the map from k-vertex to (k-1)-vertex
  /// chains; boundary_ranks[0] = 0.
  std::vector<std::size_t> boundary_ranks;

  /// result[k] = dim H~_{k-1}.
  std::vector<std::size_t> reduced_homology() const;
};

/// Signed boundary matrix from `upper` (k-vertex faces) to `lower`
/// ((k-1)-vertex faces, sorted). Rows index `lower`.
IntMatrix boundary_matrix(const std::vector<FaceMask>& upper, const std::vector<FaceMask>& lower);

/// `faces[k]` must list the k-vertex faces of a downward-closed family in
/// increasing order.
ChainComplexRanks chain_complex_ranks(const std::vector<std::vector<FaceMask>>& faces, FieldSpec field);

/// dim H~_d(X; field) for d = -1 .. dim X, so result[d + 1] is H~_d.
/// The void complex yields {0}; {∅} yields {1}.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, FieldSpec field,
                                               std::size_t face_cap = default_face_cap);

/// Same, for an explicit face family grouped as in chain_complex_ranks.
std::vector<std::size_t> reduced_homology_of_faces(const std::vector<std::vector<FaceMask>>& faces, FieldSpec field);

} // namespace bettisplit

#endif
