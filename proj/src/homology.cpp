#include "bettisplit/homology.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <bit>

namespace bettisplit {

std::vector<std::size_t> ChainComplexRanks::reduced_homology() const {
  std::vector<std::size_t> h(face_counts.size(), 0);
  for (std::size_t k = 0; k < face_counts.size(); ++k) {
    const std::size_t outgoing = boundary_ranks[k];
    const std::size_t incoming = k + 1 < boundary_ranks.size() ? boundary_ranks[k + 1] : 0;
    if (outgoing + incoming > face_counts[k])
      throw InvariantViolation("boundary ranks exceed the chain group dimension");
    h[k] = face_counts[k] - outgoing - incoming;
  }
  if (h.empty())
    h.push_back(0);
  return h;
}

IntMatrix boundary_matrix(const std::vector<FaceMask>& upper, const std::vector<FaceMask>& lower) {
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const FaceMask face = upper[col];
    FaceMask rest = face;
    std::int64_t sign = 1;
    while (rest != 0) {
      const FaceMask vertex = rest & (~rest + 1);
      rest &= rest - 1;
      const FaceMask side = face & ~vertex;
      const auto it = std::lower_bound(lower.begin(), lower.end(), side);
      if (it == lower.end() || *it != side)
        throw MalformedInput("face family is not closed under taking subsets");
      m(static_cast<std::size_t>(it - lower.begin()), col) = sign;
      sign = -sign;
    }
  }
  return m;
}

ChainComplexRanks chain_complex_ranks(const std::vector<std::vector<FaceMask>>& faces, FieldSpec field) {
  ChainComplexRanks out;
  out.face_counts.resize(faces.size());
  out.boundary_ranks.assign(faces.size(), 0);
  for (std::size_t k = 0; k < faces.size(); ++k)
    out.face_counts[k] = faces[k].size();
  for (std::size_t k = 1; k < faces.size(); ++k)
    out.boundary_ranks[k] = matrix_rank(boundary_matrix(faces[k], faces[k - 1]), field);
  return out;
}

std::vector<std::size_t> reduced_homology_of_faces(const std::vector<std::vector<FaceMask>>& faces, FieldSpec field) {
  if (faces.empty())
    return {0};
  if (!field.is_rational())
    return chain_complex_ranks(faces, field).reduced_homology();

  // Ranks mod p never exceed rational ranks, so homology mod p bounds
  // rational homology from above; when it vanishes we are done.
  std::vector<IntMatrix> boundaries(faces.size());
  ChainComplexRanks ranks;
  ranks.face_counts.resize(faces.size());
  ranks.boundary_ranks.assign(faces.size(), 0);
  for (std::size_t k = 0; k < faces.size(); ++k)
    ranks.face_counts[k] = faces[k].size();
  for (std::size_t k = 1; k < faces.size(); ++k) {
    boundaries[k] = boundary_matrix(faces[k], faces[k - 1]);
    ranks.boundary_ranks[k] = rank_mod_prime(boundaries[k], screening_prime);
  }
  const auto screened = ranks.reduced_homology();
  if (std::all_of(screened.begin(), screened.end(), [](std::size_t h) { return h == 0; }))
    return screened;

  for (std::size_t k = 1; k < faces.size(); ++k) {
    const auto& b = boundaries[k];
    if (ranks.boundary_ranks[k] < std::min(b.rows(), b.cols()))
      ranks.boundary_ranks[k] = rank_rational(b);
  }
  return ranks.reduced_homology();
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, FieldSpec field,
                                               std::size_t face_cap) {
  return reduced_homology_of_faces(complex.faces_by_size(face_cap), field);
}

} // namespace bettisplit
