#include "bettisplit/complex.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace bettisplit {

namespace {

bool canonical_facet_less(FaceMask a, FaceMask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb)
    return pa > pb;
  return a < b;
}

} // namespace

FaceMask full_mask(std::size_t n) {
  if (n > max_vertices)
    throw ResourceError("at most " + std::to_string(max_vertices) + " vertices are supported");
  return n == 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1;
}

std::vector<FaceMask> maximal_sets(std::vector<FaceMask> sets) {
  std::sort(sets.begin(), sets.end(), canonical_facet_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceMask> kept;
  for (FaceMask s : sets) {
    // larger sets come first, so any superset is already kept
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](FaceMask k) { return (s & ~k) == 0; });
    if (!covered)
      kept.push_back(s);
  }
  return kept;
}

SimplicialComplex::SimplicialComplex(std::size_t n_vertices, std::vector<FaceMask> facets) : n_(n_vertices) {
  const FaceMask all = full_mask(n_vertices);
  for (FaceMask f : facets)
    if ((f & ~all) != 0)
      throw MalformedInput("facet " + face_to_string(f) + " uses a vertex outside 1.." + std::to_string(n_vertices));
  facets_ = maximal_sets(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_vertex_lists(std::size_t n_vertices,
                                                       const std::vector<std::vector<VertexIndex>>& facets) {
  std::vector<FaceMask> masks;
  masks.reserve(facets.size());
  for (const auto& facet : facets) {
    FaceMask m = 0;
    for (VertexIndex v : facet) {
      if (v < 1 || v > n_vertices)
        throw MalformedInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_vertices));
      m |= FaceMask{1} << (v - 1);
    }
    masks.push_back(m);
  }
  return {n_vertices, std::move(masks)};
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n_vertices) { return {n_vertices, {full_mask(n_vertices)}}; }

bool SimplicialComplex::contains_face(FaceMask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](FaceMask f) { return (face & ~f) == 0; });
}

int SimplicialComplex::dimension() const {
  if (facets_.empty())
    return -2;
  return std::popcount(facets_.front()) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](FaceMask f) { return std::popcount(f) == std::popcount(facets_.front()); });
}

FaceMask SimplicialComplex::used_vertices() const {
  FaceMask m = 0;
  for (FaceMask f : facets_)
    m |= f;
  return m;
}

std::vector<std::vector<FaceMask>> SimplicialComplex::faces_by_size(std::size_t face_cap) const {
  if (facets_.empty())
    return {};
  std::unordered_set<FaceMask> seen;
  for (FaceMask f : facets_) {
    // every submask of f, including f and 0
    FaceMask sub = f;
    while (true) {
      seen.insert(sub);
      if (seen.size() > face_cap)
        throw ResourceError("simplicial complex exceeds the face cap of " + std::to_string(face_cap));
      if (sub == 0)
        break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<std::vector<FaceMask>> out(static_cast<std::size_t>(dimension() + 2));
  for (FaceMask f : seen)
    out[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& layer : out)
    std::sort(layer.begin(), layer.end());
  return out;
}

std::string face_to_string(FaceMask face) {
  std::string out = "[";
  bool first = true;
  for (VertexIndex v : face_vertices(face)) {
    if (!first)
      out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

std::vector<VertexIndex> face_vertices(FaceMask face) {
  std::vector<VertexIndex> out;
  while (face != 0) {
    out.push_back(static_cast<VertexIndex>(std::countr_zero(face)) + 1);
    face &= face - 1;
  }
  return out;
}

} // namespace bettisplit
