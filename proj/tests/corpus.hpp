// Small complexes with known places in the hierarchy
// vertex decomposable => shellable => sequentially Cohen-Macaulay.
#ifndef BETTISPLIT_TEST_CORPUS_HPP
#define BETTISPLIT_TEST_CORPUS_HPP

#include "bettisplit/complex.hpp"

#include <string>
#include <vector>

namespace corpus {

struct Entry {
  std::string name;
  bettisplit::SimplicialComplex complex;
  bool vertex_decomposable;
  bool shellable;
  bool scm_rational; // sequentially Cohen-Macaulay over QQ
};

inline bettisplit::SimplicialComplex make(std::size_t n, const std::vector<std::vector<std::size_t>>& facets) {
  return bettisplit::SimplicialComplex::from_vertex_lists(n, facets);
}

inline std::vector<Entry> hierarchy() {
  using bettisplit::SimplicialComplex;
  const std::vector<std::vector<std::size_t>> rp2{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                  {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  std::vector<std::vector<std::size_t>> cone_rp2;
  for (auto f : rp2) {
    f.push_back(7);
    cone_rp2.push_back(f);
  }
  std::vector<std::vector<std::size_t>> k4_edges;
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a + 1; b <= 4; ++b)
      k4_edges.push_back({a, b});

  return {
      {"point", make(1, {{1}}), true, true, true},
      {"point in a larger vertex set", make(3, {{2}}), true, true, true},
      {"empty face only", SimplicialComplex::empty_face_complex(3), true, true, true},
      {"edge on 3 vertices", make(3, {{1, 2}}), true, true, true},
      {"two points", make(2, {{1}, {2}}), true, true, true},
      {"path of two edges", make(3, {{1, 2}, {2, 3}}), true, true, true},
      {"path of three edges", make(4, {{1, 2}, {2, 3}, {3, 4}}), true, true, true},
      {"star with three leaves", make(4, {{1, 2}, {1, 3}, {1, 4}}), true, true, true},
      {"4-cycle", make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), true, true, true},
      {"5-cycle", make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), true, true, true},
      {"complete graph on 4 vertices", make(4, k4_edges), true, true, true},
      {"two disjoint edges", make(4, {{1, 2}, {3, 4}}), false, false, false},
      {"bowtie", make(5, {{1, 2, 3}, {3, 4, 5}}), false, false, false},
      {"two triangles on an edge", make(4, {{1, 2, 3}, {2, 3, 4}}), true, true, true},
      {"triangle with pendant edge", make(4, {{1, 2, 3}, {3, 4}}), true, true, true},
      {"triangle with isolated vertex", make(4, {{1, 2, 3}, {4}}), true, true, true},
      {"edge with isolated vertex", make(3, {{1}, {2, 3}}), true, true, true},
      {"triangle and disjoint edge", make(5, {{1, 2, 3}, {4, 5}}), false, false, false},
      {"tetrahedron boundary", make(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), true, true, true},
      {"stacked 3-ball", make(5, {{1, 2, 3, 4}, {2, 3, 4, 5}}), true, true, true},
      {"octahedron boundary",
       make(6, {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}}), true, true,
       true},
      {"annulus", make(6, {{1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {3, 5, 6}, {1, 3, 6}, {1, 4, 6}}), false, false, false},
      {"real projective plane", make(6, rp2), false, false, true},
      {"cone over the real projective plane", make(7, cone_rp2), false, false, true},
      {"full simplex on 5 vertices", SimplicialComplex::simplex(5), true, true, true},
  };
}

} // namespace corpus

#endif
