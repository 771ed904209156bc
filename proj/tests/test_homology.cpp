#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bettisplit/complex.hpp"
#include "bettisplit/errors.hpp"
#include "bettisplit/field.hpp"
#include "bettisplit/homology.hpp"
#include "bettisplit/linalg.hpp"
#include "support.hpp"

using namespace bettisplit;
using namespace testing_support;

namespace {

std::vector<std::vector<long long>> plain(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = m(r, c);
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = d(rng);
  return m;
}

// All faces of the complex as bitmasks, for the oracle.
std::vector<std::uint32_t> all_faces(const SimplicialComplex& x) {
  std::vector<std::uint32_t> out;
  for (const auto& level : x.faces_by_size(default_face_cap))
    for (FaceMask f : level)
      out.push_back(static_cast<std::uint32_t>(f));
  return out;
}

long long euler_faces(const SimplicialComplex& x) {
  long long chi = 0;
  const auto faces = x.faces_by_size(default_face_cap);
  for (std::size_t k = 0; k < faces.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(faces[k].size());
  return chi;
}

long long euler_homology(const std::vector<std::size_t>& h) {
  long long chi = 0;
  for (std::size_t k = 0; k < h.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h[k]);
  return chi;
}

SimplicialComplex rp2() { return load_complex("rp2.complex").complex; }

} // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec().characteristic() == 32003);
  CHECK(FieldSpec::rationals().is_rational());
  CHECK(FieldSpec::rationals().name() == "QQ");
  CHECK(FieldSpec::prime(2).name() == "GF(2)");
  CHECK_THROWS_AS(FieldSpec::prime(4), MalformedInput);
  CHECK_THROWS_AS(FieldSpec::from_characteristic(1), MalformedInput);
  CHECK(is_prime(screening_prime));
}

TEST_CASE("matrix_rank basics") {
  CHECK(matrix_rank(IntMatrix::identity(3), FieldSpec::rationals()) == 3);
  CHECK(matrix_rank(IntMatrix::identity(3), FieldSpec::prime(2)) == 3);
  CHECK(matrix_rank(IntMatrix(4, 5), FieldSpec::rationals()) == 0);
  IntMatrix two(2, 2);
  two(0, 0) = 2;
  two(1, 1) = 4;
  CHECK(matrix_rank(two, FieldSpec::prime(2)) == 0);
  CHECK(matrix_rank(two, FieldSpec::prime(3)) == 2);
  CHECK(matrix_rank(two, FieldSpec::rationals()) == 2);
}

TEST_CASE("matrix_rank agrees with independent elimination") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    IntMatrix m = random_matrix(rng, rows, cols, 3);
    // force dependent rows now and then
    if (rows > 2 && trial % 3 == 0)
      for (std::size_t c = 0; c < cols; ++c)
        m(rows - 1, c) = 2 * m(0, c) - 3 * m(1, c);
    const auto ref = plain(m);
    CHECK(matrix_rank(m, FieldSpec::rationals()) == oracle::rank_rational(ref));
    CHECK(rank_rational(m) == oracle::rank_rational(ref));
    for (std::uint32_t p : {2u, 3u, 5u, 32003u})
      CHECK(matrix_rank(m, FieldSpec::prime(p)) == oracle::rank_mod(ref, p));
  }
}

TEST_CASE("rational rank survives entries that vanish mod the screening prime") {
  IntMatrix m(2, 2);
  m(0, 0) = screening_prime;
  m(1, 1) = 1;
  CHECK(matrix_rank(m, FieldSpec::rationals()) == 2);
  CHECK(oracle::rank_rational(plain(m)) == 2);
}

TEST_CASE("RP2 boundary rank over GF(2) and QQ") {
  const auto x = rp2();
  const auto faces = x.faces_by_size(default_face_cap);
  REQUIRE(faces.size() == 4);
  CHECK(faces[1].size() == 6);
  CHECK(faces[2].size() == 15);
  CHECK(faces[3].size() == 10);
  const IntMatrix d2 = boundary_matrix(faces[3], faces[2]);
  CHECK(d2.rows() == 15);
  CHECK(d2.cols() == 10);
  const auto ref = plain(d2);
  CHECK(oracle::rank_mod(ref, 2) == 9);
  CHECK(oracle::rank_rational(ref) == 10);
  CHECK(matrix_rank(d2, FieldSpec::prime(2)) == 9);
  CHECK(matrix_rank(d2, FieldSpec::rationals()) == 10);
}

TEST_CASE("RP2 homology signature validates the fixture") {
  const auto x = rp2();
  CHECK(x.is_pure());
  // every edge lies in exactly two triangles
  const auto faces = x.faces_by_size(default_face_cap);
  for (FaceMask e : faces[2]) {
    int count = 0;
    for (FaceMask t : faces[3])
      count += (t & e) == e;
    CHECK(count == 2);
  }
  CHECK(reduced_homology_dims(x, FieldSpec::rationals()) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(reduced_homology_dims(x, FieldSpec::prime(2)) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(reduced_homology_dims(x, FieldSpec::prime(3)) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("reduced homology of small complexes") {
  const auto circle = SimplicialComplex::from_vertex_lists(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(reduced_homology_dims(circle, FieldSpec::rationals()) == std::vector<std::size_t>{0, 0, 1});
  CHECK(reduced_homology_dims(SimplicialComplex::simplex(4), FieldSpec::rationals()) ==
        std::vector<std::size_t>(5, 0));
  CHECK(reduced_homology_dims(SimplicialComplex::empty_face_complex(3), FieldSpec::rationals()) ==
        std::vector<std::size_t>{1});
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3), FieldSpec::rationals()) ==
        std::vector<std::size_t>{0});
  const auto two_points = SimplicialComplex::from_vertex_lists(2, {{1}, {2}});
  CHECK(reduced_homology_dims(two_points, FieldSpec::prime(7)) == std::vector<std::size_t>{0, 1});
  CHECK(SimplicialComplex::empty_face_complex(3).dimension() == -1);
  CHECK(SimplicialComplex::void_complex(3).dimension() == -2);
}

TEST_CASE("face cap raises a resource error") {
  CHECK_THROWS_AS(reduced_homology_dims(SimplicialComplex::simplex(12), FieldSpec::prime(2), 100), ResourceError);
}

TEST_CASE("homology matches the oracle and the Euler characteristic on random complexes") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    std::vector<FaceMask> facets;
    const std::size_t count = 1 + rng() % 7;
    for (std::size_t f = 0; f < count; ++f)
      facets.push_back(rng() & full_mask(n));
    const SimplicialComplex x(n, facets);
    const auto faces = all_faces(x);
    for (long long p : {0LL, 2LL, 3LL}) {
      const FieldSpec field = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint32_t>(p));
      const auto h = reduced_homology_dims(x, field);
      const auto ref = oracle::reduced_homology(faces, p);
      REQUIRE(h.size() == ref.size());
      for (std::size_t k = 0; k < h.size(); ++k)
        CHECK(static_cast<long long>(h[k]) == ref[k]);
      CHECK(euler_homology(h) == euler_faces(x));
    }
  }
}

TEST_CASE("chain complex ranks respect the size bound") {
  const auto x = rp2();
  const auto faces = x.faces_by_size(default_face_cap);
  const auto ranks = chain_complex_ranks(faces, FieldSpec::prime(2));
  for (std::size_t k = 1; k < ranks.boundary_ranks.size(); ++k)
    CHECK(ranks.boundary_ranks[k] <= std::min(ranks.face_counts[k], ranks.face_counts[k - 1]));
}
