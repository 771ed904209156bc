#include "bettisplit/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <utility>

namespace bettisplit {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1)
      result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

} // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = 1;
  return m;
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0)
    return 0;

  const auto mod = static_cast<std::int64_t>(p);
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t v = m(r, c) % mod;
      a[r * cols + c] = static_cast<std::uint64_t>(v < 0 ? v + mod : v);
    }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);

    std::uint64_t* prow = &a[rank * cols];
    const std::uint64_t inv = pow_mod(prow[col], p - 2, p);
    for (std::size_t c = col; c < cols; ++c)
      prow[c] = prow[c] * inv % p;

    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t* row = &a[r * cols];
      const std::uint64_t factor = row[col];
      if (factor == 0)
        continue;
      for (std::size_t c = col; c < cols; ++c)
        if (prow[c] != 0)
          row[c] = (row[c] + p - factor * prow[c] % p) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0)
    return 0;

  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r * cols + c] = static_cast<long>(m(r, c));

  // Bareiss elimination: after k pivots every entry is a (k+1)-minor of the
  // input, so the division by the previous pivot is exact.
  mpz_class previous = 1;
  mpz_class t1, t2;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c)
        std::swap(a[pivot * cols + c], a[rank * cols + c]);

    const mpz_class& pv = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpz_class& lead = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class& x = a[r * cols + c];
        t1 = pv * x;
        t2 = lead * a[rank * cols + c];
        t1 -= t2;
        mpz_divexact(x.get_mpz_t(), t1.get_mpz_t(), previous.get_mpz_t());
      }
      lead = 0;
    }
    previous = pv;
    ++rank;
  }
  return rank;
}

std::size_t matrix_rank(const IntMatrix& m, FieldSpec field) {
  if (!field.is_rational())
    return rank_mod_prime(m, field.characteristic());
  const std::size_t screened = rank_mod_prime(m, screening_prime);
  if (screened == std::min(m.rows(), m.cols()))
    return screened;
  return rank_rational(m);
}

} // namespace bettisplit
