#ifndef BETTISPLIT_LINALG_HPP
#define BETTISPLIT_LINALG_HPP

#include "bettisplit/field.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bettisplit {

/// Dense row-major integer matrix. Entries are read in whatever field the
/// rank is asked for (reduced mod p, or as rationals).
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact rank over `field`.
std::size_t matrix_rank(const IntMatrix& m, FieldSpec field);

/// Rank over GF(p), p < 2^32.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p);

/// Rank over QQ by fraction-free elimination on arbitrary-precision integers.
std::size_t rank_rational(const IntMatrix& m);

/// Large prime used to pre-screen rational ranks: rank mod p never exceeds the
/// rational rank, so a full mod-p rank settles the rational one.
inline constexpr std::uint32_t screening_prime = 2147483629u;

} // namespace bettisplit

#endif
