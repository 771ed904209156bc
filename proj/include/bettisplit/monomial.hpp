#ifndef BETTISPLIT_MONOMIAL_HPP
#define BETTISPLIT_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bettisplit {

using Exponent = std::uint32_t;

/// Variables are numbered x1..xn; a VarIndex is always 1-based.
using VarIndex = std::size_t;

/// A monic monomial x1^e1 * ... * xn^en. The variable count is part of the
/// value, so monomials from different rings never compare equal.
class Monomial {
public:
  Monomial() = default;

  /// The unit monomial in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}

  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  /// The single variable x_i in n variables.
  static Monomial variable(std::size_t n, VarIndex i);

  std::size_t num_vars() const { return exps_.size(); }
  std::span<const Exponent> exponents() const { return exps_; }

  /// 0-based exponent access.
  Exponent operator[](std::size_t k) const { return exps_[k]; }

  /// Exponent of x_i, 1-based.
  Exponent exponent_of(VarIndex i) const;

  std::uint64_t degree() const;
  bool is_unit() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Product, with exponent overflow reported as OverflowError.
  Monomial operator*(const Monomial& other) const;

  /// other / this; precondition: this divides other.
  Monomial divide_into(const Monomial& other) const;

  /// Bitmask of the variables with nonzero exponent (bit k is x_{k+1}).
  /// Requires num_vars() <= 64.
  std::uint64_t support_mask() const;

  /// "x1*x4^2", or "1" for the unit monomial.
  std::string to_string() const;

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial&) const = default;

private:
  std::vector<Exponent> exps_;
};

/// Degree first, then x1 > x2 > ... lexicographically. Used as the canonical
/// ordering of generator lists.
bool degree_lex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

} // namespace bettisplit

#endif
