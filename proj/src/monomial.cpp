#include "bettisplit/monomial.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <limits>

namespace bettisplit {

Monomial Monomial::variable(std::size_t n, VarIndex i) {
  if (i < 1 || i > n)
    throw MalformedInput("variable index x" + std::to_string(i) + " outside x1..x" + std::to_string(n));
  Monomial m(n);
  m.exps_[i - 1] = 1;
  return m;
}

Exponent Monomial::exponent_of(VarIndex i) const {
  if (i < 1 || i > exps_.size())
    throw MalformedInput("variable index x" + std::to_string(i) + " outside x1..x" + std::to_string(exps_.size()));
  return exps_[i - 1];
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_)
    d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  const std::size_t n = exps_.size();
  for (std::size_t k = 0; k < n; ++k)
    if (exps_[k] > other.exps_[k])
      return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (other.exps_.size() != exps_.size())
    throw AmbientMismatch("lcm of monomials in different rings");
  Monomial r(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k)
    r.exps_[k] = std::max(exps_[k], other.exps_[k]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (other.exps_.size() != exps_.size())
    throw AmbientMismatch("gcd of monomials in different rings");
  Monomial r(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k)
    r.exps_[k] = std::min(exps_[k], other.exps_[k]);
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size())
    throw AmbientMismatch("product of monomials in different rings");
  Monomial r(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > std::numeric_limits<Exponent>::max() - other.exps_[k])
      throw OverflowError("exponent overflow in x" + std::to_string(k + 1));
    r.exps_[k] = exps_[k] + other.exps_[k];
  }
  return r;
}

Monomial Monomial::divide_into(const Monomial& other) const {
  if (!divides(other))
    throw PreconditionError(to_string() + " does not divide " + other.to_string());
  Monomial r(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k)
    r.exps_[k] = other.exps_[k] - exps_[k];
  return r;
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64)
    throw ResourceError("support masks are limited to 64 variables");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] != 0)
      mask |= std::uint64_t{1} << k;
  return mask;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += 'x';
    out += std::to_string(k + 1);
    if (exps_[k] > 1) {
      out += '^';
      out += std::to_string(exps_[k]);
    }
  }
  return out.empty() ? "1" : out;
}

bool degree_lex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db)
    return da < db;
  // larger leading exponent first: x1^2 before x1*x2 before x2^2
  return b < a;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace bettisplit
