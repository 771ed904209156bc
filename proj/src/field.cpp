#include "bettisplit/field.hpp"

#include "bettisplit/errors.hpp"

namespace bettisplit {

bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw MalformedInput("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p, 0);
}

FieldSpec FieldSpec::from_characteristic(std::uint32_t c) { return c == 0 ? rationals() : prime(c); }

std::string FieldSpec::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(characteristic_) + ")";
}

} // namespace bettisplit
