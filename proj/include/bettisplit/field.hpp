#ifndef BETTISPLIT_FIELD_HPP
#define BETTISPLIT_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace bettisplit {

/// Coefficient field: exact rationals (characteristic 0) or GF(p).
class FieldSpec {
public:
  static constexpr std::uint32_t default_prime = 32003;

  /// GF(32003).
  FieldSpec() : characteristic_(default_prime) {}

  static FieldSpec rationals() { return FieldSpec(0, 0); }

  /// GF(p); throws MalformedInput unless p is prime.
  static FieldSpec prime(std::uint32_t p);

  /// 0 selects the rationals, anything else must be prime.
  static FieldSpec from_characteristic(std::uint32_t c);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  /// "QQ" or "GF(p)".
  std::string name() const;

  auto operator<=>(const FieldSpec&) const = default;

private:
  FieldSpec(std::uint32_t c, int) : characteristic_(c) {}
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t p);

} // namespace bettisplit

#endif
