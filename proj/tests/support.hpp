#ifndef BETTISPLIT_TEST_SUPPORT_HPP
#define BETTISPLIT_TEST_SUPPORT_HPP

#include "bettisplit/betti.hpp"
#include "bettisplit/io.hpp"
#include "oracles.hpp"

#include <string>

namespace testing_support {

inline std::vector<oracle::Exps> exps_of(const bettisplit::MonomialIdeal& ideal) {
  std::vector<oracle::Exps> out;
  for (const auto& g : ideal.generators())
    out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

inline bettisplit::Monomial monomial_of(const oracle::Exps& e) {
  return bettisplit::Monomial(std::vector<bettisplit::Exponent>(e.begin(), e.end()));
}

inline bettisplit::MonomialIdeal ideal_of(std::size_t n, const std::vector<oracle::Exps>& gens) {
  std::vector<bettisplit::Monomial> ms;
  for (const auto& g : gens)
    ms.push_back(monomial_of(g));
  return bettisplit::MonomialIdeal(n, std::move(ms));
}

inline oracle::Table table_of(const bettisplit::BettiTable& t) {
  oracle::Table out;
  for (const auto& [key, value] : t.entries())
    out[key] = static_cast<long long>(value);
  return out;
}

inline std::string fixture(const std::string& name) {
  return std::string(BETTISPLIT_FIXTURE_DIR) + "/" + name;
}

inline bettisplit::MonomialIdeal load_ideal(const std::string& name) {
  return bettisplit::parse_ideal(bettisplit::read_text_file(fixture(name)));
}

inline bettisplit::ComplexDocument load_complex(const std::string& name) {
  return bettisplit::parse_complex_document(bettisplit::read_text_file(fixture(name)));
}

inline const bettisplit::FieldSpec QQ = bettisplit::FieldSpec::rationals();

} // namespace testing_support

#endif
