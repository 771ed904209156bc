#ifndef BETTISPLIT_IDEAL_HPP
#define BETTISPLIT_IDEAL_HPP

#include "bettisplit/monomial.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bettisplit {

/// A monomial ideal of k[x1..xn], stored by its minimal generating set G(I).
///
/// The generator list is always an antichain under divisibility and is kept
/// in degree_lex_less order, so two ideals are equal exactly when their
/// generator vectors are. The zero ideal has no generators; the unit ideal
/// has the single generator 1.
class MonomialIdeal {
public:
  /// Builds the ideal generated by `gens`, discarding non-minimal ones.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t n);
  static MonomialIdeal unit(std::size_t n);

  std::size_t num_vars() const { return n_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const;
  bool is_minimal_generator(const Monomial& m) const;

  /// Lowest and highest generator degree. Zero ideal: PreconditionError.
  std::uint64_t indeg() const;
  std::uint64_t max_generator_degree() const;
  bool is_equigenerated() const;
  bool is_squarefree() const;

  /// "x1*x2, x3^2" style listing; "0" for the zero ideal.
  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

private:
  struct Trusted {};
  MonomialIdeal(Trusted, std::size_t n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;

  friend MonomialIdeal minimalize(std::vector<Monomial>, std::size_t);
  friend MonomialIdeal scale_by_monomial(const Monomial&, const MonomialIdeal&);
};

/// Unique divisibility-antichain generating the same ideal as `gens`.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k);

/// Minimalized set of pairwise lcms of G(J) x G(K).
MonomialIdeal ideal_intersection(const MonomialIdeal& j, const MonomialIdeal& k);

/// m * I; the generator set {m g} is automatically minimal.
MonomialIdeal scale_by_monomial(const Monomial& m, const MonomialIdeal& ideal);

/// I : x_i, the ideal of monomials f with x_i f in I.
MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, VarIndex i);

/// (x_{v} : v in vars)^a in n variables. a = 0 gives the unit ideal; an empty
/// variable set with a >= 1 gives the zero ideal.
MonomialIdeal power_of_subset_ideal(std::span<const VarIndex> vars, unsigned a, std::size_t n);

/// I_<j>: the ideal generated by the degree-j monomials of I.
MonomialIdeal degree_component(const MonomialIdeal& ideal, std::uint64_t j);

/// I_[j]: the ideal generated by the squarefree degree-j monomials of a
/// squarefree ideal. PreconditionError otherwise.
MonomialIdeal squarefree_component(const MonomialIdeal& ideal, std::uint64_t j);

/// True iff G(I) is the disjoint union of G(J) and G(K) with J, K nonzero.
bool partition_is_valid(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k);

/// Re-embeds I in `new_n` variables, sending x_k to x_{image[k-1]}.
MonomialIdeal relabel(const MonomialIdeal& ideal, std::size_t new_n, std::span<const VarIndex> image);

/// All monomials of total degree d in n variables, in degree_lex_less order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d);

} // namespace bettisplit

#endif
