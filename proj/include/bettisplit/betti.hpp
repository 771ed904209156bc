#ifndef BETTISPLIT_BETTI_HPP
#define BETTISPLIT_BETTI_HPP

#include "bettisplit/complex.hpp"
#include "bettisplit/field.hpp"
#include "bettisplit/homology.hpp"
#include "bettisplit/ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bettisplit {

/// Knobs shared by every Betti computation.
struct ComputeOptions {
  /// Worker threads for the per-multidegree homology map. Never changes results.
  std::size_t jobs = 1;
  /// Maximum number of lcm-lattice points before giving up with ResourceError.
  std::size_t lattice_cap = 200000;
  /// Maximum face count of a single Koszul complex.
  std::size_t face_cap = default_face_cap;
};

/// Graded Betti numbers beta_{i,j} of an ideal (not of R/I), stored sparsely.
/// Zero entries are never stored.
class BettiTable {
public:
  using Key = std::pair<int, int>; // (homological index i, internal degree j)

  BettiTable() = default;
  BettiTable(FieldSpec field, std::size_t n) : field_(field), n_(n) {}

  void add(int i, int j, std::uint64_t count);

  /// beta_{i,j}; zero outside the stored support (including i < 0).
  std::uint64_t operator()(int i, int j) const;

  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  FieldSpec field() const { return field_; }
  std::size_t num_vars() const { return n_; }

  /// Largest i with a nonzero entry; PreconditionError when empty.
  int projective_dimension() const;

  /// Same entries with every internal degree raised by `shift` (the table of
  /// m*I for deg m = shift).
  BettiTable shifted(int shift) const;

  bool operator==(const BettiTable&) const = default;

private:
  FieldSpec field_;
  std::size_t n_ = 0;
  std::map<Key, std::uint64_t> entries_;
};

/// lcm-closure of G(I): every multidegree that can carry a nonzero Betti
/// number. Sorted by degree_lex_less. ResourceError beyond `cap` points.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap);

/// Upper Koszul simplicial complex of I at multidegree b: the subsets tau of
/// {1..n} with x^(b - tau) in I.
SimplicialComplex koszul_subcomplex(const MonomialIdeal& ideal, const Monomial& b);

/// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)), summed over the lcm lattice with
/// j = |b|. The zero ideal yields an empty table.
BettiTable graded_betti(const MonomialIdeal& ideal, FieldSpec field, const ComputeOptions& options = {});

/// max{ j - i : beta_{i,j} != 0 }; UndefinedError on an empty table.
int regularity(const BettiTable& table);

/// For I generated in a single degree d: reg(I) == d. NotEquigenerated
/// otherwise, PreconditionError for the zero ideal.
bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field, const ComputeOptions& options = {});

/// Smallest j in [indeg, max generator degree] for which I_<j> lacks a
/// j-linear resolution, or nullopt when I is componentwise linear.
std::optional<std::uint64_t> first_nonlinear_component(const MonomialIdeal& ideal, FieldSpec field,
                                                       const ComputeOptions& options = {});

bool is_componentwise_linear(const MonomialIdeal& ideal, FieldSpec field, const ComputeOptions& options = {});

} // namespace bettisplit

#endif
