#ifndef BETTISPLIT_FAT_POINTS_HPP
#define BETTISPLIT_FAT_POINTS_HPP

#include "bettisplit/betti.hpp"
#include "bettisplit/splitting.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bettisplit {

/// Three coordinate fat points P1=[1:0:..], P2=[0:1:0:..], P3=[0:0:1:0:..]
/// in P^{n-1} with multiplicities a <= b <= c. a = 0 drops P1, leaving two
/// points.
struct FatPointParams {
  std::size_t n = 4;
  unsigned a = 1;
  unsigned b = 1;
  unsigned c = 1;

  /// MalformedInput unless n >= 3, a <= b <= c and c >= 1.
  void validate() const;
  std::string to_string() const;
};

/// (x2..xn)^a ∩ (x1,x3..xn)^b ∩ (x1,x2,x4..xn)^c.
MonomialIdeal fat_points_ideal(const FatPointParams& p);

/// Same intersection with the multiplicities attached to P1, P2, P3 in any
/// order; 0 makes that factor the unit ideal. Requires n >= 3.
MonomialIdeal fat_points_ideal(std::size_t n, unsigned m1, unsigned m2, unsigned m3);

/// J = x1 * I_{n,a,b-1,c-1}, K = (x3..xn)^b ∩ (x2,x4..xn)^c.
///
/// Requires n >= 4 and 1 <= a <= b <= c (HypothesisError otherwise). When
/// the generators of J and K are not exactly G(I), throws
/// ConstructionFailure naming every offending generator; this is what
/// happens for c = a. If c = a and the construction happens to partition
/// G(I) anyway, a plain HypothesisError is raised.
std::pair<MonomialIdeal, MonomialIdeal> theorem51_split(const FatPointParams& p);

struct FatPointSplitCheck {
  MonomialIdeal j = MonomialIdeal::zero(0);
  MonomialIdeal k = MonomialIdeal::zero(0);
  SplittingReport report;
  bool j_componentwise_linear = false;
  bool k_componentwise_linear = false;
};

/// theorem51_split plus the engine checks the theorem promises.
FatPointSplitCheck verify_theorem51_split(const FatPointParams& p, FieldSpec field,
                                          const ComputeOptions& options = {});

/// I_{n,a} = x_n I_{n,a-1} + I_{n-1,a}, the second summand embedded in the
/// first n-1 variables. DegenerateSplit for a = 0, HypothesisError for
/// n < 4, ConstructionFailure if the generator sets do not partition G(I_{n,a}).
std::pair<MonomialIdeal, MonomialIdeal> xn_split_equal_multiplicity(std::size_t n, unsigned a);

/// Image of y1..y_{n-1} under the relabeling that turns the two-point ideal
/// I_{n-1,b,c} into the K of theorem51_split: y1 -> x4, y2 -> x2, y3 -> x3,
/// y_k -> x_{k+1} for k >= 4.
std::vector<VarIndex> two_point_embedding(std::size_t n);

/// Betti table assembled from the x1-splitting recursion
///   beta_{i,j}(I) = beta_{i,j-1}(I_{n,a,b-1,c-1}) + beta_{i,j}(I_{n-1,b,c}) + beta_{i-1,j-1}(I_{n-1,b,c}),
/// with multiplicities re-sorted at every step. Two-point ideals and ideals
/// of equal multiplicities are computed directly. HypothesisError unless
/// n >= 4, 1 <= a <= b <= c and c != a.
BettiTable betti_recursive(const FatPointParams& p, FieldSpec field, const ComputeOptions& options = {});

/// beta_{i,j}(I_{n,a,b,c}) from the piecewise closed forms (one for a+b <= c,
/// one for a+b > c). The row j = i + c and the equal-multiplicity terms are
/// evaluated with the direct engine. Same hypotheses as betti_recursive.
std::int64_t betti_closed_form(const FatPointParams& p, int i, int j, FieldSpec field,
                               const ComputeOptions& options = {});

/// Every nonzero closed-form entry, for 0 <= i < n and i+c <= j <= i+b+c.
/// InvariantViolation if a formula evaluates to a negative number.
BettiTable closed_form_table(const FatPointParams& p, FieldSpec field, const ComputeOptions& options = {});

/// C(n, k), zero when n < 0, k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace bettisplit

#endif
