#ifndef BETTISPLIT_SPLITTING_HPP
#define BETTISPLIT_SPLITTING_HPP

#include "bettisplit/betti.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bettisplit {

/// Outcome of checking beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J ∩ K).
struct SplittingReport {
  bool verdict = false;
  /// First (i, j), in lexicographic order, where the identity fails.
  std::optional<BettiTable::Key> witness;
  BettiTable table_i;
  BettiTable table_j;
  BettiTable table_k;
  BettiTable table_intersection;
};

/// Compares the four tables entry by entry over the union of their supports.
SplittingReport compare_splitting_tables(BettiTable ti, BettiTable tj, BettiTable tk, BettiTable tjk);

/// Throws PreconditionError unless G(I) = G(J) ⊔ G(K) with J, K nonzero.
SplittingReport is_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                   FieldSpec field, const ComputeOptions& options = {});

/// J = generators divisible by x_i, K = the rest. DegenerateSplit if either is empty.
std::pair<MonomialIdeal, MonomialIdeal> xi_split(const MonomialIdeal& ideal, VarIndex i);

/// Every i whose x_i-partition is non-degenerate and a Betti splitting.
std::vector<VarIndex> admits_xi_splitting(const MonomialIdeal& ideal, FieldSpec field,
                                          const ComputeOptions& options = {});

struct SplittingCandidate {
  /// Bit k set means the k-th generator of I (canonical order) belongs to J.
  std::uint64_t mask = 0;
  MonomialIdeal j = MonomialIdeal::zero(0);
  MonomialIdeal k = MonomialIdeal::zero(0);
  SplittingReport report;
};

struct SplittingSearch {
  std::vector<SplittingCandidate> splittings;
  std::uint64_t partitions_examined = 0;
  /// 2^(g-1) - 1: unordered pairs {G(J), G(K)} with both parts nonempty.
  std::uint64_t unordered_partitions = 0;
  /// sum_{s=1}^{floor(g/2)} C(g, s): choices of the smaller part by size.
  /// This over-counts the unordered pairs when g is even.
  std::uint64_t size_limited_choices = 0;
};

inline constexpr std::size_t default_search_generator_bound = 20;

/// Enumerates every unordered partition of G(I) once, generator 0 always in
/// J, in increasing order of the J bitmask. Stops after `limit` verified
/// splittings (0 = no limit). ResourceError when |G(I)| exceeds the bound.
SplittingSearch search_betti_splittings(const MonomialIdeal& ideal, FieldSpec field, std::size_t limit = 0,
                                        const ComputeOptions& options = {},
                                        std::size_t generator_bound = default_search_generator_bound);

/// For I with a d-linear resolution: whether J and K both have d-linear
/// resolutions. The splitting verdict is computed as well and must agree,
/// and when the criterion holds J ∩ K must have a (d+1)-linear resolution;
/// either failing raises InvariantViolation.
bool linear_splitting_criterion(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                FieldSpec field, const ComputeOptions& options = {});

/// Whether J and K are both componentwise linear. When they are, the
/// splitting identity is verified too; a failure raises InvariantViolation.
bool componentwise_splitting_criterion(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                       FieldSpec field, const ComputeOptions& options = {});

} // namespace bettisplit

#endif
