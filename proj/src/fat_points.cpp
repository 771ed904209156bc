#include "bettisplit/fat_points.hpp"

#include "bettisplit/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <tuple>

namespace bettisplit {

namespace {

// All variables except x_skip, 1-based.
std::vector<VarIndex> all_but(std::size_t n, VarIndex skip) {
  std::vector<VarIndex> vars;
  for (VarIndex v = 1; v <= n; ++v)
    if (v != skip)
      vars.push_back(v);
  return vars;
}

void require_theorem_range(const FatPointParams& p, const char* what) {
  p.validate();
  if (p.n < 4)
    throw HypothesisError(std::string(what) + " needs n >= 4, got " + p.to_string());
  if (p.a < 1)
    throw HypothesisError(std::string(what) + " needs three points (a >= 1), got " + p.to_string());
}

void require_distinct_extremes(const FatPointParams& p, const char* what) {
  require_theorem_range(p, what);
  if (p.a == p.c)
    throw HypothesisError(std::string(what) + " at step 0: c = a in " + p.to_string());
}

std::array<unsigned, 3> sorted(unsigned x, unsigned y, unsigned z) {
  std::array<unsigned, 3> m{x, y, z};
  std::sort(m.begin(), m.end());
  return m;
}

void add_table(BettiTable& into, const BettiTable& from, int di, int dj) {
  for (const auto& [key, value] : from.entries())
    into.add(key.first + di, key.second + dj, value);
}

// Direct-engine tables of the fat point ideals that appear as base cases,
// keyed by (n, sorted multiplicities).
class BaseTables {
public:
  BaseTables(FieldSpec field, const ComputeOptions& options) : field_(field), options_(options) {}

  const BettiTable& get(std::size_t n, unsigned m1, unsigned m2, unsigned m3) {
    const auto m = sorted(m1, m2, m3);
    const auto key = std::make_tuple(n, m[0], m[1], m[2]);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, graded_betti(fat_points_ideal(n, m[0], m[1], m[2]), field_, options_)).first;
    return it->second;
  }

  std::uint64_t beta(std::size_t n, unsigned m1, unsigned m2, unsigned m3, int i, int j) {
    return get(n, m1, m2, m3)(i, j);
  }

  FieldSpec field() const { return field_; }

private:
  FieldSpec field_;
  ComputeOptions options_;
  std::map<std::tuple<std::size_t, unsigned, unsigned, unsigned>, BettiTable> cache_;
};

BettiTable recurse(std::size_t n, std::array<unsigned, 3> m, BaseTables& base) {
  const auto [a, b, c] = m;
  if (a == 0 || a == c)
    return base.get(n, a, b, c);
  // x-splitting at the point of smallest multiplicity
  BettiTable out(base.field(), n);
  add_table(out, recurse(n, sorted(a, b - 1, c - 1), base), 0, 1);
  const BettiTable& two_points = base.get(n - 1, 0, b, c);
  add_table(out, two_points, 0, 0);
  add_table(out, two_points, 1, 1);
  return out;
}

class ClosedForm {
public:
  ClosedForm(const FatPointParams& p, FieldSpec field, const ComputeOptions& options)
      : p_(p), base_(field, options) {
    require_distinct_extremes(p, "the closed-form Betti formula");
  }

  std::int64_t at(int i, int j) {
    const std::int64_t n = static_cast<std::int64_t>(p_.n);
    const std::int64_t a = p_.a, b = p_.b, c = p_.c;
    if (i < 0 || j < i + c || j >= b + c + 1 + i)
      return 0;

    auto tail = [&](std::int64_t mult) { return binomial(n - 3 + c + mult - j + i, n - 3); };
    const std::int64_t row = binomial(n - 2, i);

    if (a + b <= c) {
      if (j == i + c) {
        std::int64_t sum = beta(p_.n, 0, p_.a, p_.c - p_.b, i, i + c - b);
        for (std::int64_t r = 0; r <= b - 1; ++r)
          sum += gamma_like(b - r, c - r, i, c - r);
        return sum;
      }
      if (j <= a + c + i)
        return row * (tail(a) + tail(b));
      return row * tail(b);
    }

    const std::int64_t k = a + b - c;
    if (j == i + c) {
      std::int64_t sum = beta(p_.n, k, k, k, i, i + k);
      for (std::int64_t r = 0; r <= c - a - 1; ++r)
        sum += gamma_like(b - r, c - r, i, c - r);
      for (std::int64_t r = 0; r <= c - b - 1; ++r)
        sum += gamma_like(a - r, a - r, i, a - r);
      return sum;
    }
    if (j <= a + b + i) {
      const std::int64_t correction = tail(a) + tail(b) - 2 * binomial(n - 3 + a + b - j + i, n - 3);
      return beta(p_.n, k, k, k, i, j + k - c) + row * correction;
    }
    if (j <= a + c + i)
      return row * (tail(a) + tail(b));
    return row * tail(b);
  }

private:
  std::int64_t beta(std::size_t n, std::int64_t m1, std::int64_t m2, std::int64_t m3, int i, std::int64_t j) {
    return static_cast<std::int64_t>(base_.beta(n, static_cast<unsigned>(m1), static_cast<unsigned>(m2),
                                                static_cast<unsigned>(m3), i, static_cast<int>(j)));
  }

  // beta_{i,i+t}(I_{n-1,s,u}) + beta_{i-1,i+t-1}(I_{n-1,s,u}) for the two-point
  // ideal with multiplicities s <= u.
  std::int64_t gamma_like(std::int64_t s, std::int64_t u, int i, std::int64_t t) {
    return beta(p_.n - 1, 0, s, u, i, i + t) + beta(p_.n - 1, 0, s, u, i - 1, i + t - 1);
  }

  FatPointParams p_;
  BaseTables base_;
};

} // namespace

void FatPointParams::validate() const {
  if (n < 3)
    throw MalformedInput("fat points need n >= 3 variables, got n = " + std::to_string(n));
  if (!(a <= b && b <= c) || c < 1)
    throw MalformedInput("fat point multiplicities must satisfy 0 <= a <= b <= c, c >= 1; got " + to_string());
}

std::string FatPointParams::to_string() const {
  return "(n,a,b,c) = (" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

MonomialIdeal fat_points_ideal(std::size_t n, unsigned m1, unsigned m2, unsigned m3) {
  if (n < 3)
    throw MalformedInput("fat points need n >= 3 variables, got n = " + std::to_string(n));
  MonomialIdeal out = power_of_subset_ideal(all_but(n, 1), m1, n);
  out = ideal_intersection(out, power_of_subset_ideal(all_but(n, 2), m2, n));
  return ideal_intersection(out, power_of_subset_ideal(all_but(n, 3), m3, n));
}

MonomialIdeal fat_points_ideal(const FatPointParams& p) {
  p.validate();
  return fat_points_ideal(p.n, p.a, p.b, p.c);
}

std::pair<MonomialIdeal, MonomialIdeal> theorem51_split(const FatPointParams& p) {
  require_theorem_range(p, "the x1-splitting");
  const std::size_t n = p.n;
  const MonomialIdeal whole = fat_points_ideal(p);
  MonomialIdeal j = scale_by_monomial(Monomial::variable(n, 1), fat_points_ideal(n, p.a, p.b - 1, p.c - 1));

  std::vector<VarIndex> from3;
  for (VarIndex v = 3; v <= n; ++v)
    from3.push_back(v);
  std::vector<VarIndex> skip3 = all_but(n, 3);
  skip3.erase(skip3.begin()); // drop x1
  MonomialIdeal k =
      ideal_intersection(power_of_subset_ideal(from3, p.b, n), power_of_subset_ideal(skip3, p.c, n));

  if (ideal_sum(j, k) != whole)
    throw InvariantViolation("x1-splitting construction does not sum to I for " + p.to_string());

  std::vector<std::string> offending;
  for (const auto* part : {&j, &k})
    for (const auto& g : part->generators())
      if (!whole.is_minimal_generator(g))
        offending.push_back(g.to_string());
  if (!offending.empty()) {
    std::string names;
    for (const auto& o : offending)
      names += (names.empty() ? "" : ", ") + o;
    std::string msg = "x1-splitting construction fails for " + p.to_string() + ": " + names +
                      (offending.size() == 1 ? " is" : " are") + " not a minimal generator of I";
    if (p.a == p.c)
      msg += " (hypothesis c != a is violated)";
    throw ConstructionFailure(msg, std::move(offending));
  }
  if (p.a == p.c)
    throw HypothesisError("the x1-splitting needs c != a, got " + p.to_string());
  return {std::move(j), std::move(k)};
}

FatPointSplitCheck verify_theorem51_split(const FatPointParams& p, FieldSpec field, const ComputeOptions& options) {
  auto [j, k] = theorem51_split(p);
  FatPointSplitCheck out;
  out.report = is_betti_splitting(fat_points_ideal(p), j, k, field, options);
  out.j_componentwise_linear = is_componentwise_linear(j, field, options);
  out.k_componentwise_linear = is_componentwise_linear(k, field, options);
  out.j = std::move(j);
  out.k = std::move(k);
  return out;
}

std::pair<MonomialIdeal, MonomialIdeal> xn_split_equal_multiplicity(std::size_t n, unsigned a) {
  if (a == 0)
    throw DegenerateSplit("I_{n,0} is the unit ideal; there is nothing to split");
  if (n < 4)
    throw HypothesisError("the x_n-splitting of I_{n,a} needs n >= 4");
  const MonomialIdeal whole = fat_points_ideal(n, a, a, a);
  MonomialIdeal j = scale_by_monomial(Monomial::variable(n, n), fat_points_ideal(n, a - 1, a - 1, a - 1));
  std::vector<VarIndex> first(n - 1);
  for (std::size_t v = 0; v + 1 < n; ++v)
    first[v] = v + 1;
  MonomialIdeal k = relabel(fat_points_ideal(n - 1, a, a, a), n, first);

  std::vector<std::string> offending;
  for (const auto* part : {&j, &k})
    for (const auto& g : part->generators())
      if (!whole.is_minimal_generator(g))
        offending.push_back(g.to_string());
  if (!offending.empty() || !partition_is_valid(whole, j, k)) {
    std::string names;
    for (const auto& o : offending)
      names += (names.empty() ? "" : ", ") + o;
    throw ConstructionFailure("x_n-splitting of I_{" + std::to_string(n) + "," + std::to_string(a) +
                                  "} does not partition G(I)" + (names.empty() ? "" : ": " + names),
                              std::move(offending));
  }
  return {std::move(j), std::move(k)};
}

std::vector<VarIndex> two_point_embedding(std::size_t n) {
  if (n < 4)
    throw HypothesisError("two_point_embedding needs n >= 4");
  std::vector<VarIndex> image(n - 1);
  image[0] = 4;
  image[1] = 2;
  image[2] = 3;
  for (std::size_t k = 4; k <= n - 1; ++k)
    image[k - 1] = k + 1;
  return image;
}

BettiTable betti_recursive(const FatPointParams& p, FieldSpec field, const ComputeOptions& options) {
  require_distinct_extremes(p, "the splitting recursion");
  BaseTables base(field, options);
  return recurse(p.n, {p.a, p.b, p.c}, base);
}

std::int64_t betti_closed_form(const FatPointParams& p, int i, int j, FieldSpec field,
                               const ComputeOptions& options) {
  ClosedForm form(p, field, options);
  return form.at(i, j);
}

BettiTable closed_form_table(const FatPointParams& p, FieldSpec field, const ComputeOptions& options) {
  ClosedForm form(p, field, options);
  BettiTable out(field, p.n);
  const int c = static_cast<int>(p.c);
  const int b = static_cast<int>(p.b);
  for (int i = 0; i < static_cast<int>(p.n); ++i)
    for (int j = i + c; j <= i + b + c; ++j) {
      const std::int64_t v = form.at(i, j);
      if (v < 0)
        throw InvariantViolation("closed form gives beta_{" + std::to_string(i) + "," + std::to_string(j) +
                                 "} = " + std::to_string(v) + " for " + p.to_string());
      out.add(i, j, static_cast<std::uint64_t>(v));
    }
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    r = r * (n - k + t) / t;
    if (r > std::numeric_limits<std::int64_t>::max())
      throw OverflowError("binomial coefficient C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
  }
  return static_cast<std::int64_t>(r);
}

} // namespace bettisplit
