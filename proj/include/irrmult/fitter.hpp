#pragma once

#include <cstdint>
#include <vector>

#include "irrmult/checked.hpp"
#include "irrmult/sweep.hpp"

namespace irrmult {

enum class GrowthKind { hilbert, irreducibility };

/// Sampled values of an eventually-polynomial integer function, v[n] for
/// n = 0..N.
struct GrowthTable {
  GrowthKind kind;
  std::vector<std::int64_t> values;
};

/// An integer polynomial in the alternating binomial basis,
///   P(n) = sum_{i=0}^{D} (-1)^i c_i C(n + D - i, D - i).
/// For a Hilbert-Samuel table the c_i are the Hilbert coefficients and c_0
/// is the multiplicity; for an irreducibility table c_0 is the irreducible
/// multiplicity. stabilization_index is the least n from which P reproduces
/// every sample exactly.
struct BinomialPolynomial {
  int degree = 0;
  std::vector<std::int64_t> coefficients;
  int stabilization_index = 0;

  std::int64_t evaluate(std::int64_t n) const {
    std::int64_t total = 0;
    for (int i = 0; i <= degree; ++i) {
      std::int64_t term = checked_mul(coefficients[static_cast<std::size_t>(i)],
                                      binomial(n + degree - i, degree - i));
      total = (i % 2 == 0) ? checked_add(total, term) : checked_sub(total, term);
    }
    return total;
  }

  std::int64_t leading_coefficient() const { return coefficients.front(); }
};

namespace detail {

inline std::vector<std::int64_t> difference_level(
    const std::vector<std::int64_t>& prev, int level) {
  std::vector<std::int64_t> next(prev.size(), 0);
  for (std::size_t n = static_cast<std::size_t>(level); n < prev.size(); ++n)
    next[n] = checked_sub(prev[n], prev[n - 1]);
  return next;
}

inline bool tail_constant(const std::vector<std::int64_t>& lvl, int level,
                          int window, std::int64_t& constant) {
  const int N = static_cast<int>(lvl.size()) - 1;
  const int from = N - window + 1;
  if (from < level) return false;
  constant = lvl[static_cast<std::size_t>(N)];
  for (int n = from; n < N; ++n)
    if (lvl[static_cast<std::size_t>(n)] != constant) return false;
  return true;
}

// Leading coefficients by repeated difference-and-peel, without the final
// re-verification (done once by the public fit on the assembled polynomial).
inline void fit_coefficients(const std::vector<std::int64_t>& values, int D,
                             int window, std::vector<std::int64_t>& out) {
  std::vector<std::int64_t> lvl = values;
  for (int j = 1; j <= D; ++j) lvl = difference_level(lvl, j);
  std::int64_t c0 = 0;
  if (!tail_constant(lvl, D, window, c0)) {
    std::int64_t c1 = 0;
    std::vector<std::int64_t> above = difference_level(lvl, D + 1);
    if (tail_constant(above, D + 1, window, c1) && c1 != 0)
      throw DegreeExceededError(
          "tail differences stabilize one degree above the requested bound");
    throw NotStabilizedError(
        "tail differences are still moving; raise the sampling bound n_max");
  }
  out.push_back(c0);
  if (D == 0) return;
  std::vector<std::int64_t> remainder(values.size());
  for (std::size_t n = 0; n < values.size(); ++n)
    remainder[n] = checked_sub(
        values[n], checked_mul(c0, binomial(static_cast<std::int64_t>(n) + D, D)));
  std::vector<std::int64_t> inner;
  fit_coefficients(remainder, D - 1, window, inner);
  // remainder(n) = -sum (-1)^i c_{i+1} C(n+D-1-i, D-1-i)
  for (std::int64_t c : inner) out.push_back(checked_sub(0, c));
}

}  // namespace detail

/// Fit a degree-D binomial-basis polynomial to the table. The last `window`
/// D-th differences must agree (that constant is the leading coefficient);
/// lower coefficients come from peeling the leading term and recursing. The
/// assembled polynomial is re-verified exactly against every sample from
/// the stabilization index onward, and at least `window` tail samples must
/// match; anything less throws NotStabilized.
inline BinomialPolynomial fit(const GrowthTable& table, int D, int window) {
  if (D < 0) throw DomainError("negative degree bound");
  if (window < 1) throw DomainError("window must be positive");
  const int N = static_cast<int>(table.values.size()) - 1;
  if (N + 1 < D + window + 2)
    throw NotStabilizedError("table too short for degree " + std::to_string(D) +
                             " with window " + std::to_string(window) +
                             "; raise the sampling bound n_max");
  BinomialPolynomial poly;
  poly.degree = D;
  detail::fit_coefficients(table.values, D, window, poly.coefficients);

  int last_mismatch = -1;
  for (int n = 0; n <= N; ++n)
    if (poly.evaluate(n) != table.values[static_cast<std::size_t>(n)])
      last_mismatch = n;
  poly.stabilization_index = last_mismatch + 1;
  if (N - poly.stabilization_index + 1 < window)
    throw NotStabilizedError(
        "fitted polynomial matches fewer than " + std::to_string(window) +
        " tail samples; raise the sampling bound n_max");
  return poly;
}

/// Hilbert coefficients of (M, I): fit of the ell(M/I^{n+1}M) table at
/// degree t = dim M. The leading coefficient is the multiplicity e0.
inline BinomialPolynomial hilbert_coefficients(GrowthSampler& sampler,
                                               int window = 4) {
  GrowthTable table{GrowthKind::hilbert, sampler.hilbert_table()};
  return fit(table, sampler.module().dimension(), window);
}

inline BinomialPolynomial hilbert_coefficients(const ModulePresentation& M,
                                               const MonomialIdeal& I, int n_max,
                                               int window = 4) {
  GrowthSampler sampler(M, I, n_max);
  return hilbert_coefficients(sampler, window);
}

/// Irreducibility coefficients of (M, I): fit of the index-of-reducibility
/// table ir_M(I^{n+1}M) at degree max(t-1, 0). The leading coefficient is
/// the irreducible multiplicity f0.
inline BinomialPolynomial irreducibility_coefficients(GrowthSampler& sampler,
                                                      int window = 4) {
  GrowthTable table{GrowthKind::irreducibility, sampler.irreducibility_table()};
  int t = sampler.module().dimension();
  return fit(table, t > 1 ? t - 1 : 0, window);
}

inline BinomialPolynomial irreducibility_coefficients(const ModulePresentation& M,
                                                      const MonomialIdeal& I,
                                                      int n_max, int window = 4) {
  GrowthSampler sampler(M, I, n_max);
  return irreducibility_coefficients(sampler, window);
}

}  // namespace irrmult
