#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "irrmult/checked.hpp"
#include "irrmult/errors.hpp"

namespace irrmult {

/// A monomial is its exponent vector; the all-zero vector is 1.
/// The vector length is the arity of the ambient ring the monomial lives in.
struct Monomial {
  std::vector<std::int32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<std::int32_t> exps)
      : exponents(std::move(exps)) {
    for (auto e : exponents)
      if (e < 0) throw DomainError("negative exponent in monomial");
  }

  static Monomial one(int arity) {
    return Monomial(std::vector<std::int32_t>(static_cast<std::size_t>(arity), 0));
  }

  static Monomial variable(int arity, int var, std::int32_t exp = 1) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(arity), 0);
    e.at(static_cast<std::size_t>(var)) = exp;
    return Monomial(std::move(e));
  }

  int arity() const { return static_cast<int>(exponents.size()); }

  bool is_one() const {
    for (auto e : exponents)
      if (e != 0) return false;
    return true;
  }

  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (auto e : exponents) d += e;
    return d;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
};

inline void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw ArityMismatchError("monomials from different ambient rings");
}

/// a | b componentwise.
inline bool divides(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<std::int32_t> e(a.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = checked_exp_add(a.exponents[i], b.exponents[i]);
  return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<std::int32_t> e(a.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a.exponents[i] > b.exponents[i] ? a.exponents[i] : b.exponents[i];
  return Monomial(std::move(e));
}

/// g / gcd(g, u): the generator image under the colon by the monomial u.
inline Monomial quotient_by_gcd(const Monomial& g, const Monomial& u) {
  require_same_arity(g, u);
  std::vector<std::int32_t> e(g.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int32_t m = g.exponents[i] < u.exponents[i] ? g.exponents[i] : u.exponents[i];
    e[i] = g.exponents[i] - m;
  }
  return Monomial(std::move(e));
}

/// Exact division a / b; b must divide a.
inline Monomial divide_exact(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<std::int32_t> e(a.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (b.exponents[i] > a.exponents[i])
      throw DomainError("monomial division with nontrivial remainder");
    e[i] = a.exponents[i] - b.exponents[i];
  }
  return Monomial(std::move(e));
}

/// Canonical generator order: total degree first, then reverse-lexicographic
/// on the exponent vector so that earlier variables come first within a
/// degree (x^2, xy, y^2). Deterministic everywhere; nothing depends on the
/// choice beyond reproducibility.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents > b.exponents;
}

}  // namespace irrmult
