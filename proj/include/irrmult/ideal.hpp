#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "irrmult/ambient.hpp"
#include "irrmult/monomial.hpp"

namespace irrmult {

namespace detail {

/// Keep only the divisibility-minimal monomials, canonically sorted.
/// Candidates are deduplicated first; within one total degree no distinct
/// monomial divides another, so each candidate only has to be tested
/// against the already-accepted generators of strictly smaller degree.
inline std::vector<Monomial> minimalize_gens(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> minimal;
  minimal.reserve(gens.size());
  std::size_t lower_degree_end = 0;  // accepted gens with degree < current
  std::int64_t current_degree = gens.front().total_degree();
  for (const Monomial& cand : gens) {
    if (cand.total_degree() != current_degree) {
      current_degree = cand.total_degree();
      lower_degree_end = minimal.size();
    }
    bool dominated = false;
    for (std::size_t i = 0; i < lower_degree_end; ++i) {
      if (divides(minimal[i], cand)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(cand);
  }
  return minimal;
}

}  // namespace detail

/// A monomial ideal held by its minimal generators in canonical order.
/// The empty generator set is the zero ideal; the set {1} is the unit ideal.
/// Immutable after construction; all operations below are pure functions.
class MonomialIdeal {
public:
  static MonomialIdeal make(AmbientRing ambient, std::vector<Monomial> gens) {
    int s = ambient.arity();
    for (const auto& g : gens)
      if (g.arity() != s)
        throw ArityMismatchError("generator arity does not match ambient ring");
    return MonomialIdeal(std::move(ambient), detail::minimalize_gens(std::move(gens)));
  }

  static MonomialIdeal zero(AmbientRing ambient) {
    return MonomialIdeal(std::move(ambient), {});
  }

  static MonomialIdeal unit(AmbientRing ambient) {
    int s = ambient.arity();
    return MonomialIdeal(std::move(ambient), {Monomial::one(s)});
  }

  /// The maximal ideal (x_1, ..., x_s).
  static MonomialIdeal maximal(AmbientRing ambient) {
    int s = ambient.arity();
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) gens.push_back(Monomial::variable(s, i));
    return MonomialIdeal(std::move(ambient), std::move(gens));
  }

  const AmbientRing& ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int arity() const { return ambient_.arity(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }

private:
  MonomialIdeal(AmbientRing ambient, std::vector<Monomial> minimal_gens)
      : ambient_(std::move(ambient)), gens_(std::move(minimal_gens)) {}

  AmbientRing ambient_;
  std::vector<Monomial> gens_;
};

inline void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ambient() == b.ambient()))
    throw ArityMismatchError("ideals from different ambient rings");
}

inline MonomialIdeal minimalize(AmbientRing ambient, std::vector<Monomial> gens) {
  return MonomialIdeal::make(std::move(ambient), std::move(gens));
}

/// u is in I iff some generator divides u. The zero ideal contains nothing.
inline bool contains(const MonomialIdeal& I, const Monomial& u) {
  if (u.arity() != I.arity())
    throw ArityMismatchError("monomial arity does not match ideal");
  for (const Monomial& g : I.generators())
    if (divides(g, u)) return true;
  return false;
}

inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  return a.generators() == b.generators();
}

inline MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::make(a.ambient(), std::move(gens));
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(mul(g, h));
  return MonomialIdeal::make(a.ambient(), std::move(gens));
}

/// I^n by square-and-multiply; I^0 is the unit ideal by convention.
inline MonomialIdeal power(const MonomialIdeal& I, int n) {
  if (n < 0) throw DomainError("negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(I.ambient());
  MonomialIdeal base = I;
  int e = n;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

/// Pairwise lcms of generators.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal::make(a.ambient(), std::move(gens));
}

/// (I : u) for a single monomial u: generated by g / gcd(g, u).
inline MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u) {
  if (u.arity() != I.arity())
    throw ArityMismatchError("monomial arity does not match ideal");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(quotient_by_gcd(g, u));
  return MonomialIdeal::make(I.ambient(), std::move(gens));
}

/// (I : J) = { r : rJ within I }, as the intersection over generators of J.
/// The zero ideal J is rejected: the colon by (0) is the whole ring and is
/// never what a caller means here.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  if (J.is_zero()) throw DomainError("colon by the zero ideal");
  bool first = true;
  MonomialIdeal result = MonomialIdeal::unit(I.ambient());
  for (const Monomial& u : J.generators()) {
    MonomialIdeal part = colon_by_monomial(I, u);
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

/// Exponent-clamp radical: each positive exponent drops to 1.
inline MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) {
    std::vector<std::int32_t> e(g.exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.exponents[i] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(I.ambient(), std::move(gens));
}

/// Least e with x_var^e in I, read off the generators: only a pure-power
/// generator can divide a pure power. nullopt when none exists.
inline std::optional<std::int32_t> pure_power_exponent(const MonomialIdeal& I, int var) {
  std::optional<std::int32_t> best;
  for (const Monomial& g : I.generators()) {
    bool pure = true;
    for (std::size_t i = 0; i < g.exponents.size(); ++i) {
      if (static_cast<int>(i) != var && g.exponents[i] != 0) {
        pure = false;
        break;
      }
    }
    if (!pure) continue;
    std::int32_t e = g.exponents[static_cast<std::size_t>(var)];
    if (!best || e < *best) best = e;
  }
  return best;
}

/// First variable with no pure-power generator, if any. Drives both the
/// m-primary test and the "missing pure power" diagnostics.
inline std::optional<int> missing_pure_power_variable(const MonomialIdeal& I) {
  for (int v = 0; v < I.arity(); ++v)
    if (!pure_power_exponent(I, v)) return v;
  return std::nullopt;
}

/// Proper and containing a pure power of every variable, i.e. dim P/I = 0.
inline bool is_m_primary(const MonomialIdeal& I) {
  if (!I.is_proper()) return false;
  return !missing_pure_power_variable(I).has_value();
}

}  // namespace irrmult
