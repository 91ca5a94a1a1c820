#pragma once

#include <cstdint>
#include <vector>

#include "irrmult/quotient.hpp"

namespace irrmult {

/// A finitely generated module presented as a finite direct sum of cyclic
/// quotients P/J_i. Every length, socle and colon used downstream is
/// computed componentwise, which is exactly why the model is restricted to
/// this shape. Components may be the zero ideal (a free summand) but never
/// the unit ideal (a zero summand would break generator counting).
class ModulePresentation {
public:
  static ModulePresentation make(AmbientRing ambient,
                                 std::vector<MonomialIdeal> components) {
    if (components.empty())
      throw DomainError("module needs at least one component");
    int t = 0;
    for (const auto& J : components) {
      if (!(J.ambient() == ambient))
        throw ArityMismatchError("component from a different ambient ring");
      if (J.is_unit())
        throw DomainError("unit-ideal component denotes the zero module");
      int d = krull_dimension(J);
      if (d > t) t = d;
    }
    return ModulePresentation(std::move(ambient), std::move(components), t);
  }

  const AmbientRing& ambient() const { return ambient_; }
  const std::vector<MonomialIdeal>& components() const { return components_; }
  int component_count() const { return static_cast<int>(components_.size()); }

  /// dim M = max over components of dim P/J_i.
  int dimension() const { return dimension_; }

private:
  ModulePresentation(AmbientRing ambient, std::vector<MonomialIdeal> comps, int t)
      : ambient_(std::move(ambient)), components_(std::move(comps)), dimension_(t) {}

  AmbientRing ambient_;
  std::vector<MonomialIdeal> components_;
  int dimension_;
};

/// The ideal presenting the i-th component of I^n M, i.e. I^n + J_i.
inline MonomialIdeal component_ideal_at(const ModulePresentation& M,
                                        const MonomialIdeal& I, int n, int i) {
  if (i < 0 || i >= M.component_count())
    throw DomainError("component index out of range");
  require_same_ambient(M.components().front(), I);
  return add(power(I, n), M.components()[static_cast<std::size_t>(i)]);
}

/// True when every component of M has finite length modulo Q, i.e. every
/// Q + J_i is m-primary. Readable straight off the generators: each
/// variable needs a pure power in Q or in J_i.
inline bool has_finite_colength(const ModulePresentation& M, const MonomialIdeal& Q) {
  for (const auto& J : M.components()) {
    for (int v = 0; v < M.ambient().arity(); ++v)
      if (!pure_power_exponent(Q, v) && !pure_power_exponent(J, v)) return false;
  }
  return true;
}

/// l(M / I^{n+1} M). Sampling starts at n = 0, which quotients by I^1;
/// l(M / I^0 M) = 0 by the power(I, 0) = (1) convention.
inline std::int64_t hilbert_value(const ModulePresentation& M,
                                  const MonomialIdeal& I, int n) {
  if (n < 0) throw DomainError("negative sample index");
  if (!has_finite_colength(M, I))
    throw NotMPrimaryError("quotient M/I^{n+1}M has infinite length");
  MonomialIdeal In1 = power(I, n + 1);
  std::int64_t total = 0;
  for (const auto& J : M.components())
    total = checked_add(total, length_artinian(add(In1, J)));
  return total;
}

/// l((I^{n+1}M : m) / I^{n+1}M), the index of reducibility of I^{n+1}M.
inline std::int64_t irreducibility_value(const ModulePresentation& M,
                                         const MonomialIdeal& I, int n) {
  if (n < 0) throw DomainError("negative sample index");
  if (!has_finite_colength(M, I))
    throw NotMPrimaryError("quotient M/I^{n+1}M has infinite length");
  MonomialIdeal In1 = power(I, n + 1);
  std::int64_t total = 0;
  for (const auto& J : M.components())
    total = checked_add(total, socle_length_artinian(add(In1, J)));
  return total;
}

/// l((0) :_M m), the socle of M itself. Finite for every M here.
inline std::int64_t module_socle_length(const ModulePresentation& M) {
  std::int64_t total = 0;
  for (const auto& J : M.components())
    total = checked_add(total, socle_length_general(J));
  return total;
}

/// { r in P : r I^n M within I^{n+1} M }, intersected over components.
/// Coloning each I^{n+1} + J_i by I^n alone is enough: r J_i lies in J_i
/// for free.
inline MonomialIdeal colon_ring_ideal(const ModulePresentation& M,
                                      const MonomialIdeal& I, int n) {
  if (n < 0) throw DomainError("negative sample index");
  if (!is_m_primary(I))
    throw NotMPrimaryError("colon criterion expects an m-primary ideal");
  MonomialIdeal In = power(I, n);
  MonomialIdeal In1 = multiply(In, I);
  bool first = true;
  MonomialIdeal result = MonomialIdeal::unit(M.ambient());
  for (const auto& J : M.components()) {
    MonomialIdeal part = colon(add(In1, J), In);
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

/// l(M / Q M); errors when some component keeps infinite length.
inline std::int64_t length_mod(const ModulePresentation& M, const MonomialIdeal& Q) {
  if (!has_finite_colength(M, Q))
    throw DomainError("M/QM has infinite length");
  std::int64_t total = 0;
  for (const auto& J : M.components())
    total = checked_add(total, length_artinian(add(Q, J)));
  return total;
}

/// mu(M) = l(M / m M): one per cyclic component since every J_i lies in m.
inline std::int64_t minimal_generator_count(const ModulePresentation& M) {
  return M.component_count();
}

/// Componentwise check of the stabilized colon identity
///   I^{n+k} M :_M J  =  I^n (I^k M :_M J) + ((0) :_M J).
inline bool artin_rees_identity_holds(const ModulePresentation& M,
                                      const MonomialIdeal& I,
                                      const MonomialIdeal& J, int k, int n) {
  if (J.is_zero()) throw DomainError("colon by the zero ideal");
  if (k < 0 || n < 1) throw DomainError("need k >= 0 and n >= 1");
  MonomialIdeal Ik = power(I, k);
  MonomialIdeal In = power(I, n);
  MonomialIdeal Ink = multiply(In, Ik);
  for (const auto& Ji : M.components()) {
    MonomialIdeal lhs = colon(add(Ink, Ji), J);
    MonomialIdeal scaled = multiply(In, colon(add(Ik, Ji), J));
    std::vector<Monomial> rhs_gens = scaled.generators();
    MonomialIdeal ann = colon(Ji, J);
    rhs_gens.insert(rhs_gens.end(), ann.generators().begin(), ann.generators().end());
    rhs_gens.insert(rhs_gens.end(), Ji.generators().begin(), Ji.generators().end());
    MonomialIdeal rhs = MonomialIdeal::make(M.ambient(), std::move(rhs_gens));
    if (!equals(lhs, rhs)) return false;
  }
  return true;
}

/// Smallest k <= k_max making the identity hold for all 1 <= n <= n_max.
/// Exhausting the budget throws; that signals nothing about nonexistence.
inline int find_artin_rees_k(const ModulePresentation& M, const MonomialIdeal& I,
                             const MonomialIdeal& J, int n_max, int k_max) {
  if (!is_m_primary(I))
    throw NotMPrimaryError("Artin-Rees search expects an m-primary ideal");
  if (J.is_zero()) throw DomainError("colon by the zero ideal");
  for (int k = 0; k <= k_max; ++k) {
    bool ok = true;
    for (int n = 1; n <= n_max && ok; ++n)
      ok = artin_rees_identity_holds(M, I, J, k, n);
    if (ok) return k;
  }
  throw NotFoundWithinBoundError("no stabilization exponent k <= " +
                                 std::to_string(k_max) + " verified for n <= " +
                                 std::to_string(n_max));
}

}  // namespace irrmult
