#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrmult/fitter.hpp"
#include "irrmult/rng.hpp"

namespace irrmult {

/// Everything the multiplicity comparison needs in one record: the two
/// fitted leading coefficients, the socle of M, the dimension-dependent
/// bound, and the colon-criterion verdicts.
struct MultiplicityReport {
  int t = 0;
  std::int64_t e0 = 0;
  std::int64_t f0 = 0;
  std::int64_t socle0 = 0;
  std::int64_t bound = 0;  // e0 when t != 1, e0 + socle0 when t == 1
  bool inequality_holds = false;
  /// Least n with m = (I^{n+1}M : I^n M) stably through n_max; absent when
  /// the criterion fails at the horizon. A hit that dies out again before
  /// n_max (every zero-dimensional module produces one) does not count:
  /// the equality statement needs the criterion for all large n.
  std::optional<int> equality_criterion_n;
  bool equality_holds = false;  // f0 == bound
  int n_max_used = 0;
  int n0_hilbert = 0;
  int n0_irred = 0;
  BinomialPolynomial hilbert_poly;
  BinomialPolynomial irred_poly;
};

inline MultiplicityReport multiplicity_report(GrowthSampler& sampler,
                                              int window = 4) {
  const ModulePresentation& M = sampler.module();
  MultiplicityReport r;
  r.t = M.dimension();
  r.n_max_used = sampler.n_max();
  r.hilbert_poly = hilbert_coefficients(sampler, window);
  r.irred_poly = irreducibility_coefficients(sampler, window);
  r.e0 = r.hilbert_poly.leading_coefficient();
  r.f0 = r.irred_poly.leading_coefficient();
  r.n0_hilbert = r.hilbert_poly.stabilization_index;
  r.n0_irred = r.irred_poly.stabilization_index;
  r.socle0 = module_socle_length(M);
  r.bound = r.t == 1 ? checked_add(r.e0, r.socle0) : r.e0;
  r.inequality_holds = r.f0 <= r.bound;
  r.equality_criterion_n = sampler.stable_criterion_index();
  r.equality_holds = r.f0 == r.bound;
  return r;
}

inline MultiplicityReport multiplicity_report(const ModulePresentation& M,
                                              const MonomialIdeal& I, int n_max,
                                              int window = 4) {
  if (!is_m_primary(I))
    throw NotMPrimaryError("multiplicity report expects an m-primary ideal");
  GrowthSampler sampler(M, I, n_max);
  return multiplicity_report(sampler, window);
}

/// The full verdict: the inequality always, and exact equality whenever the
/// colon criterion holds stably in range. Also insists both multiplicities
/// are positive, which the fitted degrees guarantee when everything is
/// consistent.
inline bool verify_theorem_report(const MultiplicityReport& r) {
  if (r.e0 < 1 || r.f0 < 1) return false;
  if (!r.inequality_holds) return false;
  if (r.equality_criterion_n && !r.equality_holds) return false;
  return true;
}

inline bool verify_theorem(const ModulePresentation& M, const MonomialIdeal& I,
                           int n_max, int window = 4) {
  return verify_theorem_report(multiplicity_report(M, I, n_max, window));
}

/// With I = m the criterion holds at every level when dim M >= 1, and the
/// bound is attained exactly. Checks both halves. (For an Artinian module
/// the filtration dies, the criterion fails at the horizon, and only the
/// inequality remains; this returns false there by design.)
inline bool verify_madic_corollary(const ModulePresentation& M, int n_max,
                                   int window = 4) {
  GrowthSampler sampler(M, MonomialIdeal::maximal(M.ambient()), n_max);
  MultiplicityReport r = multiplicity_report(sampler, window);
  if (!r.equality_holds) return false;
  for (int n = 1; n <= n_max; ++n)
    if (!sampler.criterion_holds(n)) return false;
  return true;
}

/// Cohen-Macaulay / Ulrich screening against one candidate parameter ideal.
/// Certification is one-directional: f0 == colength certifies Ulrich when
/// t != 1, but a mismatch only means "not certified by this Q" because a
/// monomial witness need not exist.
struct UlrichReport {
  int t = 0;
  MonomialIdeal Q;
  bool is_parameter_ideal = false;
  std::int64_t fQ0 = 0;
  std::int64_t colength = 0;
  std::int64_t eQ0 = 0;
  bool is_cohen_macaulay = false;          // eQ0 == colength
  std::optional<bool> certified_ulrich;    // present only when t != 1
  std::string note;
};

inline UlrichReport ulrich_check(const ModulePresentation& M,
                                 const MonomialIdeal& Q, int n_max,
                                 int window = 4) {
  UlrichReport r{M.dimension(), Q};
  if (!Q.is_proper())
    throw NotParameterIdealError("the unit ideal is not a parameter ideal");
  if (static_cast<std::int64_t>(Q.generators().size()) !=
      static_cast<std::int64_t>(r.t))
    throw NotParameterIdealError(
        "parameter ideal needs exactly dim M = " + std::to_string(r.t) +
        " generators, got " + std::to_string(Q.generators().size()));
  if (!has_finite_colength(M, Q))
    throw NotParameterIdealError("M/QM has infinite length");
  r.is_parameter_ideal = true;
  r.colength = length_mod(M, Q);
  GrowthSampler sampler(M, Q, n_max);
  r.eQ0 = hilbert_coefficients(sampler, window).leading_coefficient();
  r.fQ0 = irreducibility_coefficients(sampler, window).leading_coefficient();
  r.is_cohen_macaulay = r.eQ0 == r.colength;
  if (r.t == 1) {
    r.note = "dimension-one module: the irreducible-multiplicity criterion "
             "does not certify Ulrich here";
  } else {
    r.certified_ulrich = r.fQ0 == r.colength;
    if (!*r.certified_ulrich) r.note = "not certified by this Q";
  }
  return r;
}

/// Per-level inequality ir(I^{n+1}M) <= l(I^n M / I^{n+1} M) + l((0) : m),
/// valid from the Artin-Rees stabilization exponent onward.
inline bool socle_chain_bound_holds(GrowthSampler& sampler, int n_lo, int n_hi,
                                    int k_hat) {
  std::int64_t socle0 = module_socle_length(sampler.module());
  int from = n_lo > k_hat ? n_lo : k_hat;
  if (from < 1) from = 1;
  for (int n = from; n <= n_hi; ++n) {
    std::int64_t delta = checked_sub(sampler.hilbert(n), sampler.hilbert(n - 1));
    if (sampler.irreducibility(n) > checked_add(delta, socle0)) return false;
  }
  return true;
}

inline bool socle_chain_bound_holds(const ModulePresentation& M,
                                    const MonomialIdeal& I, int n_lo, int n_hi,
                                    int ar_n_max = 15, int ar_k_max = 12) {
  // levels must cover both the table range and the Artin-Rees search
  int levels = ar_n_max + ar_k_max - 1;
  if (n_hi > levels) levels = n_hi;
  GrowthSampler sampler(M, I, levels);
  int k_hat = sampler.find_artin_rees_k_madic(ar_n_max, ar_k_max);
  return socle_chain_bound_holds(sampler, n_lo, n_hi, k_hat);
}

/// -------- built-in reproducers for the two worked families --------

struct ExampleCheck {
  bool ok = true;
  std::vector<std::string> lines;  // one per assertion, "ok ..." / "FAIL ..."

  void expect(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    ok = ok && cond;
  }
};

/// The staircase family: P = K[x_1..x_d, y_1..y_l] modulo
/// J = (x_i y_j) + (y_i y_j), filtered by the maximal ideal. Known closed
/// forms: l(M/m^{n+1}M) = C(n+d, d) + l and ir(m^{n+1}M) = C(n+d-1, d-1) + l
/// for every n >= 1 (at n = 0 the quotient is the residue field, so both
/// values are 1), hence e0 = 1 and f0 = 1 for d >= 2, f0 = 1 + l for d = 1.
inline ModulePresentation staircase_module(int d, int l) {
  if (d < 1 || l < 1) throw DomainError("staircase family needs d >= 1, l >= 1");
  int s = d + l;
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= l; ++j) names.push_back("y" + std::to_string(j));
  AmbientRing P = AmbientRing::make(std::move(names));
  std::vector<Monomial> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < l; ++j)
      gens.push_back(mul(Monomial::variable(s, i), Monomial::variable(s, d + j)));
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j)
      gens.push_back(
          mul(Monomial::variable(s, d + i), Monomial::variable(s, d + j)));
  MonomialIdeal J = MonomialIdeal::make(P, std::move(gens));
  return ModulePresentation::make(P, {J});
}

inline ExampleCheck verify_staircase_family(int d, int l, int n_max = 10,
                                            int window = 4) {
  ExampleCheck chk;
  ModulePresentation M = staircase_module(d, l);
  MonomialIdeal m = MonomialIdeal::maximal(M.ambient());
  chk.expect(M.dimension() == d,
             "dim M = " + std::to_string(d) + " (got " +
                 std::to_string(M.dimension()) + ")");
  int sample_to = n_max > d + window + 2 ? n_max : d + window + 2;
  GrowthSampler sampler(M, m, sample_to);
  chk.expect(sampler.hilbert(0) == 1, "H(0) = 1 (quotient by m is the residue field)");
  chk.expect(sampler.irreducibility(0) == 1, "IR(0) = 1");
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t h_want = checked_add(binomial(n + d, d), l);
    std::int64_t ir_want = checked_add(binomial(n + d - 1, d - 1), l);
    chk.expect(sampler.hilbert(n) == h_want,
               "H(" + std::to_string(n) + ") = C(n+d,d)+l = " +
                   std::to_string(h_want) + " (got " +
                   std::to_string(sampler.hilbert(n)) + ")");
    chk.expect(sampler.irreducibility(n) == ir_want,
               "IR(" + std::to_string(n) + ") = C(n+d-1,d-1)+l = " +
                   std::to_string(ir_want) + " (got " +
                   std::to_string(sampler.irreducibility(n)) + ")");
  }
  MultiplicityReport r = multiplicity_report(sampler, window);
  chk.expect(r.e0 == 1, "e0 = 1 (got " + std::to_string(r.e0) + ")");
  std::int64_t f_want = d >= 2 ? 1 : 1 + static_cast<std::int64_t>(l);
  chk.expect(r.f0 == f_want, "f0 = " + std::to_string(f_want) + " (got " +
                                 std::to_string(r.f0) + ")");
  chk.expect(verify_theorem_report(r), "multiplicity comparison verdict");
  return chk;
}

/// The free-plus-residue-field module M = P/(0) + P/(x) over K[x], filtered
/// by (x): l(M/xM) = 2, ir(x^{n+1}M) = 2 for every n, f0 = 2, e0 = 1, and
/// the Ulrich certificate is withheld because dim M = 1.
inline ExampleCheck verify_direct_sum_example(int n_max = 20, int window = 4) {
  ExampleCheck chk;
  AmbientRing P = AmbientRing::with_arity(1);
  MonomialIdeal x = MonomialIdeal::make(P, {Monomial::variable(1, 0)});
  ModulePresentation M = ModulePresentation::make(P, {MonomialIdeal::zero(P), x});
  chk.expect(M.dimension() == 1, "dim M = 1");
  chk.expect(length_mod(M, x) == 2, "l(M/xM) = 2");
  GrowthSampler sampler(M, x, n_max > window + 3 ? n_max : window + 3);
  for (int n = 0; n <= n_max; ++n)
    chk.expect(sampler.irreducibility(n) == 2,
               "IR(" + std::to_string(n) + ") = 2 (got " +
                   std::to_string(sampler.irreducibility(n)) + ")");
  for (int n = 0; n <= n_max; ++n)
    chk.expect(sampler.hilbert(n) == n + 2,
               "H(" + std::to_string(n) + ") = n + 2");
  MultiplicityReport r = multiplicity_report(sampler, window);
  chk.expect(r.e0 == 1, "e0 = 1");
  chk.expect(r.f0 == 2, "f0 = 2");
  chk.expect(r.socle0 == 1, "l((0) : m) = 1");
  chk.expect(verify_theorem_report(r), "multiplicity comparison verdict");
  UlrichReport u = ulrich_check(M, x, n_max);
  chk.expect(u.fQ0 == 2 && u.colength == 2,
             "f0 = l(M/QM) = 2 for Q = (x)");
  chk.expect(!u.certified_ulrich.has_value(),
             "Ulrich certificate withheld in dimension one");
  return chk;
}

/// -------- deterministic instance generation for the property suites ----

struct FuzzParams {
  int s_max = 3;
  int comp_max = 2;
  int exp_max = 4;
};

struct FuzzInstance {
  ModulePresentation module;
  MonomialIdeal ideal;
  std::uint64_t seed = 0;
};

namespace detail {

inline Monomial random_nonunit_monomial(Rng& rng, int s, int exp_max) {
  while (true) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(s), 0);
    for (int v = 0; v < s; ++v) e[static_cast<std::size_t>(v)] =
        static_cast<std::int32_t>(rng.bounded(0, exp_max));
    Monomial m{std::move(e)};
    if (!m.is_one()) return m;
  }
}

}  // namespace detail

/// Deterministic pseudo-random instance: a module with 1..comp_max cyclic
/// components over 1..s_max variables (components possibly zero ideals),
/// and an m-primary I built from one pure power per variable plus a few
/// extra monomials. The same seed always yields the same instance.
inline FuzzInstance fuzz_instance(std::uint64_t seed, const FuzzParams& params) {
  Rng rng(seed);
  int s = rng.bounded(1, params.s_max);
  AmbientRing P = AmbientRing::with_arity(s);
  int ncomp = rng.bounded(1, params.comp_max);
  std::vector<MonomialIdeal> comps;
  for (int c = 0; c < ncomp; ++c) {
    int gens_count = rng.bounded(0, 3);
    std::vector<Monomial> gens;
    for (int g = 0; g < gens_count; ++g)
      gens.push_back(detail::random_nonunit_monomial(rng, s, params.exp_max));
    comps.push_back(MonomialIdeal::make(P, std::move(gens)));
  }
  std::vector<Monomial> igens;
  for (int v = 0; v < s; ++v)
    igens.push_back(Monomial::variable(
        s, v, static_cast<std::int32_t>(rng.bounded(1, params.exp_max))));
  int extra = rng.bounded(0, 2);
  for (int g = 0; g < extra; ++g)
    igens.push_back(detail::random_nonunit_monomial(rng, s, params.exp_max));
  MonomialIdeal I = MonomialIdeal::make(P, std::move(igens));
  return FuzzInstance{ModulePresentation::make(P, std::move(comps)), I, seed};
}

/// First instance derived from the seed whose module has dimension >= 1,
/// for the maximal-ideal suite: its equality claim is provable exactly in
/// positive dimension (an Artinian module kills the filtration and with it
/// the colon criterion).
inline FuzzInstance fuzz_instance_positive_dim(std::uint64_t seed,
                                               const FuzzParams& params) {
  Rng mixer(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FuzzInstance inst = fuzz_instance(mixer.next(), params);
    if (inst.module.dimension() >= 1) {
      inst.seed = seed;
      return inst;
    }
  }
  throw Error("internal: no positive-dimension instance near seed " +
              std::to_string(seed));
}

/// Greedy minimization of a failing instance: drop components, drop
/// generators, decrement exponents; keep a candidate whenever it stays
/// valid and the predicate still reports failure.
template <typename FailsFn>
inline FuzzInstance shrink_instance(FuzzInstance failing, FailsFn&& still_fails) {
  auto valid = [](const ModulePresentation& M, const MonomialIdeal& I) {
    if (!is_m_primary(I)) return false;
    for (const auto& J : M.components())
      if (J.is_unit()) return false;
    return true;
  };
  bool improved = true;
  while (improved) {
    improved = false;
    const AmbientRing& P = failing.module.ambient();
    // drop a component
    if (failing.module.component_count() > 1) {
      for (int c = 0; c < failing.module.component_count(); ++c) {
        std::vector<MonomialIdeal> comps = failing.module.components();
        comps.erase(comps.begin() + c);
        ModulePresentation M = ModulePresentation::make(P, comps);
        if (valid(M, failing.ideal) && still_fails(M, failing.ideal)) {
          failing.module = M;
          improved = true;
          break;
        }
      }
      if (improved) continue;
    }
    // drop one generator somewhere
    for (int c = 0; c < failing.module.component_count() && !improved; ++c) {
      const auto& gens = failing.module.components()[static_cast<std::size_t>(c)].generators();
      for (std::size_t g = 0; g < gens.size() && !improved; ++g) {
        std::vector<Monomial> slim(gens);
        slim.erase(slim.begin() + static_cast<std::ptrdiff_t>(g));
        std::vector<MonomialIdeal> comps = failing.module.components();
        comps[static_cast<std::size_t>(c)] = MonomialIdeal::make(P, slim);
        ModulePresentation M = ModulePresentation::make(P, comps);
        if (valid(M, failing.ideal) && still_fails(M, failing.ideal)) {
          failing.module = M;
          improved = true;
        }
      }
    }
    if (improved) continue;
    for (std::size_t g = 0; g < failing.ideal.generators().size() && !improved; ++g) {
      std::vector<Monomial> slim(failing.ideal.generators());
      slim.erase(slim.begin() + static_cast<std::ptrdiff_t>(g));
      MonomialIdeal I = MonomialIdeal::make(P, slim);
      if (valid(failing.module, I) && still_fails(failing.module, I)) {
        failing.ideal = I;
        improved = true;
      }
    }
    if (improved) continue;
    // decrement an exponent somewhere
    auto try_decrement = [&](const MonomialIdeal& ideal,
                             auto&& rebuild) -> bool {
      const auto& gens = ideal.generators();
      for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t v = 0; v < gens[g].exponents.size(); ++v) {
          if (gens[g].exponents[v] == 0) continue;
          std::vector<Monomial> tweaked(gens);
          tweaked[g].exponents[v] -= 1;
          if (tweaked[g].is_one()) continue;
          if (rebuild(MonomialIdeal::make(P, tweaked))) return true;
        }
      }
      return false;
    };
    for (int c = 0; c < failing.module.component_count() && !improved; ++c) {
      improved = try_decrement(
          failing.module.components()[static_cast<std::size_t>(c)],
          [&](MonomialIdeal J) {
            std::vector<MonomialIdeal> comps = failing.module.components();
            comps[static_cast<std::size_t>(c)] = std::move(J);
            ModulePresentation M = ModulePresentation::make(P, comps);
            if (!valid(M, failing.ideal) || !still_fails(M, failing.ideal))
              return false;
            failing.module = M;
            return true;
          });
    }
    if (improved) continue;
    improved = try_decrement(failing.ideal, [&](MonomialIdeal I) {
      if (!valid(failing.module, I) || !still_fails(failing.module, I))
        return false;
      failing.ideal = I;
      return true;
    });
  }
  return failing;
}

}  // namespace irrmult
