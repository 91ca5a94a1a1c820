#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "irrmult/checked.hpp"
#include "irrmult/ideal.hpp"

namespace irrmult {

/// Box bounds for an Artinian quotient P/A: per variable, the least pure
/// power exponent found among the generators. Every standard monomial of A
/// lies strictly inside this box. Throws when the box is unbounded (A not
/// m-primary); the unit ideal yields the empty box (all bounds 0).
inline std::vector<std::int32_t> box_bounds(const MonomialIdeal& A) {
  std::vector<std::int32_t> bounds;
  bounds.reserve(static_cast<std::size_t>(A.arity()));
  for (int v = 0; v < A.arity(); ++v) {
    auto e = pure_power_exponent(A, v);
    if (!e)
      throw NotMPrimaryError("quotient by '" + A.ambient().name_of(v) +
                             "'-unbounded ideal has infinite length (no pure power of " +
                             A.ambient().name_of(v) + ")");
    bounds.push_back(*e);
  }
  return bounds;
}

/// The standard monomials of an m-primary ideal A: everything in the box
/// that is not in A. This is the plain full-box enumeration and doubles as
/// the acceptance oracle for the faster counting walks below.
struct StandardMonomialSet {
  MonomialIdeal ideal;
  std::vector<Monomial> monomials;
  std::vector<std::int32_t> box_bounds;
};

inline StandardMonomialSet standard_monomials(const MonomialIdeal& A) {
  std::vector<std::int32_t> bounds = box_bounds(A);
  std::vector<Monomial> found;
  std::vector<std::int32_t> cur(bounds.size(), 0);
  // Odometer over the full box; no pruning on purpose.
  bool empty = false;
  for (auto b : bounds)
    if (b == 0) empty = true;
  if (!empty) {
    while (true) {
      Monomial u{std::vector<std::int32_t>(cur)};
      if (!contains(A, u)) found.push_back(std::move(u));
      std::size_t i = 0;
      while (i < cur.size()) {
        if (++cur[i] < bounds[i]) break;
        cur[i] = 0;
        ++i;
      }
      if (i == cur.size()) break;
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return StandardMonomialSet{A, std::move(found), std::move(bounds)};
}

namespace detail {

// Depth-first walk of the box with monotonicity pruning: once a partial
// exponent vector lands in A, every coordinatewise-larger vector does too.
// Visits exactly the standard monomials at the leaves.
template <typename LeafFn>
inline void walk_standard_monomials(const MonomialIdeal& A,
                                    const std::vector<std::int32_t>& bounds,
                                    std::vector<std::int32_t>& cur,
                                    std::size_t k, LeafFn&& leaf) {
  if (k == bounds.size()) {
    leaf(cur);
    return;
  }
  for (std::int32_t e = 0; e < bounds[k]; ++e) {
    cur[k] = e;
    if (contains(A, Monomial{std::vector<std::int32_t>(cur)})) break;
    walk_standard_monomials(A, bounds, cur, k + 1, leaf);
  }
  cur[k] = 0;
}

}  // namespace detail

/// dim_K P/A for m-primary A, counted by a pruned staircase walk.
inline std::int64_t length_artinian(const MonomialIdeal& A) {
  if (A.is_unit()) return 0;
  std::vector<std::int32_t> bounds = box_bounds(A);
  std::int64_t count = 0;
  std::vector<std::int32_t> cur(bounds.size(), 0);
  detail::walk_standard_monomials(A, bounds, cur, 0,
                                  [&](const std::vector<std::int32_t>&) { ++count; });
  return count;
}

/// Socle length of P/A for m-primary A by corner enumeration: standard
/// monomials pushed into A by every variable.
inline std::int64_t socle_length_artinian(const MonomialIdeal& A) {
  if (A.is_unit()) return 0;
  std::vector<std::int32_t> bounds = box_bounds(A);
  int s = A.arity();
  std::int64_t corners = 0;
  std::vector<std::int32_t> cur(bounds.size(), 0);
  detail::walk_standard_monomials(
      A, bounds, cur, 0, [&](const std::vector<std::int32_t>& exps) {
        for (int v = 0; v < s; ++v) {
          std::vector<std::int32_t> up(exps);
          up[static_cast<std::size_t>(v)] += 1;
          if (!contains(A, Monomial{std::move(up)})) return;
        }
        ++corners;
      });
  return corners;
}

/// The same socle length through the colon route,
/// l(P/A) - l(P/(A : m)). Kept as an independent implementation and
/// cross-checked against the corner count by the test suite.
inline std::int64_t socle_length_artinian_colon(const MonomialIdeal& A) {
  if (A.is_unit()) return 0;
  MonomialIdeal C = colon(A, MonomialIdeal::maximal(A.ambient()));
  return checked_sub(length_artinian(A), length_artinian(C));
}

/// l((J : m)/J) for any proper monomial J, finite even when P/J is not
/// Artinian. Breadth-first search from the minimal generators of (J : m)
/// lying outside J, expanding by variable multiplication; the expansion
/// set is finite because every collected monomial is killed into J by
/// every variable.
inline std::int64_t socle_length_general(const MonomialIdeal& J) {
  if (J.is_unit()) throw DomainError("socle of the zero module");
  MonomialIdeal C = colon(J, MonomialIdeal::maximal(J.ambient()));
  int s = J.arity();
  std::set<std::vector<std::int32_t>> collected;
  std::vector<Monomial> frontier;
  for (const Monomial& g : C.generators())
    if (!contains(J, g) && collected.insert(g.exponents).second)
      frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& u : frontier) {
      for (int v = 0; v < s; ++v) {
        Monomial up = mul(u, Monomial::variable(s, v));
        if (!contains(J, up) && collected.insert(up.exponents).second)
          next.push_back(std::move(up));
      }
    }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(collected.size());
}

namespace detail {

// Minimum number of variables hitting every support set, by branch and
// bound on an uncovered support. Exact; the inputs are tiny.
inline int min_cover(const std::vector<std::vector<int>>& supports,
                     std::vector<bool>& chosen, int chosen_count, int best) {
  if (chosen_count >= best) return best;
  const std::vector<int>* open = nullptr;
  for (const auto& sup : supports) {
    bool covered = false;
    for (int v : sup)
      if (chosen[static_cast<std::size_t>(v)]) {
        covered = true;
        break;
      }
    if (!covered) {
      open = &sup;
      break;
    }
  }
  if (!open) return chosen_count;
  for (int v : *open) {
    chosen[static_cast<std::size_t>(v)] = true;
    best = min_cover(supports, chosen, chosen_count + 1, best);
    chosen[static_cast<std::size_t>(v)] = false;
  }
  return best;
}

}  // namespace detail

/// dim P/J for proper monomial J: arity minus the minimum vertex cover of
/// the supports of the radical's generators. dim P/(0) = s.
inline int krull_dimension(const MonomialIdeal& J) {
  if (J.is_unit()) throw DomainError("dimension of the zero module");
  MonomialIdeal R = radical(J);
  std::vector<std::vector<int>> supports;
  supports.reserve(R.generators().size());
  for (const Monomial& g : R.generators()) {
    std::vector<int> sup;
    for (int v = 0; v < J.arity(); ++v)
      if (g.exponents[static_cast<std::size_t>(v)] > 0) sup.push_back(v);
    supports.push_back(std::move(sup));
  }
  std::vector<bool> chosen(static_cast<std::size_t>(J.arity()), false);
  int cover = detail::min_cover(supports, chosen, 0, J.arity());
  return J.arity() - cover;
}

}  // namespace irrmult
