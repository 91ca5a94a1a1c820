#pragma once

#include <cstdint>
#include <string>

#include "irrmult/errors.hpp"

namespace irrmult {

// All lengths, coefficients and polynomial values are exact int64 with
// overflow detection. Silent wraparound is a correctness bug here, so every
// arithmetic step in a value-producing path goes through these helpers.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition: " + std::to_string(a) +
                        " + " + std::to_string(b));
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction: " +
                        std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication: " +
                        std::to_string(a) + " * " + std::to_string(b));
  return r;
}

/// Exact binomial coefficient C(n, k); zero when k < 0 or n < k.
/// C(n, k) for n < 0 is not needed anywhere and is rejected.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

/// Exponent arithmetic. Exponents are small, but products of high ideal
/// powers add them up; keep the same no-wraparound guarantee.
inline std::int32_t checked_exp_add(std::int32_t a, std::int32_t b) {
  std::int64_t r = std::int64_t{a} + std::int64_t{b};
  if (r > 1'000'000'000)
    throw OverflowError("monomial exponent exceeds supported range");
  return static_cast<std::int32_t>(r);
}

}  // namespace irrmult
