#pragma once

// Exact integer helpers shared by the group, formula and search layers.

#include <cstdint>
#include <utility>
#include <vector>

namespace sumlab {

/// Floor of a/b for b > 0, correct for negative a.
constexpr long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Ceiling of a/b for b > 0.
constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

bool is_prime(long n);

/// Least prime dividing n (n >= 2).
long smallest_prime_factor(long n);

/// Prime factorization as ascending (prime, exponent) pairs.
std::vector<std::pair<long, int>> factorize(long n);

/// All positive divisors of n in ascending order (n >= 1).
std::vector<long> divisors(long n);

/// Largest r with r*r <= x (x >= 0).
long isqrt(long x);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

bool is_power_of_two(long x);

}  // namespace sumlab
