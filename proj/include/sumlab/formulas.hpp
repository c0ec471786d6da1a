#pragma once

// Closed-form and conjectured values for minimum sumset sizes and critical
// numbers, plus the explicit coset-progression constructions behind them.
// All arithmetic is exact.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumlab/group.hpp"

namespace sumlab {

enum class ValueStatus { exact, lower_bound, upper_bound, undefined, unknown };

std::string_view to_string(ValueStatus status);

/// A possibly partial answer. value is present iff status is exact or a bound.
struct KnownValue {
  ValueStatus status = ValueStatus::unknown;
  std::optional<long> value;
  std::string source;

  static KnownValue exact(long v, std::string src) { return {ValueStatus::exact, v, std::move(src)}; }
  static KnownValue lower(long v, std::string src) { return {ValueStatus::lower_bound, v, std::move(src)}; }
  static KnownValue upper(long v, std::string src) { return {ValueStatus::upper_bound, v, std::move(src)}; }
  static KnownValue undefined(std::string src) { return {ValueStatus::undefined, std::nullopt, std::move(src)}; }
  static KnownValue unknown(std::string src = {}) { return {ValueStatus::unknown, std::nullopt, std::move(src)}; }

  bool operator==(const KnownValue&) const = default;
};

/// m = c*d + k with 1 <= k <= d.
struct CosetProgressionParams {
  int n = 0;
  int d = 0;
  int c = 0;
  int k = 0;

  static CosetProgressionParams of(int n, int m, int d);
};

/// Parameters of the two-partial-coset construction. m = k1 + (c-1)d + k2.
struct BParams {
  int k1 = 0;
  int k2 = 0;
  int j0 = 0;
  int g = 0;
};

struct PGroupParams {
  int p = 0;
  int h = 0;
  int m = 0;
  int delta = 0;
  std::optional<int> k;  // absent when 1 + delta > hm - h + 1
  std::optional<int> q;
  bool equal_rho = false;
};

// --- h-fold sumsets --------------------------------------------------------

/// (h*ceil(m/d) - h + 1) * d
long f_d(long d, long m, long h);
/// min over divisors d of n of f_d(m, h).
long u(long n, long m, long h);
/// Least divisor of n that is >= m.
long rho_span(long n, long m);
ElementSet construct_A(int n, int m, int d);

// --- restricted sumsets ----------------------------------------------------

ElementSet construct_B(int n, int m, int d, const BParams& params);
/// Throws std::invalid_argument naming the violated constraint, if any.
void validate_B(int n, int m, int d, const BParams& params);
/// min over d | n of |h^ A_d(n,m)|, computed from the sets themselves.
long u_hat(int n, int m, int h);
/// min over d | n and every valid (k1, j0, g) of |h^ B_d(n,m)|.
KnownValue w_hat(int n, int m, int h);
long rho_hat_conjectured(int n, int m, int h);
long rho_hat2_conjectured(long n, long m);

struct RhoHat2Bounds {
  long upper = 0;
  KnownValue lower;
  long lev_lower = 0;
};
RhoHat2Bounds rho_hat2_bounds(const GroupSpec& group, long m);
long rho_hat_prime(long p, long m, long h);

// --- signed sumsets --------------------------------------------------------

/// Divisors d of n factoring as prod d_i with d_i | n_i and d*n_r >= d_r*m.
std::vector<long> D_Gm(const GroupSpec& group, long m);
long u_pm(const GroupSpec& group, long m, long h);
long rho_pm_conjectured(const GroupSpec& group, long m, long h);
/// Throws std::invalid_argument unless p is an odd prime and h, m >= 2.
PGroupParams pgroup_params(int p, int h, int m);

// --- restricted sums of any number of terms --------------------------------

long F_d(long d, long m);
long u_sigma(long n, long m);
ElementSet construct_C(int n, int m, int d);

struct BalandraudValues {
  long with_empty = 0;
  long without_empty = 0;
};
/// Requires m <= (p-1)/2.
BalandraudValues balandraud(long p, long m);

// --- critical numbers ------------------------------------------------------

/// max over d | n of (floor((d - 1 - gcd(d,g))/h) + 1) * n/d
long v(long n, long h, long g);
long chi(const GroupSpec& group, long h);
/// n/p + 1
long chi_span(const GroupSpec& group);
KnownValue chi_hat_known(const GroupSpec& group, long h);
/// The value from the three-case display for chi^(Z_n, 3), ignoring its n >= 16 side condition.
long chi_hat3_display(long n);
/// Requires n >= 10.
long chi_hat_sigma(const GroupSpec& group);

/// Maximum size of a sum-free subset of Z_n by the piecewise classical formula.
long diananda_yap(long n);
KnownValue sumfree_kl_lower(long n, long k, long l);

}  // namespace sumlab
