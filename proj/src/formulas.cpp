#include "sumlab/formulas.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sumlab/detail/kernels.hpp"
#include "sumlab/detail/mask_group.hpp"
#include "sumlab/numeric.hpp"
#include "sumlab/sumset.hpp"

namespace sumlab {

namespace {

constexpr long kInfinity = std::numeric_limits<long>::max();

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Restricted sumset sizes of many sets in the same cyclic group.
class RestrictedSizer {
 public:
  explicit RestrictedSizer(int n) : group_(GroupSpec::cyclic(n)) {
    if (n <= detail::kMaskOrder) masks_.emplace(group_);
  }

  long size(const ElementSet& set, int h) const {
    auto elems = set.indices();
    if (masks_) {
      return std::popcount(detail::restricted_sumset(detail::MaskOps{*masks_}, elems, h));
    }
    return restricted_sumset(group_, set, h).size();
  }

 private:
  GroupSpec group_;
  std::optional<detail::MaskGroup> masks_;
};

}  // namespace

std::string_view to_string(ValueStatus status) {
  switch (status) {
    case ValueStatus::exact: return "exact";
    case ValueStatus::lower_bound: return "lower_bound";
    case ValueStatus::upper_bound: return "upper_bound";
    case ValueStatus::undefined: return "undefined";
    case ValueStatus::unknown: return "unknown";
  }
  return "?";
}

CosetProgressionParams CosetProgressionParams::of(int n, int m, int d) {
  require(d >= 1 && n % d == 0, "invalid divisor: " + std::to_string(d) + " does not divide " + std::to_string(n));
  require(m >= 1, "m must be positive");
  CosetProgressionParams p;
  p.n = n;
  p.d = d;
  p.c = (m - 1) / d;
  p.k = m - p.c * d;
  return p;
}

// ---------------------------------------------------------------------------
// h-fold sumsets

long f_d(long d, long m, long h) { return (h * ceil_div(m, d) - h + 1) * d; }

long u(long n, long m, long h) {
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  long best = kInfinity;
  for (long d : divisors(n)) best = std::min(best, f_d(d, m, h));
  return best;
}

long rho_span(long n, long m) {
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  for (long d : divisors(n)) {
    if (d >= m) return d;
  }
  return n;
}

ElementSet construct_A(int n, int m, int d) {
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  auto p = CosetProgressionParams::of(n, m, d);
  const int step = n / d;
  ElementSet out(n);
  for (int i = 0; i < p.c; ++i) {
    for (int j = 0; j < d; ++j) out.insert((i + j * step) % n);
  }
  for (int j = 0; j < p.k; ++j) out.insert((p.c + j * step) % n);
  return out;
}

// ---------------------------------------------------------------------------
// restricted sumsets

void validate_B(int n, int m, int d, const BParams& b) {
  require(d >= 1 && n % d == 0, "invalid B-parameters: d does not divide n");
  require(b.k1 >= 1 && b.k2 >= 1, "invalid B-parameters: k1, k2 must be positive");
  require(b.k1 < d && b.k2 < d, "invalid B-parameters: need k1 < d and k2 < d");
  require(b.k1 + b.k2 > d, "invalid B-parameters: need k1 + k2 > d");
  const int rest = m - b.k1 - b.k2;
  require(rest >= 0 && rest % d == 0, "invalid B-parameters: m != k1 + (c-1)d + k2");
  require(b.j0 >= 0 && b.j0 < d, "invalid B-parameters: need 0 <= j0 < d");
  require(b.g >= 0 && b.g < n, "invalid B-parameters: g outside Z_n");
  const int c = rest / d + 1;
  const int cosets = n / d;
  std::vector<bool> used(static_cast<std::size_t>(cosets), false);
  for (int i = 0; i <= c; ++i) {
    const int coset = static_cast<int>((static_cast<long>(i) * b.g) % cosets);
    require(!used[static_cast<std::size_t>(coset)], "invalid B-parameters: cosets i*g + H not distinct");
    used[static_cast<std::size_t>(coset)] = true;
  }
}

ElementSet construct_B(int n, int m, int d, const BParams& b) {
  validate_B(n, m, d, b);
  const int c = (m - b.k1 - b.k2) / d + 1;
  const int step = n / d;
  ElementSet out(n);
  for (int j = 0; j < b.k1; ++j) out.insert(j * step);
  for (int i = 1; i <= c - 1; ++i) {
    for (int j = 0; j < d; ++j) out.insert(static_cast<int>((static_cast<long>(i) * b.g + j * step) % n));
  }
  for (int j = 0; j < b.k2; ++j) {
    out.insert(static_cast<int>((static_cast<long>(c) * b.g + static_cast<long>(b.j0 + j) * step) % n));
  }
  return out;
}

long u_hat(int n, int m, int h) {
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  require(h >= 0 && h <= m, "invalid fold count: need 0 <= h <= m");
  RestrictedSizer sizer(n);
  long best = kInfinity;
  for (long d : divisors(n)) {
    best = std::min(best, sizer.size(construct_A(n, m, static_cast<int>(d)), h));
  }
  return best;
}

KnownValue w_hat(int n, int m, int h) {
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  require(h >= 0 && h <= m, "invalid fold count: need 0 <= h <= m");
  RestrictedSizer sizer(n);
  long best = kInfinity;
  for (long dl : divisors(n)) {
    const int d = static_cast<int>(dl);
    const int cosets = n / d;
    for (int k1 = 1; k1 < d; ++k1) {
      // k2 is forced: k2 = m - k1 (mod d) with d - k1 < k2 < d.
      int k2 = ((m - k1) % d + d) % d;
      if (k2 <= d - k1 || k2 >= d) continue;
      const int rest = m - k1 - k2;
      if (rest < 0) continue;
      const int c = rest / d + 1;
      if (c + 1 > cosets) continue;
      // Shifting g by a multiple of n/d only moves j0, so g < n/d suffices.
      for (int g = 0; g < cosets; ++g) {
        bool distinct = true;
        std::vector<bool> used(static_cast<std::size_t>(cosets), false);
        for (int i = 0; i <= c && distinct; ++i) {
          const auto coset = static_cast<std::size_t>((i * g) % cosets);
          distinct = !used[coset];
          used[coset] = true;
        }
        if (!distinct) continue;
        for (int j0 = 0; j0 < d; ++j0) {
          auto set = construct_B(n, m, d, BParams{k1, k2, j0, g});
          best = std::min(best, sizer.size(set, h));
        }
      }
    }
  }
  if (best == kInfinity) return KnownValue::unknown("w_hat: no divisor admits B-parameters");
  return KnownValue::exact(best, "w_hat");
}

long rho_hat_conjectured(int n, int m, int h) {
  long best = u_hat(n, m, h);
  auto w = w_hat(n, m, h);
  if (w.value) best = std::min(best, *w.value);
  return best;
}

long rho_hat2_conjectured(long n, long m) {
  require(m >= 4 && m <= n, "rho_hat2_conjectured: need 4 <= m <= n");
  const long rho = u(n, m, 2);
  const bool low = (n % 2 == 0 && m % 2 == 0) ||
                   (n % (2 * m - 2) == 0 && !is_power_of_two(m - 1));
  return std::min(rho, low ? 2 * m - 4 : 2 * m - 3);
}

RhoHat2Bounds rho_hat2_bounds(const GroupSpec& group, long m) {
  const long n = group.order();
  require(m >= 2 && m <= n, "rho_hat2_bounds: need 2 <= m <= n");
  const long rho = u(n, m, 2);
  RhoHat2Bounds out;
  out.upper = std::min(rho, 2 * m - 2);
  if (group.is_elementary_abelian() && group.exponent() % 2 == 1) {
    out.lower = KnownValue::lower(std::min(rho, 2 * m - 3), "elementary abelian odd-p lower bound");
  } else {
    out.lower = KnownValue::unknown("lower bound proven only for elementary abelian odd-p groups");
  }
  out.lev_lower = std::min(rho, 2 * m - 3 - involution_count(group));
  return out;
}

long rho_hat_prime(long p, long m, long h) {
  require(is_prime(p), "rho_hat_prime: modulus must be prime");
  require(h >= 0 && h <= m && m <= p, "rho_hat_prime: need 0 <= h <= m <= p");
  return std::min(p, h * m - h * h + 1);
}

// ---------------------------------------------------------------------------
// signed sumsets

std::vector<long> D_Gm(const GroupSpec& group, long m) {
  const long n = group.order();
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  const auto& factors = group.invariant_factors();
  std::vector<std::vector<long>> choices;
  for (int f : factors) choices.push_back(divisors(f));
  const long nr = factors.back();
  std::vector<long> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    long d = 1;
    for (std::size_t i = 0; i < choices.size(); ++i) d *= choices[i][pick[i]];
    const long dr = choices.back()[pick.back()];
    if (d * nr >= dr * m) out.push_back(d);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long u_pm(const GroupSpec& group, long m, long h) {
  long best = kInfinity;
  for (long d : D_Gm(group, m)) best = std::min(best, f_d(d, m, h));
  return best;
}

long rho_pm_conjectured(const GroupSpec& group, long m, long h) {
  require(h >= 2, "rho_pm_conjectured: need h >= 2");
  const long base = u_pm(group, m, h);
  if (h >= 3) return base;
  for (long d : divisors(group.order())) {
    if (d % 2 == 1 && d > 2 * m) return std::min(base, d - 1);
  }
  return base;
}

PGroupParams pgroup_params(int p, int h, int m) {
  require(p >= 3 && is_prime(p), "pgroup_params: p must be an odd prime");
  require(h >= 2 && m >= 2, "pgroup_params: need h, m >= 2");
  PGroupParams out;
  out.p = p;
  out.h = h;
  out.m = m;
  out.delta = (p - 1) % h == 0 ? 0 : 1;
  const long limit = static_cast<long>(h) * m - h + 1;
  if (1 + out.delta <= limit) {
    int k = 0;
    long pk = 1;
    while (pk * p + out.delta <= limit) {
      pk *= p;
      ++k;
    }
    out.k = k;
    int q = 0;
    while ((static_cast<long>(h) * (q + 1) + 1) * pk + out.delta <= limit) ++q;
    out.q = q;
    out.equal_rho = p <= h || m <= (static_cast<long>(q) + 1) * pk;
  } else {
    out.equal_rho = p <= h;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sigma

long F_d(long d, long m) {
  require(d >= 1 && m >= 1, "F_d: need d, m >= 1");
  const long c = (m - 1) / d;
  const long half = ceil_div(c, 2);
  return (half * m - half * half * d + 1) * d;
}

long u_sigma(long n, long m) {
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  long best = kInfinity;
  for (long d : divisors(n)) best = std::min(best, F_d(d, m));
  return best;
}

ElementSet construct_C(int n, int m, int d) {
  require(m >= 1 && m <= n, "invalid size: need 1 <= m <= n");
  auto p = CosetProgressionParams::of(n, m, d);
  const int step = n / d;
  auto put = [&](ElementSet& s, long x) { s.insert(static_cast<int>(((x % n) + n) % n)); };
  ElementSet out(n);
  long lo = 0, hi = 0, partial = 0;
  if (p.c % 2 == 0) {
    lo = -p.c / 2;
    hi = p.c / 2 - 1;
    partial = p.c / 2;
  } else {
    lo = -(p.c - 1) / 2;
    hi = (p.c - 1) / 2;
    partial = (p.c + 1) / 2;
  }
  for (long i = lo; i <= hi; ++i) {
    for (int j = 0; j < d; ++j) put(out, i + static_cast<long>(j) * step);
  }
  for (int j = 0; j < p.k; ++j) put(out, partial + static_cast<long>(j) * step);
  return out;
}

BalandraudValues balandraud(long p, long m) {
  require(p >= 3 && is_prime(p), "balandraud: p must be an odd prime");
  require(m >= 0 && m <= (p - 1) / 2, "balandraud: m outside theorem range m <= (p-1)/2");
  const long tri = (m * m + m) / 2;
  return {std::min(p, tri + 1), std::min(p, tri)};
}

// ---------------------------------------------------------------------------
// critical numbers

long v(long n, long h, long g) {
  require(n >= 1 && h >= 1 && g >= 1, "v: need n, h, g >= 1");
  long best = 0;
  for (long d : divisors(n)) {
    const long value = (floor_div(d - 1 - std::gcd(d, g), h) + 1) * (n / d);
    best = std::max(best, value);
  }
  return best;
}

long chi(const GroupSpec& group, long h) {
  require(h >= 1, "chi: need h >= 1");
  return v(group.order(), h, 1) + 1;
}

long chi_span(const GroupSpec& group) { return group.order() / group.smallest_prime() + 1; }

KnownValue chi_hat_known(const GroupSpec& group, long h) {
  require(h >= 2, "chi_hat_known: need h >= 2");
  const long n = group.order();
  const long ord2 = involution_count(group);
  const bool elementary_two = group.exponent() == 2;
  if (elementary_two && (h == 2 || h == n - 2)) {
    return KnownValue::undefined("elementary abelian 2-group with h in {2, n-2}");
  }
  if (!elementary_two) {
    if (h == 2) return KnownValue::exact((n + ord2 + 1) / 2 + 1, "h=2, exponent >= 3");
    if (h >= (n + ord2 - 1) / 2 && h <= n - 2) return KnownValue::exact(h + 2, "large h");
  }
  if (group.is_cyclic() && is_prime(n) && h <= n - 1) {
    return KnownValue::exact((n - 2) / h + h + 1, "prime order");
  }
  if (group.is_cyclic() && n % 2 == 0 && n >= 12) {
    if (h >= 3 && h <= n / 2 - 2) return KnownValue::exact(n / 2 + 1, "even order");
    if (h == n / 2 - 1) return KnownValue::exact(n / 2 + 2, "even order");
  }
  if (group.is_cyclic() && h == 3 && n % 2 == 1) {
    bool has_two_mod_three = false;
    for (auto [q, e] : factorize(n)) has_two_mod_three |= (q % 3 == 2);
    if (!has_two_mod_three || n >= 16) {
      return KnownValue::lower(chi_hat3_display(n), "h=3 lower bound");
    }
  }
  return KnownValue::unknown();
}

long chi_hat3_display(long n) {
  require(n >= 1, "chi_hat3_display: need n >= 1");
  long p = 0;
  for (auto [q, e] : factorize(n)) {
    if (q % 3 == 2) {
      p = q;
      break;
    }
  }
  if (p != 0) {
    const long base = (p + 1) * (n / p) / 3;  // (1 + 1/p) n/3
    if (n == p) return base + 3;
    if (n == 3 * p) return base + 2;
    return base + 1;
  }
  return n / 3 + (n % 9 == 0 ? 4 : 3);
}

long chi_hat_sigma(const GroupSpec& group) {
  const long n = group.order();
  require(n >= 10, "chi_hat_sigma: formula needs n >= 10");
  const long p = group.smallest_prime();
  bool special = false;
  if (group.is_cyclic()) {
    if (n == p) {
      special = true;
    } else {
      const long q = n / p;
      special = is_prime(q) && p >= 3 && p <= q && q <= p + isqrt(4 * (p - 2)) + 1;
    }
  }
  if (special) return isqrt(4 * (n - 2)) + 1;
  return n / p + p - 1;
}

long diananda_yap(long n) {
  require(n >= 1, "diananda_yap: need n >= 1");
  for (auto [q, e] : factorize(n)) {
    if (q % 3 == 2) return (q + 1) * (n / q) / 3;
  }
  return n / 3;
}

KnownValue sumfree_kl_lower(long n, long k, long l) {
  require(k > l && l >= 1, "sumfree_kl_lower: need k > l >= 1");
  const long value = v(n, k + l, k - l);
  if (std::gcd(k - l, n) == 1 || (k == 3 && l == 1)) return KnownValue::exact(value, "v_{k-l}(n,k+l)");
  return KnownValue::lower(value, "v_{k-l}(n,k+l)");
}

}  // namespace sumlab
