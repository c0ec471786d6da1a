#include "sumlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <condition_variable>
#include <cstdlib>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "sumlab/formulas.hpp"
#include "sumlab/numeric.hpp"
#include "sumlab/sumset.hpp"

namespace sumlab {

namespace {

// ---------------------------------------------------------------------------
// Parameter grids

struct Defaults {
  int min_order = 2;
  int max_order = 16;
  int max_h = 4;
};

int lo_order(const RangeSpec& r, int fallback) { return r.min_order.value_or(fallback); }
int hi_order(const RangeSpec& r, int fallback) { return r.max_order.value_or(fallback); }
int hi_h(const RangeSpec& r, int fallback) { return r.max_h.value_or(fallback); }

std::vector<GroupSpec> all_groups(const RangeSpec& r, int lo, int hi) {
  return abelian_groups_up_to(lo_order(r, lo), hi_order(r, hi));
}

std::vector<GroupSpec> cyclic_groups(const RangeSpec& r, int lo, int hi) {
  std::vector<GroupSpec> out;
  for (int n = std::max(2, lo_order(r, lo)); n <= hi_order(r, hi); ++n) out.push_back(GroupSpec::cyclic(n));
  return out;
}

std::vector<GroupSpec> prime_groups(const RangeSpec& r, int lo, int hi) {
  std::vector<GroupSpec> out;
  for (int p = std::max(2, lo); p <= r.primes_to.value_or(hi); ++p) {
    if (is_prime(p)) out.push_back(GroupSpec::cyclic(p));
  }
  return out;
}

bool odd_elementary(const GroupSpec& g) { return g.is_elementary_abelian() && g.exponent() % 2 == 1; }

ClaimPoint point(const GroupSpec& g, std::optional<int> m, int h) { return {g, m, Json(h), h, 0, 0}; }

ClaimPoint tagged_point(const GroupSpec& g, std::optional<int> m, const char* tag) {
  return {g, m, Json(tag), 0, 0, 0};
}

/// Every (m, h) with lo_m <= m <= n and lo_h <= h <= hi_h accepted by keep.
template <class Keep>
std::vector<ClaimPoint> grid(const std::vector<GroupSpec>& groups, int lo_m, int lo_h, int max_h, Keep&& keep) {
  std::vector<ClaimPoint> out;
  for (const GroupSpec& g : groups) {
    for (int m = lo_m; m <= g.order(); ++m) {
      for (int h = lo_h; h <= max_h; ++h) {
        if (keep(g, m, h)) out.push_back(point(g, m, h));
      }
    }
  }
  return out;
}

auto any_point = [](const GroupSpec&, int, int) { return true; };

// ---------------------------------------------------------------------------
// Checkers

ClaimOutcome compare(long expected, long observed, bool ok, std::optional<std::string> witness = {}) {
  return {Json(expected), Json(observed), ok ? PointStatus::match : PointStatus::discrepancy, std::move(witness)};
}

ClaimOutcome equal(long expected, long observed, std::optional<std::string> witness = {}) {
  return compare(expected, observed, expected == observed, std::move(witness));
}

struct Minimum {
  long value = 0;
  std::optional<std::string> witness;
  std::vector<ElementSet> witnesses;
  bool truncated = false;
};

SearchLimits point_limits(SearchLimits limits) {
  limits.threads = 1;
  return limits;
}

Minimum minimum(const GroupSpec& g, int m, std::optional<int> h, SumsetKind kind, const SearchLimits& limits,
                SetFilter filter = SetFilter::all, bool nonempty = false) {
  SearchTask task{g, m, h, kind, nonempty, filter, Reduction::automatic, point_limits(limits)};
  SearchResult r = min_size(task);
  Minimum out{r.value, std::nullopt, std::move(r.witnesses), r.truncated};
  if (!out.witnesses.empty()) out.witness = format_set(g, out.witnesses.front());
  return out;
}

long known_exact(const KnownValue& v) {
  if (v.status != ValueStatus::exact || !v.value) {
    throw std::logic_error("formula has no exact value at this point: " + std::string(to_string(v.status)));
  }
  return *v.value;
}

void check_orbit_budget(const GroupSpec& g, int m, const SearchLimits& limits) {
  const std::uint64_t units = static_cast<std::uint64_t>(std::max(1, g.exponent() - 1));
  const std::uint64_t estimate = binomial(g.order(), m) / (static_cast<std::uint64_t>(g.order()) * units) + 1;
  if (estimate > limits.budget) {
    throw SearchRefused("inverse scan exceeds the budget", estimate);
  }
}

/// Checks over all m-subsets (up to affine symmetry) that the sets with
/// |sumset| = target are exactly those satisfying the predicate, and that
/// target is the minimum.
template <class Pred>
ClaimOutcome inverse_check(const GroupSpec& g, int m, int h, SumsetKind kind, long target, const SearchLimits& limits,
                           Pred&& structured) {
  check_orbit_budget(g, m, limits);
  long least = LONG_MAX;
  long mismatches = 0;
  std::optional<std::string> first_bad;
  for_each_representative(g, m, Reduction::translations_automorphisms, [&](const ElementSet& a) {
    const long size = sumset(g, a, h, kind).size();
    least = std::min(least, size);
    if ((size == target) != structured(a)) {
      ++mismatches;
      if (!first_bad) first_bad = format_set(g, a);
    }
    return true;
  });
  ClaimOutcome out;
  out.expected = Json{{"min", target}, {"mismatches", 0}};
  out.observed = Json{{"min", least}, {"mismatches", mismatches}};
  out.status = least == target && mismatches == 0 ? PointStatus::match : PointStatus::discrepancy;
  out.witness = first_bad;
  return out;
}

int display_hypothesis_prime(int n) {
  for (auto [q, e] : factorize(n)) {
    if (q % 3 == 2) return static_cast<int>(q);
  }
  return 0;
}

/// The lower-bound display for h = 3 applies: n >= 16 with a prime divisor
/// congruent to 2 mod 3, or no such divisor at all.
bool chi_hat3_hypothesis(int n) { return display_hypothesis_prime(n) == 0 || n >= 16; }

// ---------------------------------------------------------------------------
// Registry

std::vector<Claim> build_registry() {
  std::vector<Claim> r;

  r.push_back({"RHO-EQ-U", "rho(G,m,h) = u(n,m,h) for every G, m and h", ClaimKind::theorem, true,
               "all groups of order 2..16, 1 <= m <= n, 2 <= h <= 4",
               [](const RangeSpec& rs) { return grid(all_groups(rs, 2, 16), 1, 2, hi_h(rs, 4), any_point); },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::fold, lim);
                 return equal(u(p.group.order(), *p.m, p.h_value), got.value, got.witness);
               }});

  r.push_back({"KEMP-INV",
               "with p the least prime divisor of n, h >= 2 and p > hm-h+1: |hA| = rho(G,m,h) = hm-h+1 "
               "exactly when A is an arithmetic progression",
               ClaimKind::inverse, true, "all groups of order 2..16, 2 <= h <= 4, p > hm-h+1",
               [](const RangeSpec& rs) {
                 return grid(all_groups(rs, 2, 16), 1, 2, hi_h(rs, 4), [](const GroupSpec& g, int m, int h) {
                   return g.smallest_prime() > h * m - h + 1;
                 });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 const int m = *p.m, h = p.h_value;
                 return inverse_check(p.group, m, h, SumsetKind::fold, h * m - h + 1, lim,
                                      [&](const ElementSet& a) { return is_arithmetic_progression(p.group, a); });
               }});

  r.push_back({"CONJ-COSET-RHO",
               "with p the least prime divisor of n and m <= p < hm-h+1: |hA| = rho(G,m,h) = p exactly when "
               "A lies in a coset of a subgroup of order p",
               ClaimKind::inverse, false, "all groups of order 2..25, 2 <= h <= 4, m <= p < hm-h+1",
               [](const RangeSpec& rs) {
                 return grid(all_groups(rs, 2, 25), 1, 2, hi_h(rs, 4), [](const GroupSpec& g, int m, int h) {
                   const int p = g.smallest_prime();
                   return m <= p && p < h * m - h + 1;
                 });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 return inverse_check(p.group, *p.m, p.h_value, SumsetKind::fold, p.group.smallest_prime(), lim,
                                      [&](const ElementSet& a) { return in_prime_coset(p.group, a); });
               }});

  r.push_back({"DDSH-PRIME", "rho^(Z_p,m,h) = min{p, hm-h^2+1} for primes p", ClaimKind::theorem, true,
               "primes p <= 13, 2 <= h <= m-2",
               [](const RangeSpec& rs) {
                 return grid(prime_groups(rs, 2, 13), 4, 2, 64,
                             [](const GroupSpec&, int m, int h) { return h <= m - 2; });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::restricted, lim);
                 return equal(rho_hat_prime(p.group.order(), *p.m, p.h_value), got.value, got.witness);
               }});

  auto restricted_cyclic_grid = [](const RangeSpec& rs) {
    return grid(cyclic_groups(rs, 4, 20), 4, 2, 64, [](const GroupSpec&, int m, int h) { return h <= m - 2; });
  };

  r.push_back({"CONJ-RHAT-UW", "rho^(Z_n,m,h) = min{u^(n,m,h), w^(n,m,h)}", ClaimKind::conjecture, false,
               "cyclic groups of order 4..20, 4 <= m <= n, 2 <= h <= m-2", restricted_cyclic_grid,
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::restricted, lim);
                 return equal(rho_hat_conjectured(p.group.order(), *p.m, p.h_value), got.value, got.witness);
               }});

  r.push_back({"RHAT-U-GAP", "0 <= u^(n,m,h) - rho^(Z_n,m,h) <= 1", ClaimKind::bound, false,
               "cyclic groups of order 4..20, 4 <= m <= n, 2 <= h <= m-2", restricted_cyclic_grid,
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::restricted, lim);
                 const long uh = u_hat(p.group.order(), *p.m, p.h_value);
                 return compare(uh, got.value, uh - got.value >= 0 && uh - got.value <= 1, got.witness);
               }});

  r.push_back({"CONJ-RHAT2",
               "rho^(Z_n,m,2) = min{rho(Z_n,m,2), 2m-4} when n, m are both even or (2m-2) | n with m-1 not a "
               "power of 2, and min{rho(Z_n,m,2), 2m-3} otherwise",
               ClaimKind::conjecture, false, "cyclic groups of order 4..20, 4 <= m <= n, h = 2",
               [](const RangeSpec& rs) { return grid(cyclic_groups(rs, 4, 20), 4, 2, 2, any_point); },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, 2, SumsetKind::restricted, lim);
                 return equal(rho_hat2_conjectured(p.group.order(), *p.m), got.value, got.witness);
               }});

  r.push_back({"BOUND-PLAGNE-UB", "rho^(G,m,2) <= min{rho(G,m,2), 2m-2} for every G", ClaimKind::bound, false,
               "all groups of order 2..16, 2 <= m <= n, h = 2",
               [](const RangeSpec& rs) { return grid(all_groups(rs, 2, 16), 2, 2, 2, any_point); },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, 2, SumsetKind::restricted, lim);
                 const long bound = rho_hat2_bounds(p.group, *p.m).upper;
                 return compare(bound, got.value, got.value <= bound, got.witness);
               }});

  r.push_back({"BOUND-EK-LB", "rho^(G,m,2) >= min{rho(G,m,2), 2m-3} for elementary abelian p-groups, p odd",
               ClaimKind::bound, false, "elementary abelian groups of odd order up to 25, 2 <= m <= n, h = 2",
               [](const RangeSpec& rs) {
                 std::vector<GroupSpec> gs;
                 for (const GroupSpec& g : all_groups(rs, 2, 25)) {
                   if (odd_elementary(g)) gs.push_back(g);
                 }
                 return grid(gs, 2, 2, 2, any_point);
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, 2, SumsetKind::restricted, lim);
                 const long bound = *rho_hat2_bounds(p.group, *p.m).lower.value;
                 return compare(bound, got.value, got.value >= bound, got.witness);
               }});

  r.push_back({"CONJ-LEV-LB", "rho^(G,m,2) >= min{rho(G,m,2), 2m-3-|Ord(G,2)|} for every G",
               ClaimKind::conjecture, false, "all groups of order 2..16, 2 <= m <= n, h = 2",
               [](const RangeSpec& rs) { return grid(all_groups(rs, 2, 16), 2, 2, 2, any_point); },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, 2, SumsetKind::restricted, lim);
                 const long bound = rho_hat2_bounds(p.group, *p.m).lev_lower;
                 return compare(bound, got.value, got.value >= bound, got.witness);
               }});

  r.push_back({"CONJ-PRIME-RHAT", "with p the least prime divisor of n and h < m <= p: rho^(G,m,h) = min{p, hm-h^2+1}",
               ClaimKind::conjecture, false, "all groups of order 2..25, 2 <= h < m <= p",
               [](const RangeSpec& rs) {
                 return grid(all_groups(rs, 2, 25), 3, 2, hi_h(rs, 64), [](const GroupSpec& g, int m, int h) {
                   return h < m && m <= g.smallest_prime();
                 });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::restricted, lim);
                 return equal(rho_hat_prime(p.group.smallest_prime(), *p.m, p.h_value), got.value, got.witness);
               }});

  r.push_back({"CONJ-RHAT-INV",
               "with p the least prime divisor of n, 2 <= h <= m-2 and p > hm-h^2+1: |h^A| = hm-h^2+1 exactly "
               "when A is an arithmetic progression, or h = 2, m = 4 and A = {a, a+g1, a+g2, a+g1+g2}",
               ClaimKind::inverse, false, "all groups of order 2..25, 2 <= h <= m-2, p > hm-h^2+1",
               [](const RangeSpec& rs) {
                 return grid(all_groups(rs, 2, 25), 4, 2, hi_h(rs, 64), [](const GroupSpec& g, int m, int h) {
                   return h <= m - 2 && g.smallest_prime() > h * m - h * h + 1;
                 });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 const int m = *p.m, h = p.h_value;
                 return inverse_check(p.group, m, h, SumsetKind::restricted, h * m - h * h + 1, lim,
                                      [&](const ElementSet& a) {
                                        return is_arithmetic_progression(p.group, a) ||
                                               (h == 2 && m == 4 && is_cube(p.group, a));
                                      });
               }});

  r.push_back({"CONJ-COSET-RHAT",
               "with p the least prime divisor of n and m <= p < hm-h^2+1: |h^A| = p exactly when A lies in a "
               "coset of a subgroup of order p",
               ClaimKind::inverse, false, "all groups of order 2..25, 2 <= h <= m-2, m <= p < hm-h^2+1",
               [](const RangeSpec& rs) {
                 return grid(all_groups(rs, 2, 25), 4, 2, hi_h(rs, 64), [](const GroupSpec& g, int m, int h) {
                   const int p = g.smallest_prime();
                   return h <= m - 2 && m <= p && p < h * m - h * h + 1;
                 });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 return inverse_check(p.group, *p.m, p.h_value, SumsetKind::restricted, p.group.smallest_prime(),
                                      lim, [&](const ElementSet& a) { return in_prime_coset(p.group, a); });
               }});

  r.push_back({"PM-CYCLIC", "rho_pm(Z_n,m,h) = rho(Z_n,m,h)", ClaimKind::theorem, true,
               "cyclic groups of order 2..20, 1 <= m <= n, 1 <= h <= 5",
               [](const RangeSpec& rs) { return grid(cyclic_groups(rs, 2, 20), 1, 1, hi_h(rs, 5), any_point); },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::signed_, lim);
                 return equal(u(p.group.order(), *p.m, p.h_value), got.value, got.witness);
               }});

  r.push_back({"CONJ-PM",
               "rho_pm(G,m,h) = u_pm(G,m,h) for h >= 3; for h = 2 it is min{u_pm(G,m,2), d_m - 1} with d_m the "
               "least odd divisor of n above 2m, or u_pm(G,m,2) when there is none",
               ClaimKind::conjecture, false, "all groups of order 2..16, 1 <= m <= n, 2 <= h <= 6",
               [](const RangeSpec& rs) { return grid(all_groups(rs, 2, 16), 1, 2, hi_h(rs, 6), any_point); },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::signed_, lim);
                 return equal(rho_pm_conjectured(p.group, *p.m, p.h_value), got.value, got.witness);
               }});

  r.push_back({"PM-PGROUP",
               "for G = Z_p^r, p odd: rho_pm(G,m,h) = rho(G,m,h) when p <= h, or when h < p and m <= (q+1)p^k",
               ClaimKind::theorem, true, "elementary abelian groups of odd order up to 16, 2 <= m <= n, 2 <= h <= 4",
               [](const RangeSpec& rs) {
                 std::vector<GroupSpec> gs;
                 for (const GroupSpec& g : all_groups(rs, 3, 16)) {
                   if (odd_elementary(g)) gs.push_back(g);
                 }
                 return grid(gs, 2, 2, hi_h(rs, 4), [](const GroupSpec& g, int m, int h) {
                   return pgroup_params(g.exponent(), h, m).equal_rho;
                 });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::signed_, lim);
                 return equal(u(p.group.order(), *p.m, p.h_value), got.value, got.witness);
               }});

  r.push_back({"CONJ-PM-PGROUP",
               "for G = Z_p^r with p odd and r >= 2: rho_pm(G,m,h) > rho(G,m,h) when h < p and m > (q+1)p^k",
               ClaimKind::conjecture, false, "elementary abelian groups of odd order and rank >= 2 up to 16, h < p",
               [](const RangeSpec& rs) {
                 std::vector<GroupSpec> gs;
                 for (const GroupSpec& g : all_groups(rs, 9, 16)) {
                   if (odd_elementary(g) && g.rank() >= 2) gs.push_back(g);
                 }
                 return grid(gs, 2, 2, hi_h(rs, 4), [](const GroupSpec& g, int m, int h) {
                   const int p = g.exponent();
                   if (h >= p) return false;
                   const PGroupParams params = pgroup_params(p, h, m);
                   return params.k.has_value() && !params.equal_rho;
                 });
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::signed_, lim);
                 const long rho = u(p.group.order(), *p.m, p.h_value);
                 return compare(rho, got.value, got.value > rho, got.witness);
               }});

  r.push_back({"CONJ-QUARTER",
               "rho_pm(G,m,2) and rho(G,m,2) differ for fewer than n/4 values of m; for Z_p^2 with p odd, for "
               "exactly (p-1)^2/4 values",
               ClaimKind::conjecture, false, "all groups of order 2..16, h = 2",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : all_groups(rs, 2, 16)) out.push_back(point(g, std::nullopt, 2));
                 return out;
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 const int n = p.group.order();
                 long count = 0;
                 std::optional<std::string> first;
                 for (int m = 1; m <= n; ++m) {
                   auto got = minimum(p.group, m, 2, SumsetKind::signed_, lim);
                   if (got.value != u(n, m, 2)) {
                     ++count;
                     if (!first) first = "m=" + std::to_string(m) + " " + *got.witness;
                   }
                 }
                 const auto& f = p.group.invariant_factors();
                 if (f.size() == 2 && f[0] == f[1] && is_prime(f[0]) && f[0] % 2 == 1) {
                   return equal((f[0] - 1) * (f[0] - 1) / 4, count, first);
                 }
                 ClaimOutcome out;
                 out.expected = "< " + std::to_string(n) + "/4";
                 out.observed = count;
                 out.status = 4 * count < n ? PointStatus::match : PointStatus::discrepancy;
                 out.witness = first;
                 return out;
               }});

  r.push_back({"PM-TRICLASS",
               "rho_pm(G,m,h) is attained by a symmetric, a near-symmetric or an asymmetric m-subset",
               ClaimKind::theorem, true, "all groups of order 2..12, 1 <= m <= n, 1 <= h <= 4",
               [](const RangeSpec& rs) { return grid(all_groups(rs, 2, 12), 1, 1, hi_h(rs, 4), any_point); },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto all = minimum(p.group, *p.m, p.h_value, SumsetKind::signed_, lim);
                 long best = LONG_MAX;
                 std::optional<std::string> witness;
                 for (SetFilter f : {SetFilter::symmetric, SetFilter::near_symmetric, SetFilter::asymmetric}) {
                   try {
                     auto got = minimum(p.group, *p.m, p.h_value, SumsetKind::signed_, lim, f);
                     if (got.value < best) {
                       best = got.value;
                       witness = got.witness;
                     }
                   } catch (const EmptySearchSpace&) {
                   }
                 }
                 return equal(all.value, best, witness);
               }});

  auto sigma_grid = [](const RangeSpec& rs) {
    std::vector<ClaimPoint> out;
    for (const GroupSpec& g : cyclic_groups(rs, 2, 20)) {
      for (int m = 1; m <= g.order(); ++m) out.push_back(tagged_point(g, m, "N0"));
    }
    return out;
  };

  r.push_back({"SIGMA-UB", "rho^(Z_n,m,N0) <= u(n,m,N0)", ClaimKind::theorem, true,
               "cyclic groups of order 2..20, 1 <= m <= n", sigma_grid,
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, std::nullopt, SumsetKind::restricted, lim);
                 const long bound = u_sigma(p.group.order(), *p.m);
                 return compare(bound, got.value, got.value <= bound, got.witness);
               }});

  r.push_back({"CONJ-SIGMA-U", "rho^(Z_n,m,N0) = u(n,m,N0)", ClaimKind::conjecture, false,
               "cyclic groups of order 2..20, 1 <= m <= n", sigma_grid,
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, std::nullopt, SumsetKind::restricted, lim);
                 return equal(u_sigma(p.group.order(), *p.m), got.value, got.witness);
               }});

  r.push_back({"SIGMA-PRIME", "rho^(Z_p,m,N0) = min{p, floor(m^2/4)+1} for primes p", ClaimKind::theorem, true,
               "primes p <= 17, 1 <= m <= p",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : prime_groups(rs, 2, 17)) {
                   for (int m = 1; m <= g.order(); ++m) out.push_back(tagged_point(g, m, "N0"));
                 }
                 return out;
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 auto got = minimum(p.group, *p.m, std::nullopt, SumsetKind::restricted, lim);
                 const long m = *p.m;
                 return equal(std::min<long>(p.group.order(), m * m / 4 + 1), got.value, got.witness);
               }});

  r.push_back({"BALANDRAUD",
               "over asymmetric m-subsets of Z_p, p odd and m <= (p-1)/2: min |Sigma A| = min{p, (m^2+m)/2+1} and "
               "min |Sigma* A| = min{p, (m^2+m)/2}, both attained by {1,...,m}",
               ClaimKind::theorem, true, "odd primes p <= 13, 1 <= m <= (p-1)/2, with and without the empty sum",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : prime_groups(rs, 3, 13)) {
                   for (int m = 1; m <= (g.order() - 1) / 2; ++m) {
                     out.push_back(tagged_point(g, m, "N0"));
                     out.push_back(tagged_point(g, m, "N"));
                   }
                 }
                 return out;
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 const bool with_empty = p.h == "N0";
                 const int prime = p.group.order(), m = *p.m;
                 auto got = minimum(p.group, m, std::nullopt, SumsetKind::restricted, lim, SetFilter::asymmetric,
                                    !with_empty);
                 const BalandraudValues want = balandraud(prime, m);
                 std::vector<int> interval(static_cast<std::size_t>(m));
                 std::iota(interval.begin(), interval.end(), 1);
                 const ElementSet canon = canonical_form(p.group, ElementSet(prime, interval), Reduction::automorphisms);
                 const bool present = std::find(got.witnesses.begin(), got.witnesses.end(), canon) != got.witnesses.end();
                 ClaimOutcome out;
                 out.expected = Json{{"min", with_empty ? want.with_empty : want.without_empty}, {"interval_witness", true}};
                 out.observed = Json{{"min", got.value}, {"interval_witness", present}};
                 out.status = out.expected == out.observed ? PointStatus::match : PointStatus::discrepancy;
                 out.witness = got.witness;
                 return out;
               }});

  auto critical_value = [](const CriticalResult& c) -> Json {
    if (c.value.status == ValueStatus::undefined) return "undefined";
    return *c.value.value;
  };
  auto critical_witness = [](const GroupSpec& g, const CriticalResult& c) -> std::optional<std::string> {
    if (!c.witness) return std::nullopt;
    return format_set(g, *c.witness);
  };
  auto critical_equal = [=](const GroupSpec& g, const CriticalResult& c, Json expected) {
    ClaimOutcome out;
    out.expected = std::move(expected);
    out.observed = critical_value(c);
    out.status = out.expected == out.observed ? PointStatus::match : PointStatus::discrepancy;
    if (out.status == PointStatus::match && out.observed == "undefined") out.status = PointStatus::undefined;
    out.witness = critical_witness(g, c);
    return out;
  };

  r.push_back({"CHI-EQ-V", "chi(G,h) = v_1(n,h) + 1", ClaimKind::theorem, true,
               "all groups of order 2..16, 2 <= h <= 6",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : all_groups(rs, 2, 16)) {
                   for (int h = 2; h <= hi_h(rs, 6); ++h) out.push_back(point(g, std::nullopt, h));
                 }
                 return out;
               },
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_number(p.group, p.h_value, SumsetKind::fold, point_limits(lim));
                 return critical_equal(p.group, c, v(p.group.order(), p.h_value, 1) + 1);
               }});

  r.push_back({"CHI-HAT-PRIME", "chi^(Z_p,h) = floor((p-2)/h) + h + 1 for primes p", ClaimKind::theorem, true,
               "primes p <= 13, 2 <= h <= p-1",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : prime_groups(rs, 3, 13)) {
                   for (int h = 2; h <= g.order() - 1; ++h) out.push_back(point(g, std::nullopt, h));
                 }
                 return out;
               },
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_number(p.group, p.h_value, SumsetKind::restricted, point_limits(lim));
                 return critical_equal(p.group, c, known_exact(chi_hat_known(p.group, p.h_value)));
               }});

  r.push_back({"CHI-HAT-EVEN",
               "for even n >= 12: chi^(Z_n,h) = n/2+1 when 3 <= h <= n/2-2 and n/2+2 when h = n/2-1",
               ClaimKind::theorem, true, "even n in 12..16, 3 <= h <= n/2-1",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : cyclic_groups(rs, 12, 16)) {
                   const int n = g.order();
                   if (n % 2 != 0 || n < 12) continue;
                   for (int h = 3; h <= n / 2 - 1; ++h) out.push_back(point(g, std::nullopt, h));
                 }
                 return out;
               },
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_number(p.group, p.h_value, SumsetKind::restricted, point_limits(lim));
                 return critical_equal(p.group, c, known_exact(chi_hat_known(p.group, p.h_value)));
               }});

  r.push_back({"CHI-HAT-2",
               "chi^(G,2) = (n+|Ord(G,2)|+1)/2 + 1 when the exponent is at least 3; undefined for elementary "
               "abelian 2-groups",
               ClaimKind::theorem, true, "all groups of order 2..16, h = 2",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : all_groups(rs, 2, 16)) out.push_back(point(g, std::nullopt, 2));
                 return out;
               },
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_number(p.group, 2, SumsetKind::restricted, point_limits(lim));
                 const KnownValue want = chi_hat_known(p.group, 2);
                 if (want.status == ValueStatus::undefined) return critical_equal(p.group, c, "undefined");
                 return critical_equal(p.group, c, known_exact(want));
               }});

  r.push_back({"CHI-HAT-LARGE", "chi^(G,h) = h + 2 when the exponent is at least 3 and (n+|Ord(G,2)|-1)/2 <= h <= n-2",
               ClaimKind::theorem, true, "all groups of order 2..16 with exponent >= 3",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : all_groups(rs, 2, 16)) {
                   if (g.exponent() < 3) continue;
                   const int n = g.order();
                   for (int h = (n + involution_count(g) - 1) / 2; h <= n - 2; ++h) {
                     out.push_back(point(g, std::nullopt, h));
                   }
                 }
                 return out;
               },
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_number(p.group, p.h_value, SumsetKind::restricted, point_limits(lim));
                 return critical_equal(p.group, c, p.h_value + 2);
               }});

  auto chi_hat3_check = [=](const ClaimPoint& p, const SearchLimits& lim) {
    auto c = critical_number(p.group, 3, SumsetKind::restricted, point_limits(lim));
    return critical_equal(p.group, c, chi_hat3_display(p.group.order()));
  };

  r.push_back({"CONJ-CHI-HAT-3",
               "chi^(Z_n,3) equals the three-case lower bound (least prime divisor p = 2 mod 3, n >= 16) or the "
               "two-case bound (no prime divisor = 2 mod 3)",
               ClaimKind::conjecture, false, "cyclic n in 4..30 satisfying the hypothesis of the bound",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : cyclic_groups(rs, 4, 30)) {
                   if (chi_hat3_hypothesis(g.order())) out.push_back(point(g, std::nullopt, 3));
                 }
                 return out;
               },
               chi_hat3_check});

  r.push_back({"CHI-HAT-3-BOUNDARY",
               "chi^(Z_n,3) against the same bound at n = 15 and n = 16, where the n >= 16 hypothesis is borderline",
               ClaimKind::bound, false, "n in {15, 16}",
               [](const RangeSpec&) {
                 return std::vector<ClaimPoint>{point(GroupSpec::cyclic(15), std::nullopt, 3),
                                                point(GroupSpec::cyclic(16), std::nullopt, 3)};
               },
               chi_hat3_check});

  auto sigma_critical_groups = [](const RangeSpec& rs) {
    std::vector<ClaimPoint> out;
    for (const GroupSpec& g : all_groups(rs, 10, 24)) {
      if (g.order() >= 10) out.push_back(tagged_point(g, std::nullopt, "N0"));
    }
    return out;
  };

  r.push_back({"CHI-HAT-SIGMA",
               "for n >= 10 with least prime divisor p: chi^(G,N0) = floor(2 sqrt(n-2)) + 1 for cyclic G of order p "
               "or pq with q prime and 3 <= p <= q <= p + floor(2 sqrt(p-2)) + 1, and n/p + p - 1 otherwise",
               ClaimKind::theorem, true, "all groups of order 10..24", sigma_critical_groups,
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_sigma(p.group, false, point_limits(lim));
                 return critical_equal(p.group, c, chi_hat_sigma(p.group));
               }});

  r.push_back({"SIGMA-ZERO-FREE",
               "the least m with Sigma A = G for every m-subset A of G \\ {0} is chi^(G,N0) - 1",
               ClaimKind::theorem, true, "all groups of order 10..24", sigma_critical_groups,
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_sigma(p.group, true, point_limits(lim));
                 return critical_equal(p.group, c, chi_hat_sigma(p.group) - 1);
               }});

  r.push_back({"CHI-SPAN", "chi(G,N0) = n/p + 1 with p the least prime divisor of n", ClaimKind::theorem, true,
               "all groups of order 2..16",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : all_groups(rs, 2, 16)) out.push_back(tagged_point(g, std::nullopt, "N0"));
                 return out;
               },
               [=](const ClaimPoint& p, const SearchLimits& lim) {
                 auto c = critical_span(p.group, point_limits(lim));
                 return critical_equal(p.group, c, chi_span(p.group));
               }});

  r.push_back({"SIGMA-INV-NORM",
               "every floor(2 sqrt(p-2))-subset A of Z_p with Sigma A != Z_p has a dilation b*A, b != 0, of norm "
               "at most p-2",
               ClaimKind::inverse, false, "odd primes p <= 23",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : prime_groups(rs, 3, 23)) {
                   out.push_back(tagged_point(g, static_cast<int>(isqrt(4L * (g.order() - 2))), "N0"));
                 }
                 return out;
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 const int prime = p.group.order();
                 const auto sets = sigma_noncovering_sets(prime, *p.m, point_limits(lim));
                 long exceptions = 0;
                 std::optional<std::string> first;
                 for (const ElementSet& a : sets) {
                   if (min_dilated_norm(prime, a).value > prime - 2) {
                     ++exceptions;
                     if (!first) first = format_set(p.group, a);
                   }
                 }
                 return equal(0, exceptions, first);
               }});

  r.push_back({"DY-SUMFREE", "the largest sum-free subset of Z_n has size v_1(n,3)", ClaimKind::theorem, true,
               "cyclic groups of order 2..20",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : cyclic_groups(rs, 2, 20)) out.push_back({g, std::nullopt, Json("2,1"), 0, 2, 1});
                 return out;
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 const int n = p.group.order();
                 auto got = max_kl_sumfree(n, 2, 1, point_limits(lim));
                 const long want = v(n, 3, 1);
                 std::optional<std::string> w;
                 if (!got.witnesses.empty()) w = format_set(p.group, got.witnesses.front());
                 return compare(want, got.size, got.size == want && diananda_yap(n) == want, w);
               }});

  r.push_back({"HP-KL-SUMFREE",
               "the largest (k,l)-sum-free subset of Z_n has size at least v_{k-l}(n,k+l), with equality when "
               "gcd(k-l, n) = 1 and for (k,l) = (3,1)",
               ClaimKind::theorem, true, "cyclic groups of order 2..16, 1 <= l < k <= 4",
               [](const RangeSpec& rs) {
                 std::vector<ClaimPoint> out;
                 for (const GroupSpec& g : cyclic_groups(rs, 2, 16)) {
                   for (int k = 2; k <= 4; ++k) {
                     for (int l = 1; l < k; ++l) {
                       out.push_back({g, std::nullopt, Json(std::to_string(k) + "," + std::to_string(l)), 0, k, l});
                     }
                   }
                 }
                 return out;
               },
               [](const ClaimPoint& p, const SearchLimits& lim) {
                 const int n = p.group.order();
                 auto got = max_kl_sumfree(n, p.k, p.l, point_limits(lim));
                 const KnownValue want = sumfree_kl_lower(n, p.k, p.l);
                 std::optional<std::string> w;
                 if (!got.witnesses.empty()) w = format_set(p.group, got.witnesses.front());
                 const bool ok = want.status == ValueStatus::exact ? got.size == *want.value : got.size >= *want.value;
                 return compare(*want.value, got.size, ok, w);
               }});

  return r;
}

std::string h_text(const Json& h) { return h.is_string() ? h.get<std::string>() : h.dump(); }

std::optional<long> gap_value(const Json& j) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_object() && j.contains("min") && j["min"].is_number_integer()) return j["min"].get<long>();
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::theorem: return "theorem";
    case ClaimKind::conjecture: return "conjecture";
    case ClaimKind::bound: return "bound";
    case ClaimKind::inverse: return "inverse";
  }
  return "?";
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::match: return "match";
    case PointStatus::discrepancy: return "discrepancy";
    case PointStatus::refused: return "refused";
    case PointStatus::undefined: return "undefined";
  }
  return "?";
}

PointStatus parse_point_status(std::string_view text) {
  for (PointStatus s : {PointStatus::match, PointStatus::discrepancy, PointStatus::refused, PointStatus::undefined}) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

Json ClaimRecord::to_json() const {
  Json j;
  j["claim_id"] = claim_id;
  j["group"] = group;
  j["m"] = m ? Json(*m) : Json(nullptr);
  j["h"] = h;
  j["expected"] = expected;
  j["observed"] = observed;
  j["status"] = std::string(to_string(status));
  j["witness"] = witness ? Json(*witness) : Json(nullptr);
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

ClaimRecord ClaimRecord::from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("record is not an object");
  for (const char* field : {"claim_id", "group", "m", "h", "expected", "observed", "status", "witness", "elapsed_ms"}) {
    if (!j.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
  }
  ClaimRecord r;
  try {
    r.claim_id = j.at("claim_id").get<std::string>();
    r.group = j.at("group").get<std::string>();
    if (!j.at("m").is_null()) r.m = j.at("m").get<int>();
    r.h = j.at("h");
    r.expected = j.at("expected");
    r.observed = j.at("observed");
    r.status = parse_point_status(j.at("status").get<std::string>());
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("mistyped field: ") + e.what());
  }
  GroupSpec::parse(r.group);
  return r;
}

std::string ClaimRecord::key() const {
  return claim_id + "|" + group + "|" + (m ? std::to_string(*m) : "-") + "|" + h_text(h);
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

TheoremFailure::TheoremFailure(ClaimRecord record)
    : std::runtime_error("proven claim " + record.claim_id + " disagrees with search at " + record.key() +
                         ": expected " + record.expected.dump() + ", observed " + record.observed.dump()),
      record_(std::move(record)) {}

std::vector<ClaimPoint> claim_points(const Claim& claim, const RangeSpec& range) { return claim.points(range); }

ClaimRecord evaluate_point(const Claim& claim, const ClaimPoint& point, const SearchLimits& limits) {
  ClaimRecord rec;
  rec.claim_id = claim.id;
  rec.group = point.group.to_string();
  rec.m = point.m;
  rec.h = point.h;
  const auto start = std::chrono::steady_clock::now();
  try {
    ClaimOutcome out = claim.check(point, limits);
    rec.expected = std::move(out.expected);
    rec.observed = std::move(out.observed);
    rec.status = out.status;
    rec.witness = std::move(out.witness);
  } catch (const SearchRefused& e) {
    rec.expected = nullptr;
    rec.observed = nullptr;
    rec.status = PointStatus::refused;
    rec.witness = std::nullopt;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  rec.elapsed_ms = static_cast<double>(static_cast<long>(rec.elapsed_ms * 1000)) / 1000;
  return rec;
}

RunSummary run_claim(const Claim& claim, const RunOptions& options, std::ostream& sink) {
  const std::vector<ClaimPoint> points = claim_points(claim, options.range);
  RunSummary summary;
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < points.size(); ++i) {
    ClaimRecord probe;
    probe.claim_id = claim.id;
    probe.group = points[i].group.to_string();
    probe.m = points[i].m;
    probe.h = points[i].h;
    if (options.skip.count(probe.key()) != 0) {
      ++summary.skipped;
    } else {
      todo.push_back(i);
    }
  }

  std::vector<std::optional<ClaimRecord>> done(todo.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= todo.size()) return;
      try {
        ClaimRecord rec = evaluate_point(claim, points[todo[slot]], options.limits);
        std::lock_guard lock(mutex);
        done[slot] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        stop.store(true);
      }
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(1, todo.size()))));
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);

  std::optional<ClaimRecord> fatal;
  for (std::size_t slot = 0; slot < todo.size(); ++slot) {
    ClaimRecord rec;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return done[slot].has_value() || failure != nullptr; });
      if (!done[slot]) break;
      rec = std::move(*done[slot]);
      done[slot].reset();
    }
    sink << rec.to_json().dump() << '\n';
    sink.flush();
    if (!sink) {
      stop.store(true);
      throw std::runtime_error("failed to write report stream");
    }
    ++summary.points;
    switch (rec.status) {
      case PointStatus::match: ++summary.match; break;
      case PointStatus::discrepancy: ++summary.discrepancy; break;
      case PointStatus::refused: ++summary.refused; break;
      case PointStatus::undefined: ++summary.undefined; break;
    }
    if (options.progress != nullptr) {
      *options.progress << claim.id << " " << rec.group << " m=" << (rec.m ? std::to_string(*rec.m) : "-")
                        << " h=" << h_text(rec.h) << " " << to_string(rec.status) << "\n";
    }
    if (rec.status == PointStatus::discrepancy && claim.proven) {
      fatal = std::move(rec);
      stop.store(true);
      break;
    }
  }
  pool.clear();
  if (fatal) throw TheoremFailure(std::move(*fatal));
  if (failure) std::rethrow_exception(failure);
  return summary;
}

namespace {

template <class Visit>
void for_each_line(std::istream& stream, Visit&& visit) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(stream, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw SummaryError("line " + std::to_string(number) + ": malformed record: " + e.what(), number);
    }
    try {
      visit(ClaimRecord::from_json(j));
    } catch (const std::invalid_argument& e) {
      throw SummaryError("line " + std::to_string(number) + ": " + e.what(), number);
    }
  }
}

}  // namespace

std::set<std::string> completed_points(std::istream& stream) {
  std::set<std::string> keys;
  for_each_line(stream, [&](const ClaimRecord& r) {
    if (r.status == PointStatus::refused) {
      keys.erase(r.key());
    } else {
      keys.insert(r.key());
    }
  });
  return keys;
}

std::vector<ClaimRecord> read_records(std::istream& stream) {
  std::vector<ClaimRecord> out;
  std::map<std::string, std::size_t> index;
  for_each_line(stream, [&](ClaimRecord r) {
    auto [it, fresh] = index.emplace(r.key(), out.size());
    if (fresh) {
      out.push_back(std::move(r));
    } else {
      out[it->second] = std::move(r);
    }
  });
  return out;
}

std::string summarize(std::istream& stream) {
  struct Row {
    std::size_t points = 0, match = 0, discrepancy = 0, refused = 0, undefined = 0;
    std::optional<long> max_gap;
  };
  std::map<std::pair<std::string, int>, Row> rows;
  for (const ClaimRecord& r : read_records(stream)) {
    Row& row = rows[{r.claim_id, GroupSpec::parse(r.group).order()}];
    ++row.points;
    switch (r.status) {
      case PointStatus::match: ++row.match; break;
      case PointStatus::discrepancy: ++row.discrepancy; break;
      case PointStatus::refused: ++row.refused; break;
      case PointStatus::undefined: ++row.undefined; break;
    }
    const auto e = gap_value(r.expected), o = gap_value(r.observed);
    if (e && o) {
      const long gap = std::labs(*o - *e);
      row.max_gap = std::max(row.max_gap.value_or(0), gap);
    }
  }
  std::ostringstream out;
  out << "claim,group_order,points,match,discrepancy,refused,undefined,max_gap\n";
  for (const auto& [key, row] : rows) {
    out << key.first << ',' << key.second << ',' << row.points << ',' << row.match << ',' << row.discrepancy << ','
        << row.refused << ',' << row.undefined << ',' << (row.max_gap ? std::to_string(*row.max_gap) : "") << '\n';
  }
  return out.str();
}

}  // namespace sumlab
