#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "sumlab/formulas.hpp"
#include "sumlab/numeric.hpp"
#include "sumlab/sumset.hpp"

using namespace sumlab;

namespace {

ElementSet set_of(int n, std::string_view text) { return parse_set(GroupSpec::cyclic(n), text); }

long exact(const KnownValue& v) {
  EXPECT_EQ(v.status, ValueStatus::exact);
  return v.value.value_or(-1);
}

}  // namespace

TEST(FoldFormulas, FdAndU) {
  EXPECT_EQ(f_d(3, 6, 2), 9);
  for (long m = 1; m <= 12; ++m) {
    for (long h = 0; h <= 5; ++h) {
      EXPECT_EQ(f_d(1, m, h), h * m - h + 1);
      EXPECT_EQ(f_d(12, m, h == 0 ? 1 : h), 12);
    }
  }
  EXPECT_EQ(u(15, 6, 2), 9);
  EXPECT_EQ(u(15, 7, 2), 13);
  EXPECT_THROW(u(5, 6, 2), std::invalid_argument);
}

TEST(FoldFormulas, SmallSetsBelowLeastPrime) {
  for (long n = 2; n <= 60; ++n) {
    const long p = smallest_prime_factor(n);
    for (long m = 1; m <= p; ++m) {
      for (long h = 1; h <= 5; ++h) EXPECT_EQ(u(n, m, h), std::min(p, h * m - h + 1)) << n << " " << m << " " << h;
    }
  }
}

TEST(FoldFormulas, UIsMinimumOverDivisors) {
  for (long n = 1; n <= 40; ++n) {
    for (long m = 1; m <= n; ++m) {
      for (long h = 1; h <= 5; ++h) {
        long best = n;
        for (long d : divisors(n)) best = std::min(best, (h * ceil_div(m, d) - h + 1) * d);
        EXPECT_EQ(u(n, m, h), best);
        EXPECT_LE(u(n, m, h), n);
      }
    }
  }
}

TEST(FoldFormulas, RhoSpan) {
  EXPECT_EQ(rho_span(15, 4), 5);
  for (long n = 1; n <= 30; ++n) EXPECT_EQ(rho_span(n, 1), 1);
  for (long p : {2, 3, 5, 7, 11, 13}) EXPECT_EQ(rho_span(p, 2), p);
}

TEST(Constructions, A) {
  EXPECT_EQ(construct_A(15, 6, 3), set_of(15, "{0,5,10,1,6,11}"));
  for (int m = 1; m <= 9; ++m) {
    std::vector<int> ap(static_cast<std::size_t>(m));
    std::iota(ap.begin(), ap.end(), 0);
    EXPECT_EQ(construct_A(9, m, 1), ElementSet(9, ap));
  }
  EXPECT_THROW(construct_A(15, 6, 4), std::invalid_argument);
}

TEST(Constructions, AMatchesItsSizeFormula) {
  for (int n = 2; n <= 30; ++n) {
    const GroupSpec g = GroupSpec::cyclic(n);
    for (long d : divisors(n)) {
      for (int m = 1; m <= n; ++m) {
        const ElementSet a = construct_A(n, m, static_cast<int>(d));
        ASSERT_EQ(a.size(), m);
        const auto params = CosetProgressionParams::of(n, m, static_cast<int>(d));
        for (int h = 1; h <= 4; ++h) {
          const long want = std::min<long>({n, (static_cast<long>(h) * params.c + 1) * d, h * m - h + 1L});
          ASSERT_EQ(h_fold_sumset(g, a, h).size(), want) << n << " " << m << " " << d << " " << h;
        }
      }
    }
  }
}

TEST(Constructions, BExample) {
  const BParams params{3, 3, 2, 1};
  const ElementSet b = construct_B(10, 6, 5, params);
  EXPECT_EQ(b.size(), 6);
  // independent count of the 2-element sums
  const oracle::Group og(std::vector<int>{10});
  oracle::Subset ids;
  b.for_each([&](int x) { ids.push_back(x); });
  EXPECT_EQ(oracle::count(oracle::restricted(og, ids, 2)), 8);
  EXPECT_EQ(restricted_sumset(GroupSpec::cyclic(10), b, 2).size(), 8);

  EXPECT_THROW(validate_B(10, 6, 5, BParams{2, 3, 2, 1}), std::invalid_argument);
}

TEST(RestrictedFormulas, Examples) {
  EXPECT_EQ(u_hat(11, 4, 2), 5);
  // the d=2 construction {0,5,1,6,2,7} beats the progression
  EXPECT_EQ(u_hat(10, 6, 2), 8);
  EXPECT_EQ(exact(w_hat(10, 6, 2)), 8);
  for (int p : {7, 11, 13}) EXPECT_EQ(w_hat(p, 5, 2).status, ValueStatus::unknown);
  EXPECT_EQ(rho_hat_conjectured(11, 4, 2), 5);
  EXPECT_EQ(rho_hat_conjectured(10, 6, 2), 8);
  EXPECT_EQ(rho_hat2_conjectured(10, 6), 8);
  EXPECT_EQ(rho_hat2_conjectured(11, 4), 5);
  EXPECT_EQ(rho_hat_prime(11, 4, 2), 5);
  EXPECT_EQ(rho_hat_prime(7, 5, 2), 7);
  EXPECT_EQ(rho_hat_prime(13, 6, 3), 10);
}

TEST(RestrictedFormulas, UHatMatchesOracleOnZ10) {
  const oracle::Group og(std::vector<int>{10});
  EXPECT_EQ(oracle::count(oracle::restricted(og, {0, 5, 1, 6, 2, 7}, 2)), 8);
  EXPECT_EQ(oracle::count(oracle::restricted(og, {0, 1, 2, 3, 4, 5}, 2)), 9);
  const int brute = oracle::min_size(og, 6, [](const oracle::Group& g, const oracle::Subset& a) {
    return oracle::restricted(g, a, 2);
  });
  EXPECT_EQ(brute, 8);
}

TEST(RestrictedFormulas, ConjectureAgreesWithOracleOnZ15) {
  const oracle::Group og(std::vector<int>{15});
  const int brute = oracle::min_size(og, 6, [](const oracle::Group& g, const oracle::Subset& a) {
    return oracle::restricted(g, a, 2);
  });
  EXPECT_EQ(rho_hat_conjectured(15, 6, 2), brute);
}

TEST(RestrictedFormulas, Consistency) {
  for (int n = 4; n <= 20; ++n) {
    for (int m = 4; m <= n; ++m) {
      EXPECT_EQ(rho_hat_conjectured(n, m, 2), rho_hat2_conjectured(n, m)) << n << " " << m;
      for (int h = 2; h <= m - 2; ++h) {
        const long uh = u_hat(n, m, h);
        EXPECT_LE(uh, std::min<long>(n, static_cast<long>(h) * m - h * h + 1));
        const KnownValue w = w_hat(n, m, h);
        if (w.value) EXPECT_GE(*w.value, uh - 1);
      }
    }
  }
}

TEST(RestrictedFormulas, H2Bounds) {
  const RhoHat2Bounds b = rho_hat2_bounds(GroupSpec::parse("3x3"), 4);
  EXPECT_EQ(b.upper, 6);
  EXPECT_EQ(b.lower.status, ValueStatus::lower_bound);
  EXPECT_EQ(b.lower.value, 5);
  EXPECT_EQ(rho_hat2_bounds(GroupSpec::cyclic(12), 5).lev_lower, 6);
  EXPECT_EQ(rho_hat2_bounds(GroupSpec::cyclic(12), 5).lower.status, ValueStatus::unknown);
  for (const GroupSpec& g : abelian_groups_up_to(2, 32)) {
    for (int m = 2; m <= g.order(); ++m) {
      const RhoHat2Bounds r = rho_hat2_bounds(g, m);
      EXPECT_LE(r.upper - r.lev_lower, 1 + involution_count(g));
    }
  }
}

TEST(SignedFormulas, DivisorSets) {
  EXPECT_EQ(D_Gm(GroupSpec::parse("2x4"), 5), (std::vector<long>{2, 4, 8}));
  EXPECT_EQ(D_Gm(GroupSpec::parse("3x3"), 4), (std::vector<long>{3, 9}));
  for (int m = 1; m <= 15; ++m) EXPECT_EQ(D_Gm(GroupSpec::cyclic(15), m), (std::vector<long>{1, 3, 5, 15}));
}

TEST(SignedFormulas, Examples) {
  const GroupSpec z33 = GroupSpec::parse("3x3");
  EXPECT_EQ(u_pm(z33, 4, 2), 9);
  EXPECT_EQ(u_pm(GroupSpec::parse("2x4"), 5, 2), 8);
  EXPECT_EQ(rho_pm_conjectured(z33, 4, 2), 8);
  EXPECT_EQ(rho_pm_conjectured(z33, 4, 3), 9);
  EXPECT_THROW(rho_pm_conjectured(z33, 4, 1), std::invalid_argument);
}

TEST(SignedFormulas, CyclicReducesToFold) {
  for (const GroupSpec& g : abelian_groups_up_to(2, 40)) {
    for (int m = 1; m <= g.order(); ++m) {
      for (int h = 1; h <= 5; ++h) {
        const long plain = u(g.order(), m, h);
        EXPECT_GE(u_pm(g, m, h), plain);
        if (g.is_cyclic()) {
          EXPECT_EQ(u_pm(g, m, h), plain);
          if (h >= 3) EXPECT_EQ(rho_pm_conjectured(g, m, h), plain);
        }
      }
    }
  }
}

TEST(SignedFormulas, PGroupParams) {
  const PGroupParams a = pgroup_params(3, 2, 4);
  EXPECT_EQ(a.delta, 0);
  EXPECT_EQ(a.k, 1);
  EXPECT_EQ(a.q, 0);
  EXPECT_FALSE(a.equal_rho);

  const PGroupParams b = pgroup_params(5, 2, 3);
  EXPECT_EQ(b.delta, 0);
  EXPECT_EQ(b.k, 1);
  EXPECT_EQ(b.q, 0);
  EXPECT_TRUE(b.equal_rho);

  for (int m = 2; m <= 30; ++m) {
    EXPECT_TRUE(pgroup_params(3, 3, m).equal_rho);
    EXPECT_TRUE(pgroup_params(5, 7, m).equal_rho);
  }
  EXPECT_THROW(pgroup_params(4, 2, 3), std::invalid_argument);
  EXPECT_THROW(pgroup_params(2, 2, 3), std::invalid_argument);
}

TEST(SigmaFormulas, FdAndUSigma) {
  EXPECT_EQ(F_d(3, 6), 12);
  EXPECT_EQ(F_d(1, 6), 10);
  for (long m = 1; m <= 12; ++m) EXPECT_EQ(F_d(12, m), 12);
  EXPECT_EQ(u_sigma(15, 6), 10);
  for (long p : {5, 7, 11, 13, 17}) {
    for (long m = 1; m <= p; ++m) EXPECT_EQ(u_sigma(p, m), std::min(p, m * m / 4 + 1));
  }
  for (long n = 1; n <= 30; ++n) EXPECT_EQ(u_sigma(n, n), n);
}

TEST(SigmaFormulas, CMatchesItsSizeFormula) {
  EXPECT_EQ(construct_C(15, 6, 3), set_of(15, "{0,5,10,1,6,11}"));
  EXPECT_EQ(sigma(GroupSpec::cyclic(15), construct_C(15, 6, 3), true).size(), 12);
  for (int n = 2; n <= 24; ++n) {
    const GroupSpec g = GroupSpec::cyclic(n);
    for (long d : divisors(n)) {
      for (int m = 1; m <= n; ++m) {
        const ElementSet c = construct_C(n, m, static_cast<int>(d));
        ASSERT_EQ(c.size(), m);
        const long got = sigma(g, c, true).size();
        if (m > d) {
          ASSERT_EQ(got, std::min<long>(n, F_d(d, m))) << n << " " << m << " " << d;
        } else {
          // C_d sits inside H, so F_d(m) = d is only an upper bound
          ASSERT_LE(got, F_d(d, m));
        }
      }
    }
  }
}

TEST(SigmaFormulas, CenteredProgression) {
  for (int n : {11, 16, 25}) {
    const GroupSpec g = GroupSpec::cyclic(n);
    for (int m = 1; m <= n; ++m) {
      const ElementSet c = construct_C(n, m, 1);
      ElementSet centered(n);
      for (int j = 0; j < m; ++j) centered.insert(static_cast<int>(((j - m / 2) % n + n) % n));
      EXPECT_TRUE(c == centered || c == negate_set(g, centered)) << n << " " << m;
      EXPECT_EQ(sigma(g, c, true).size(), std::min(n, m * m / 4 + 1));
    }
  }
}

TEST(SigmaFormulas, Balandraud) {
  EXPECT_EQ(balandraud(11, 4).with_empty, 11);
  EXPECT_EQ(balandraud(11, 4).without_empty, 10);
  EXPECT_EQ(balandraud(11, 2).with_empty, 4);
  EXPECT_EQ(balandraud(11, 2).without_empty, 3);
  EXPECT_EQ(balandraud(7, 3).with_empty, 7);
  EXPECT_EQ(balandraud(7, 3).without_empty, 6);
  EXPECT_THROW(balandraud(11, 6), std::invalid_argument);
}

TEST(CriticalFormulas, V) {
  EXPECT_EQ(v(10, 3, 1), 5);
  EXPECT_EQ(v(8, 2, 1), 4);
  for (long p : {3, 5, 7, 11, 13, 17}) {
    for (long h = 1; h <= 6; ++h) EXPECT_EQ(v(p, h, 1), (p - 2) / h + 1);
  }
}

TEST(CriticalFormulas, Chi) {
  EXPECT_EQ(chi(GroupSpec::cyclic(8), 2), 5);
  EXPECT_EQ(chi(GroupSpec::cyclic(7), 2), 4);
  for (const GroupSpec& g : abelian_groups_up_to(2, 20)) EXPECT_EQ(chi(g, 1), g.order());
  const oracle::Group z8(std::vector<int>{8});
  EXPECT_EQ(oracle::critical(z8, [](const oracle::Group& g, const oracle::Subset& a) { return oracle::fold(g, a, 2); }),
            5);
}

TEST(CriticalFormulas, ChiSpan) {
  EXPECT_EQ(chi_span(GroupSpec::cyclic(15)), 6);
  EXPECT_EQ(chi_span(GroupSpec::parse("2x4")), 5);
  for (int p : {2, 3, 5, 7, 11}) EXPECT_EQ(chi_span(GroupSpec::cyclic(p)), 2);
}

TEST(CriticalFormulas, ChiHatKnown) {
  EXPECT_EQ(exact(chi_hat_known(GroupSpec::cyclic(7), 2)), 5);
  EXPECT_EQ(exact(chi_hat_known(GroupSpec::cyclic(12), 4)), 7);
  EXPECT_EQ(chi_hat_known(GroupSpec::parse("2x2"), 2).status, ValueStatus::undefined);
  for (long p : {3, 5, 7, 11, 13, 17, 19}) {
    const GroupSpec g = GroupSpec::cyclic(static_cast<int>(p));
    EXPECT_EQ(exact(chi_hat_known(g, 2)), (p + 1) / 2 + 1);
    EXPECT_EQ((p - 2) / 2 + 3, (p + 1) / 2 + 1);
  }
}

TEST(CriticalFormulas, ChiHatSigma) {
  EXPECT_EQ(chi_hat_sigma(GroupSpec::cyclic(15)), 8);
  EXPECT_EQ(chi_hat_sigma(GroupSpec::cyclic(10)), 6);
  EXPECT_EQ(chi_hat_sigma(GroupSpec::cyclic(11)), 7);
  EXPECT_EQ(chi_hat_sigma(GroupSpec::parse("2x6")), 7);
  EXPECT_THROW(chi_hat_sigma(GroupSpec::cyclic(9)), std::invalid_argument);
}

TEST(CriticalFormulas, ChiHat3Display) {
  // the values of the display itself, without its side conditions
  EXPECT_EQ(chi_hat3_display(16), 9);
  EXPECT_EQ(chi_hat3_display(15), 8);
  EXPECT_EQ(chi_hat3_display(17), 9);
  EXPECT_EQ(chi_hat3_display(27), 13);
  EXPECT_EQ(chi_hat3_display(21), 10);
}

TEST(SumFree, DianandaYap) {
  EXPECT_EQ(diananda_yap(10), 5);
  EXPECT_EQ(diananda_yap(9), 3);
  for (long n = 1; n <= 200; ++n) EXPECT_EQ(diananda_yap(n), v(n, 3, 1)) << n;
}

TEST(SumFree, KLLower) {
  const KnownValue a = sumfree_kl_lower(10, 3, 1);
  EXPECT_EQ(a.status, ValueStatus::exact);
  EXPECT_EQ(*a.value, v(10, 4, 2));
  EXPECT_EQ(sumfree_kl_lower(10, 4, 2).status, ValueStatus::lower_bound);
  EXPECT_EQ(sumfree_kl_lower(9, 4, 2).status, ValueStatus::exact);
  EXPECT_THROW(sumfree_kl_lower(10, 2, 2), std::invalid_argument);
}
