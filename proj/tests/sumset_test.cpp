#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracle.hpp"
#include "sumlab/numeric.hpp"
#include "sumlab/sumset.hpp"

using namespace sumlab;

namespace {

ElementSet set_of(const GroupSpec& g, std::string_view text) { return parse_set(g, text); }

ElementSet random_subset(const GroupSpec& g, std::mt19937& rng, int max_size) {
  std::vector<int> ids(static_cast<std::size_t>(g.order()));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  const int m = std::uniform_int_distribution<int>(0, std::min(max_size, g.order()))(rng);
  ElementSet s(g.order());
  for (int i = 0; i < m; ++i) s.insert(ids[static_cast<std::size_t>(i)]);
  return s;
}

int total_sum(const GroupSpec& g, const ElementSet& a) {
  int s = 0;
  a.for_each([&](int x) { s = g.add(s, x); });
  return s;
}

struct Case {
  GroupSpec group;
  ElementSet set;
  int h;
};

/// 10^4 random (G, A, h) with |G| <= 24, |A| <= 8, h <= 5.
std::vector<Case> random_cases(unsigned seed) {
  const std::vector<GroupSpec> groups = abelian_groups_up_to(2, 24);
  std::mt19937 rng(seed);
  std::vector<Case> out;
  for (int i = 0; i < 10000; ++i) {
    const GroupSpec& g = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    ElementSet a = random_subset(g, rng, 8);
    out.push_back({g, std::move(a), std::uniform_int_distribution<int>(0, 5)(rng)});
  }
  return out;
}

}  // namespace

TEST(Sumsets, FoldExamples) {
  const GroupSpec z15 = GroupSpec::cyclic(15);
  const ElementSet a = set_of(z15, "{0,5,10,1,6,11}");
  EXPECT_EQ(h_fold_sumset(z15, a, 2), set_of(z15, "{0,1,2,5,6,7,10,11,12}"));
  EXPECT_EQ(h_fold_sumset(z15, a, 1), a);
  EXPECT_EQ(h_fold_sumset(z15, a, 0), set_of(z15, "{0}"));
  EXPECT_EQ(h_fold_sumset(z15, ElementSet(15), 0), set_of(z15, "{0}"));
  EXPECT_TRUE(h_fold_sumset(z15, ElementSet(15), 2).empty());
}

TEST(Sumsets, RestrictedExamples) {
  const GroupSpec z11 = GroupSpec::cyclic(11);
  const ElementSet a = set_of(z11, "{1,2,3,4}");
  EXPECT_EQ(restricted_sumset(z11, a, 2), set_of(z11, "{3,4,5,6,7}"));
  EXPECT_EQ(restricted_sumset(z11, a, 4), set_of(z11, "{10}"));
  EXPECT_TRUE(restricted_sumset(z11, a, 5).empty());
  EXPECT_EQ(restricted_sumset(z11, a, 0), set_of(z11, "{0}"));
}

TEST(Sumsets, SignedExamples) {
  const GroupSpec z9 = GroupSpec::cyclic(9);
  EXPECT_EQ(signed_sumset(z9, set_of(z9, "{1,2}"), 2), set_of(z9, "{1,2,3,4,5,6,7,8}"));
  for (int h = 0; h <= 5; ++h) {
    EXPECT_EQ(signed_sumset(z9, set_of(z9, "{0}"), h), set_of(z9, "{0}"));
  }
  const ElementSet a = set_of(z9, "{1,3,4}");
  EXPECT_EQ(signed_sumset(z9, a, 1), a | negate_set(z9, a));
}

TEST(Sumsets, SigmaAndSpanExamples) {
  const GroupSpec z10 = GroupSpec::cyclic(10);
  EXPECT_EQ(sigma(z10, set_of(z10, "{1,2}"), true), set_of(z10, "{0,1,2,3}"));
  const GroupSpec z11 = GroupSpec::cyclic(11);
  EXPECT_EQ(sigma(z11, set_of(z11, "{1,2,3,4}"), false), set_of(z11, "{1,2,3,4,5,6,7,8,9,10}"));
  EXPECT_EQ(sigma(z11, ElementSet(11), true), set_of(z11, "{0}"));
  EXPECT_TRUE(sigma(z11, ElementSet(11), false).empty());

  const GroupSpec z12 = GroupSpec::cyclic(12);
  EXPECT_EQ(span(z12, set_of(z12, "{4}")), set_of(z12, "{0,4,8}"));
  EXPECT_EQ(span(z12, set_of(z12, "{4,6}")), set_of(z12, "{0,2,4,6,8,10}"));
  EXPECT_EQ(span(z12, ElementSet(12)), set_of(z12, "{0}"));
}

TEST(Sumsets, FoldCountIsCapped) {
  const GroupSpec z7 = GroupSpec::cyclic(7);
  const ElementSet a = set_of(z7, "{1,2}");
  EXPECT_EQ(fold_cap(z7, 2), kMinFoldCap);
  EXPECT_NO_THROW(h_fold_sumset(z7, a, kMinFoldCap));
  EXPECT_THROW(h_fold_sumset(z7, a, kMinFoldCap + 1), std::invalid_argument);
  EXPECT_THROW(signed_sumset(z7, a, -1), std::invalid_argument);
  EXPECT_EQ(fold_cap(GroupSpec::cyclic(100), 10), 110);
}

TEST(Sumsets, MismatchedUniverseIsRejected) {
  EXPECT_THROW(h_fold_sumset(GroupSpec::cyclic(7), ElementSet(8), 2), std::invalid_argument);
}

TEST(Symmetry, Classes) {
  const GroupSpec z10 = GroupSpec::cyclic(10);
  EXPECT_EQ(symmetry_class(z10, set_of(z10, "{1,9}")), SymmetryClass::symmetric);
  EXPECT_EQ(symmetry_class(z10, set_of(z10, "{1,9,3}")), SymmetryClass::near_symmetric);
  const GroupSpec z9 = GroupSpec::cyclic(9);
  EXPECT_EQ(symmetry_class(z9, set_of(z9, "{1,2}")), SymmetryClass::asymmetric);
  EXPECT_EQ(symmetry_class(z10, set_of(z10, "{1,2,8}")), SymmetryClass::near_symmetric);
  EXPECT_EQ(symmetry_class(z10, set_of(z10, "{1,9,2,3}")), SymmetryClass::other);
}

TEST(Symmetry, SignedView) {
  const SignedView v = signed_view(11, ElementSet(11, {1, 2, 3}));
  EXPECT_EQ(v.positives, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(v.negatives.empty());
  EXPECT_EQ(v.norm, 6);
  EXPECT_EQ(signed_view(11, ElementSet(11, {1, 10})).norm, 2);
}

TEST(SumsetOracle, AgreesWithCoefficientEnumerationOnSmallSets) {
  // |A| <= 4 on every group of order <= 12; the acceptance run covers |A| <= 5 up to 16
  for (const GroupSpec& g : abelian_groups_up_to(2, 12)) {
    const oracle::Group og = oracle::of(g);
    for (int m = 0; m <= std::min(4, g.order()); ++m) {
      oracle::for_each_subset(oracle::all_ids(og), m, [&](const oracle::Subset& a) {
        ElementSet la(g.order());
        for (int x : a) la.insert(g.element(og.tuple(x)).index());
        for (int h = 0; h <= 4; ++h) {
          ASSERT_EQ(h_fold_sumset(g, la, h), oracle::to_library(og, g, oracle::fold(og, a, h)));
          ASSERT_EQ(restricted_sumset(g, la, h), oracle::to_library(og, g, oracle::restricted(og, a, h)));
          ASSERT_EQ(signed_sumset(g, la, h), oracle::to_library(og, g, oracle::signed_(og, a, h)));
        }
        ASSERT_EQ(sigma(g, la, true), oracle::to_library(og, g, oracle::sigma(og, a, true)));
        ASSERT_EQ(sigma(g, la, false), oracle::to_library(og, g, oracle::sigma(og, a, false)));
        ASSERT_EQ(span(g, la), oracle::to_library(og, g, oracle::span(og, a)));
      });
    }
  }
}

TEST(SumsetProperties, ContainmentChain) {
  for (const Case& c : random_cases(1)) {
    const ElementSet r = restricted_sumset(c.group, c.set, c.h);
    const ElementSet f = h_fold_sumset(c.group, c.set, c.h);
    const ElementSet s = signed_sumset(c.group, c.set, c.h);
    ASSERT_TRUE(r.is_subset_of(f));
    ASSERT_TRUE(f.is_subset_of(s));
  }
}

TEST(SumsetProperties, Additivity) {
  std::mt19937 rng(2);
  for (const GroupSpec& g : abelian_groups_up_to(2, 24)) {
    for (int trial = 0; trial < 10; ++trial) {
      const ElementSet a = random_subset(g, rng, 6);
      for (int h1 = 0; h1 <= 4; ++h1) {
        for (int h2 = 0; h2 <= 4; ++h2) {
          ASSERT_EQ(h_fold_sumset(g, a, h1 + h2), set_sum(g, h_fold_sumset(g, a, h1), h_fold_sumset(g, a, h2)));
        }
      }
    }
  }
}

TEST(SumsetProperties, TranslationCovariance) {
  std::mt19937 rng(3);
  for (const Case& c : random_cases(3)) {
    const int t = std::uniform_int_distribution<int>(0, c.group.order() - 1)(rng);
    const ElementSet moved = translate(c.group, c.set, t);
    const int shift = c.group.scale(c.h, t);
    ASSERT_EQ(h_fold_sumset(c.group, moved, c.h), translate(c.group, h_fold_sumset(c.group, c.set, c.h), shift));
    ASSERT_EQ(restricted_sumset(c.group, moved, c.h),
              translate(c.group, restricted_sumset(c.group, c.set, c.h), shift));
  }
}

TEST(SumsetProperties, UnitDilationCovariance) {
  std::mt19937 rng(4);
  for (const Case& c : random_cases(4)) {
    const int e = c.group.exponent();
    std::vector<int> units;
    for (int b = 1; b < std::max(e, 2); ++b) {
      if (std::gcd(b, e) == 1) units.push_back(b);
    }
    const int b = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
    const ElementSet scaled = set_dilate(c.group, b, c.set);
    for (SumsetKind kind : {SumsetKind::fold, SumsetKind::restricted, SumsetKind::signed_}) {
      ASSERT_EQ(sumset(c.group, scaled, c.h, kind), set_dilate(c.group, b, sumset(c.group, c.set, c.h, kind)));
    }
  }
}

TEST(SumsetProperties, SignedSymmetry) {
  for (const Case& c : random_cases(5)) {
    const ElementSet s = signed_sumset(c.group, c.set, c.h);
    ASSERT_EQ(s, negate_set(c.group, s));
  }
}

TEST(SumsetProperties, ComplementDuality) {
  for (const Case& c : random_cases(6)) {
    const int m = c.set.size();
    const int sum = total_sum(c.group, c.set);
    for (int h = 0; h <= m; ++h) {
      const ElementSet dual = restricted_sumset(c.group, c.set, m - h);
      ElementSet expected(c.group.order());
      dual.for_each([&](int x) { expected.insert(c.group.add(sum, c.group.negate(x))); });
      ASSERT_EQ(restricted_sumset(c.group, c.set, h), expected);
    }
  }
}

TEST(SumsetProperties, SigmaIsUnionOfRestrictedLayers) {
  std::mt19937 rng(7);
  for (const GroupSpec& g : abelian_groups_up_to(2, 20)) {
    for (int trial = 0; trial < 20; ++trial) {
      const ElementSet a = random_subset(g, rng, 9);
      ElementSet layers(g.order());
      for (int h = 0; h <= a.size(); ++h) layers |= restricted_sumset(g, a, h);
      ASSERT_EQ(sigma(g, a, true), layers);
    }
  }
}
