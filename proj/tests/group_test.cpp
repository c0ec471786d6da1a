#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "sumlab/group.hpp"
#include "sumlab/numeric.hpp"

using namespace sumlab;

namespace {

ElementSet set_of(const GroupSpec& g, std::string_view text) { return parse_set(g, text); }

int partitions(int e) {
  // p(e) by the usual table
  std::vector<int> p(static_cast<std::size_t>(e) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= e; ++part) {
    for (int s = part; s <= e; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  }
  return p[static_cast<std::size_t>(e)];
}

}  // namespace

TEST(GroupSpec, ParsesAndValidatesChains) {
  const GroupSpec z12 = GroupSpec::parse("12");
  EXPECT_EQ(z12.order(), 12);
  EXPECT_EQ(z12.rank(), 1);
  EXPECT_EQ(z12.smallest_prime(), 2);

  const GroupSpec g = GroupSpec::parse("2x4");
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.rank(), 2);
  EXPECT_EQ(g.exponent(), 4);
  EXPECT_EQ(g.to_string(), "2x4");

  EXPECT_THROW(GroupSpec::parse("4x2"), std::invalid_argument);
  EXPECT_THROW(GroupSpec::parse("3x4"), std::invalid_argument);
  EXPECT_THROW(GroupSpec::parse(""), std::invalid_argument);
  EXPECT_THROW(GroupSpec::parse("0"), std::invalid_argument);
  EXPECT_THROW(GroupSpec::parse("2x"), std::invalid_argument);
}

TEST(GroupSpec, ElementaryAbelian) {
  EXPECT_TRUE(GroupSpec::parse("3x3").is_elementary_abelian());
  EXPECT_TRUE(GroupSpec::parse("7").is_elementary_abelian());
  EXPECT_FALSE(GroupSpec::parse("2x4").is_elementary_abelian());
  EXPECT_FALSE(GroupSpec::parse("6").is_elementary_abelian());
}

TEST(GroupClassification, SmallOrders) {
  auto types = [](int n) {
    std::vector<std::string> out;
    for (const GroupSpec& g : abelian_groups_of_order(n)) out.push_back(g.to_string());
    return out;
  };
  EXPECT_EQ(types(8), (std::vector<std::string>{"2x2x2", "2x4", "8"}));
  EXPECT_EQ(types(12), (std::vector<std::string>{"2x6", "12"}));
  EXPECT_EQ(types(7), (std::vector<std::string>{"7"}));
}

TEST(GroupClassification, CountsArePartitionProducts) {
  for (int n = 2; n <= 64; ++n) {
    int expected = 1;
    for (auto [p, e] : factorize(n)) expected *= partitions(e);
    EXPECT_EQ(static_cast<int>(abelian_groups_of_order(n).size()), expected) << "n=" << n;
  }
}

TEST(GroupArithmetic, Examples) {
  const GroupSpec z12 = GroupSpec::cyclic(12);
  EXPECT_EQ(z12.add(7, 8), 3);

  const GroupSpec g = GroupSpec::parse("2x4");
  const Element a = parse_element(g, "(1,3)");
  EXPECT_EQ(g.negate(a).residues(), (std::vector<int>{1, 1}));

  EXPECT_EQ(GroupSpec::cyclic(15).scale(-2, 4), 7);
}

TEST(GroupArithmetic, Dilation) {
  const GroupSpec z11 = GroupSpec::cyclic(11);
  EXPECT_EQ(set_dilate(z11, 2, set_of(z11, "{1,2,3}")), set_of(z11, "{2,4,6}"));
  const GroupSpec z12 = GroupSpec::cyclic(12);
  EXPECT_EQ(set_dilate(z12, 6, set_of(z12, "{1,2,3}")), set_of(z12, "{0,6}"));
  const GroupSpec z7 = GroupSpec::cyclic(7);
  const ElementSet a = set_of(z7, "{0,3,5}");
  EXPECT_EQ(set_dilate(z7, 1, a), a);
}

TEST(GroupArithmetic, ElementOrders) {
  EXPECT_EQ(element_order(GroupSpec::cyclic(12), 4), 3);
  const GroupSpec g = GroupSpec::parse("2x4");
  EXPECT_EQ(element_order(g, parse_element(g, "(1,2)")), 2);
  for (const char* text : {"2", "12", "2x4", "3x3"}) {
    EXPECT_EQ(element_order(GroupSpec::parse(text), 0), 1);
  }
}

TEST(GroupArithmetic, Involutions) {
  EXPECT_EQ(involution_count(GroupSpec::cyclic(12)), 1);
  EXPECT_EQ(involution_count(GroupSpec::parse("2x4")), 3);
  EXPECT_EQ(involution_count(GroupSpec::cyclic(7)), 0);
}

TEST(GroupArithmetic, InvolutionsFollowEvenFactors) {
  for (const GroupSpec& g : abelian_groups_up_to(2, 64)) {
    int even = 0;
    for (int f : g.invariant_factors()) even += f % 2 == 0 ? 1 : 0;
    EXPECT_EQ(involution_count(g) + 1, 1 << even) << g.to_string();
  }
}

TEST(Numeric, Divisors) {
  EXPECT_EQ(divisors(15), (std::vector<long>{1, 3, 5, 15}));
  EXPECT_EQ(divisors(7), (std::vector<long>{1, 7}));
  EXPECT_EQ(divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
}

TEST(Numeric, FloorCeilAndRoots) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(isqrt(60), 7);
  EXPECT_EQ(isqrt(64), 8);
  EXPECT_EQ(binomial(16, 8), 12870U);
  EXPECT_EQ(binomial(5, 7), 0U);
}

TEST(Subgroups, CyclicDivisorSubgroups) {
  const GroupSpec z15 = GroupSpec::cyclic(15);
  EXPECT_EQ(cyclic_divisor_subgroup(15, 3).elements(z15), set_of(z15, "{0,5,10}"));
  EXPECT_TRUE(cyclic_divisor_subgroup(15, 15).elements(z15).is_full());
  const GroupSpec z10 = GroupSpec::cyclic(10);
  EXPECT_EQ(cyclic_divisor_subgroup(10, 2).elements(z10), set_of(z10, "{0,5}"));
}

TEST(Subgroups, CyclicDivisorSubgroupsAreClosed) {
  for (int n = 2; n <= 64; ++n) {
    const GroupSpec g = GroupSpec::cyclic(n);
    for (long d : divisors(n)) {
      const ElementSet h = cyclic_divisor_subgroup(n, static_cast<int>(d)).elements(g);
      ASSERT_EQ(h.size(), d);
      h.for_each([&](int a) {
        EXPECT_TRUE(h.contains(g.negate(a)));
        h.for_each([&](int b) { EXPECT_TRUE(h.contains(g.add(a, b))); });
      });
    }
  }
}

TEST(Subgroups, PrimeOrder) {
  const GroupSpec z9 = GroupSpec::cyclic(9);
  auto s = prime_order_subgroups(z9, 3);
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s[0].subgroup, set_of(z9, "{0,3,6}"));

  EXPECT_EQ(prime_order_subgroups(GroupSpec::parse("3x3"), 3).size(), 4U);

  const GroupSpec z15 = GroupSpec::cyclic(15);
  auto five = prime_order_subgroups(z15, 5);
  ASSERT_EQ(five.size(), 1U);
  EXPECT_EQ(five[0].subgroup, set_of(z15, "{0,3,6,9,12}"));
}

TEST(Literals, RoundTrip) {
  const GroupSpec g = GroupSpec::parse("2x4");
  const ElementSet s = set_of(g, "{(0,0),(1,0),(0,2),(1,2)}");
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(format_set(g, s), "{(0,0),(0,2),(1,0),(1,2)}");
  EXPECT_EQ(parse_set(g, format_set(g, s)), s);
  EXPECT_EQ(format_set(g, ElementSet(g.order())), "{}");

  const GroupSpec z11 = GroupSpec::cyclic(11);
  EXPECT_EQ(set_of(z11, "{2, 5, 8, 0}"), ElementSet(11, {0, 2, 5, 8}));
}

TEST(Literals, ErrorsCarryPositions) {
  const GroupSpec z15 = GroupSpec::cyclic(15);
  try {
    parse_set(z15, "{0,5,x}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5U);
  }
  EXPECT_THROW(parse_set(z15, "{0,15}"), ParseError);
  EXPECT_THROW(parse_set(z15, "0,1"), ParseError);
  EXPECT_THROW(parse_set(GroupSpec::parse("2x4"), "{(0,0,0)}"), ParseError);
  EXPECT_THROW(parse_set(GroupSpec::parse("2x4"), "{1}"), ParseError);
}

TEST(GroupProperties, AdditionLaws) {
  std::mt19937 rng(20240611);
  for (const GroupSpec& g : abelian_groups_up_to(2, 64)) {
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      EXPECT_EQ(g.add(a, b), g.add(b, a));
      EXPECT_EQ(g.add(g.add(a, b), c), g.add(a, g.add(b, c)));
      EXPECT_EQ(g.negate(g.negate(a)), a);
      EXPECT_EQ(g.add(a, g.negate(a)), 0);
      const int k = pick(rng) % 9;
      int repeated = 0;
      for (int i = 0; i < k; ++i) repeated = g.add(repeated, a);
      EXPECT_EQ(g.scale(k, a), repeated);
    }
  }
}

TEST(GroupProperties, IndexEncodingRoundTrips) {
  for (const GroupSpec& g : abelian_groups_up_to(2, 64)) {
    const oracle::Group og = oracle::of(g);
    ASSERT_EQ(og.order(), g.order());
    for (int i = 0; i < g.order(); ++i) {
      const Element e = g.element(i);
      EXPECT_EQ(e.residues(), og.tuple(i));
      EXPECT_EQ(g.element(e.residues()).index(), i);
    }
  }
}

TEST(GroupProperties, ArithmeticMatchesResidues) {
  std::mt19937 rng(7);
  for (const GroupSpec& g : abelian_groups_up_to(2, 48)) {
    const oracle::Group og = oracle::of(g);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const int a = pick(rng), b = pick(rng);
      const long k = static_cast<long>(pick(rng)) - g.order() / 2;
      const int oa = og.id(g.element(a).residues()), ob = og.id(g.element(b).residues());
      EXPECT_EQ(g.element(g.add(a, b)).residues(), og.tuple(og.add(oa, ob)));
      EXPECT_EQ(g.element(g.scale(k, a)).residues(), og.tuple(og.times(k, oa)));
    }
  }
}
