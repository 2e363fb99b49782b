#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace picketlab;
using namespace picketlab::testing;

namespace {

SubgroupPresentation random_subgroup(const GroupTypePtr& g, Rng& rng, int max_gens = 3) {
  std::vector<Element> gens;
  const auto count = uniform(rng, static_cast<Residue>(max_gens + 1));
  for (Residue i = 0; i < count; ++i) {
    Element x = random_element(g, rng);
    gens.push_back(p_power_mul(static_cast<int>(uniform(rng, 2)), x));
  }
  return howellize(g, gens);
}

std::set<Coeffs> elements_of(const SubgroupPresentation& s) {
  return brute_span(s.group_ptr(), s.generators());
}

}  // namespace

TEST(Presentation, CyclicSubgroupFixture) {
  auto g = make_group(2, {2, 1});
  auto u = sub(g, {{1, 1}});
  EXPECT_EQ(u.order_exp(), 2);
  EXPECT_EQ(elements_of(u), (std::set<Coeffs>{{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
  EXPECT_TRUE(member(Element(g, {3, 1}), u));
  EXPECT_FALSE(member(Element(g, {0, 1}), u));
  EXPECT_EQ(intersect(u, level_subgroup(g, 1)), zero_subgroup(g));
  EXPECT_EQ(sum(u, sub(g, {{0, 1}})).order_exp(), 3);
  EXPECT_EQ(sum(u, sub(g, {{0, 1}})), whole_group(g));
}

TEST(Presentation, Socle) {
  auto g = make_group(3, {2, 1});
  auto s = socle(g);
  EXPECT_EQ(s.order_exp(), 2);
  EXPECT_EQ(elements_of(s).size(), 9u);
  for (const auto& x : all_elements(g)) EXPECT_EQ(member(x, s), p_power_mul(1, x).is_zero());
}

TEST(Presentation, LevelSubgroups) {
  auto g = make_group(2, {3, 1, 2, 1});
  EXPECT_EQ(level_subgroup(g, 0), zero_subgroup(g));
  EXPECT_EQ(level_subgroup(g, 1).order_exp(), 2);
  EXPECT_EQ(level_subgroup(g, 2).order_exp(), 4);
  EXPECT_EQ(level_subgroup(g, 3), whole_group(g));
  EXPECT_TRUE(member(Element(g, {0, 1, 3, 1}), level_subgroup(g, 2)));
  EXPECT_FALSE(member(Element(g, {4, 0, 0, 0}), level_subgroup(g, 2)));
}

TEST(Presentation, HowellizeIsOrderInsensitiveAndIdempotent) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = make_group(trial % 2 ? 2 : 3, random_lambda(rng, 8));
    std::vector<Element> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_element(g, rng));
    auto u = howellize(g, gens);
    std::vector<Element> shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    shuffled.push_back(add(gens[0], scalar_mul(5, gens[1])));
    shuffled.push_back(Element::zero(g));
    EXPECT_EQ(howellize(g, shuffled), u);
    EXPECT_EQ(howellize(g, u.generators()), u);
  }
}

TEST(Presentation, MembershipAgreesWithEnumeration) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = make_group(trial % 3 == 0 ? 3 : 2, random_lambda(rng, trial % 3 == 0 ? 5 : 8, 3, 3));
    auto u = random_subgroup(g, rng);
    std::vector<Element> raw = u.generators();
    const auto span = brute_span(g, raw);
    int log_size = 0;
    for (std::size_t n = span.size(); n > 1; n /= g->p()) ++log_size;
    EXPECT_EQ(u.order_exp(), log_size);
    for (const auto& x : all_elements(g)) ASSERT_EQ(member(x, u), span.contains(x.input_coeffs()));
  }
}

TEST(Presentation, SecondIsomorphismTheorem) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = make_group(trial % 3 == 0 ? 5 : 2, random_lambda(rng, 10));
    auto a = random_subgroup(g, rng);
    auto b = random_subgroup(g, rng);
    EXPECT_EQ(sum(a, b).order_exp() + intersect(a, b).order_exp(), a.order_exp() + b.order_exp());
    EXPECT_TRUE(contains(sum(a, b), a));
    EXPECT_TRUE(contains(a, intersect(a, b)));
    EXPECT_EQ(sum(a, b), sum(b, a));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
  }
}

TEST(Presentation, ModularLaw) {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = make_group(trial % 2 ? 3 : 2, random_lambda(rng, 9));
    auto a = random_subgroup(g, rng);
    auto b = random_subgroup(g, rng);
    auto c = sum(a, random_subgroup(g, rng));  // a <= c
    EXPECT_EQ(sum(a, intersect(b, c)), intersect(sum(a, b), c));
  }
}

TEST(Presentation, PPowerMultiple) {
  auto g = make_group(2, {3, 1});
  auto w = whole_group(g);
  EXPECT_EQ(multiply_by_p_power(w, 1), sub(g, {{2, 0}}));
  EXPECT_EQ(multiply_by_p_power(w, 2), sub(g, {{4, 0}}));
  EXPECT_EQ(multiply_by_p_power(w, 3), zero_subgroup(g));
  EXPECT_EQ(multiply_by_p_power(w, 0), w);
}

TEST(Presentation, ElementaryQuotientDim) {
  auto g = make_group(2, {2, 1, 1});
  auto w = whole_group(g);
  EXPECT_EQ(elementary_quotient_dim(w, multiply_by_p_power(w, 1)), 3);
  EXPECT_EQ(elementary_quotient_dim(w, socle(g)), 1);
  try {
    elementary_quotient_dim(socle(g), w);
    FAIL() << "expected a containment failure";
  } catch (const WitnessError& e) {
    ASSERT_EQ(e.witnesses().size(), 1u);
    EXPECT_FALSE(member(e.witnesses()[0], socle(g)));
  }
  try {
    elementary_quotient_dim(w, zero_subgroup(g));
    FAIL() << "expected a p-bound failure";
  } catch (const WitnessError& e) {
    ASSERT_EQ(e.witnesses().size(), 1u);
    EXPECT_FALSE(e.witnesses()[0].is_zero());
  }
}

TEST(Presentation, Purity) {
  auto cyc = make_group(2, {2});
  EXPECT_FALSE(is_pure(sub(cyc, {{2}})));
  auto g = make_group(2, {2, 1});
  EXPECT_TRUE(is_pure(sub(g, {{1, 1}})));
  auto h = make_group(2, {1, 2});
  EXPECT_TRUE(is_pure(sub(h, {{1, 2}})));
  EXPECT_TRUE(is_pure(zero_subgroup(h)));
  EXPECT_TRUE(is_pure(whole_group(h)));
  EXPECT_FALSE(is_pure(sub(h, {{0, 2}})));
}

TEST(Presentation, HeightWithinSubgroup) {
  auto g = make_group(2, {2, 1});
  EXPECT_EQ(height(Element(g, {2, 0}), whole_group(g)), Height::finite(1));
  // inside <(2, 1)> the element (2, 1) has height 0
  EXPECT_EQ(height(Element(g, {2, 1}), sub(g, {{2, 1}})), Height::finite(0));
  EXPECT_TRUE(height(Element::zero(g), sub(g, {{2, 1}})).is_infinite());
  EXPECT_THROW(height(Element(g, {1, 0}), sub(g, {{2, 1}})), Error);
}

TEST(Presentation, Filtration) {
  auto g = make_group(2, {1, 2});
  auto u = sub(g, {{1, 2}});
  auto f = filtration(u);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].n, 1);
  EXPECT_EQ(f[0].subgroup, zero_subgroup(g));  // U_1 = 0
  EXPECT_EQ(f[1].subgroup, u);
  EXPECT_FALSE(member(Element(g, {0, 2}), u));
}

TEST(Presentation, FirstOutside) {
  auto g = make_group(3, {2, 1});
  auto small = sub(g, {{3, 0}});
  EXPECT_FALSE(first_outside(whole_group(g), small).has_value());
  auto w = first_outside(small, whole_group(g));
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(member(*w, small));
}
