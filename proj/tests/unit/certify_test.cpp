#include "support.hpp"

#include <gtest/gtest.h>

using namespace picketlab;
using namespace picketlab::testing;

TEST(Verify, DecomposerOutputAccepted) {
  auto g = make_group(2, {1, 2});
  auto u = sub(g, {{1, 2}});
  EXPECT_TRUE(verify_certificate(u, decompose_s1(u)).accepted);
}

TEST(Verify, DroppedGeneratorRejected) {
  auto g = make_group(2, {1, 2});
  auto u = sub(g, {{1, 2}});
  auto d = decompose_s1(u);
  d.partial.clear();
  Verdict v = verify_certificate(u, d);
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.kind, FailureKind::not_generating);
  ASSERT_EQ(v.witness.size(), 1u);
  std::vector<Element> gens;
  for (const auto& c : d.full) gens.push_back(c.generator);
  EXPECT_FALSE(member(v.witness[0], howellize(g, gens)));
}

TEST(Verify, DoubledGeneratorRejected) {
  auto g = make_group(3, {2, 1});
  auto u = sub(g, {{3, 0}});
  auto d = decompose_s1(u);
  // duplicating a generator keeps the span but breaks independence
  auto dup = d;
  dup.full.push_back(dup.full.front());
  Verdict v = verify_certificate(u, dup);
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.kind, FailureKind::not_independent);
  int total = 0;
  for (const auto& x : v.witness) total += order_exponent(x);
  EXPECT_GT(total, g->order_exp());
  // p times a generator has a smaller order than its label
  auto scaled = d;
  scaled.full.front().generator = p_power_mul(1, scaled.full.front().generator);
  Verdict w = verify_certificate(u, scaled);
  ASSERT_FALSE(w.accepted);
  EXPECT_EQ(w.kind, FailureKind::level_mismatch);
  EXPECT_NE(order_exponent(w.witness.at(0)), scaled.full.front().level);
}

TEST(Verify, MislabeledRejected) {
  auto g = make_group(2, {1, 2});
  auto u = sub(g, {{1, 1}, {0, 2}});
  auto d = decompose_f1(u);
  auto bad = d;
  bad.full.front().level += 1;
  EXPECT_EQ(verify_certificate(u, bad).kind, FailureKind::level_mismatch);
  auto wrong_mode = d;
  wrong_mode.mode = Mode::s1;
  Verdict v = verify_certificate(u, wrong_mode);
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.kind, FailureKind::subgroup_mismatch);
  ASSERT_EQ(v.witness.size(), 1u);
  auto claims = d;
  claims.multiplicities[{2, 2}] += 1;
  EXPECT_EQ(verify_certificate(u, claims).kind, FailureKind::multiplicity_mismatch);
  // swapping the roles of full and partial changes U
  auto swapped = d;
  std::swap(swapped.full, swapped.partial);
  swapped.multiplicities = count_levels(Mode::f1, swapped.full, swapped.partial);
  Verdict s = verify_certificate(u, swapped);
  ASSERT_FALSE(s.accepted);
  EXPECT_EQ(s.kind, FailureKind::subgroup_mismatch);
  std::vector<Element> certified;
  for (const auto& c : swapped.full) certified.push_back(c.generator);
  for (const auto& c : swapped.partial) certified.push_back(p_power_mul(1, c.generator));
  ASSERT_EQ(s.witness.size(), 1u);
  EXPECT_NE(member(s.witness[0], u), member(s.witness[0], howellize(g, certified)));
}

TEST(Verify, WrongGroupRejected) {
  auto g = make_group(2, {1, 2});
  auto h = make_group(3, {1, 2});
  auto u = sub(g, {{1, 2}});
  auto d = decompose_s1(sub(h, {{1, 3}}));
  EXPECT_EQ(verify_certificate(u, d).kind, FailureKind::wrong_group);
}

TEST(Brute, FixtureInvariants) {
  auto g = make_group(2, {3, 1});
  auto u = sub(g, {{2, 1}});
  BruteInvariants b = brute_invariants(u);
  EXPECT_EQ(b.order_exp, 4);
  EXPECT_EQ(b.subgroup_exp, 2);
  EXPECT_FALSE(b.f1_eligible);
  EXPECT_FALSE(b.s1_eligible);
  EXPECT_THROW(b.f1_multiplicities(), Error);
  EXPECT_THROW(b.s1_multiplicities(), Error);

  auto h = make_group(2, {1, 2});
  BruteInvariants r = brute_invariants(sub(h, {{1, 2}}));
  EXPECT_TRUE(r.s1_eligible);
  EXPECT_EQ(r.s1_multiplicities(), mults({{1, 1, 1}, {2, 0, 1}}));
  // the only nonzero element of U has height 0
  EXPECT_EQ(r.socle_heights, (std::map<int, int>{{0, 1}}));

  BruteInvariants f = brute_invariants(sub(h, {{1, 1}, {0, 2}}));
  EXPECT_TRUE(f.f1_eligible);
  EXPECT_EQ(f.f1_multiplicities(), mults({{1, 0, 1}, {2, 2, 1}}));
}

TEST(Brute, GuardThrows) {
  auto g = make_group(2, {8, 7});
  EXPECT_THROW(brute_invariants(zero_subgroup(g)), Error);
  auto ok = make_group(2, {7, 7});
  EXPECT_NO_THROW(brute_invariants(zero_subgroup(ok)));
}

TEST(RandomInstance, ModesAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    InstanceSpec f1{3, {1, 2, 3}, InstanceMode::f1, seed};
    EXPECT_TRUE(check_f1(random_instance(f1)));
    EXPECT_EQ(random_instance(f1), random_instance(f1));
    InstanceSpec s1{2, {1, 2, 3}, InstanceMode::s1, seed};
    EXPECT_TRUE(check_s1(random_instance(s1)));
    InstanceSpec bad{2, {3, 1}, InstanceMode::ineligible, seed};
    auto u = random_instance(bad);
    EXPECT_FALSE(check_f1(u));
    EXPECT_FALSE(check_s1(u));
  }
  EXPECT_THROW(random_instance({2, {1, 1}, InstanceMode::ineligible, 0}), Error);
}

TEST(RandomInstance, NonsplitFixtureIsReachable) {
  auto g = make_group(2, {3, 1});
  auto target = sub(g, {{2, 1}});
  bool found = false;
  for (std::uint64_t seed = 0; seed < 500 && !found; ++seed)
    found = random_instance({2, {3, 1}, InstanceMode::ineligible, seed}) == target;
  EXPECT_TRUE(found);
}

TEST(Automorphism, IdentityAndInvalid) {
  auto g = make_group(2, {1, 2});
  auto u = sub(g, {{1, 2}});
  ResidueMatrix id = identity(2);
  EXPECT_TRUE(is_automorphism(g, id));
  EXPECT_EQ(apply_automorphism(id, u), u);
  ResidueMatrix singular = ResidueMatrix::Zero(2, 2);
  singular(0, 0) = 1;
  EXPECT_FALSE(is_automorphism(g, singular));
  // canonical order is (exponent 1, exponent 2); a map Z/2 -> Z/4 must land in 2Z/4
  ResidueMatrix not_hom = identity(2);
  not_hom(0, 1) = 1;
  EXPECT_FALSE(is_automorphism(g, not_hom));
  not_hom(0, 1) = 2;
  EXPECT_TRUE(is_automorphism(g, not_hom));
}

TEST(Automorphism, PreservesStructure) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = make_group(trial % 2 ? 2 : 3, random_lambda(rng, 8));
    ResidueMatrix a = random_automorphism(g, rng());
    ASSERT_TRUE(is_automorphism(g, a));
    Element x = random_element(g, rng), y = random_element(g, rng);
    EXPECT_EQ(apply_automorphism(a, add(x, y)), add(apply_automorphism(a, x), apply_automorphism(a, y)));
    EXPECT_EQ(order_exponent(apply_automorphism(a, x)), order_exponent(x));
    EXPECT_EQ(height(apply_automorphism(a, x)), height(x));
  }
}

TEST(Automorphism, RemarkFixtureKeepsDecomposition) {
  auto g = make_group(2, {1, 2});
  auto u = sub(g, {{1, 2}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto v = apply_automorphism(random_automorphism(g, seed), u);
    EXPECT_EQ(decompose_s1(v).multiplicities, mults({{1, 1, 1}, {2, 0, 1}}));
  }
}
