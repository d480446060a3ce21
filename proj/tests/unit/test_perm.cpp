#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cayley4p/errors.hpp"
#include "cayley4p/perm.hpp"
#include "support/testing.hpp"

using namespace cayley4p;
namespace fx = cayley4p::testing;

namespace {

// Swaps the first two and the last two orbits of four_five_cycles pointwise.
Perm orbit_swap() {
  std::vector<int> img(20);
  for (int i = 0; i < 5; ++i) {
    img[static_cast<std::size_t>(i)] = 5 + i;
    img[static_cast<std::size_t>(5 + i)] = i;
    img[static_cast<std::size_t>(10 + i)] = 15 + i;
    img[static_cast<std::size_t>(15 + i)] = 10 + i;
  }
  return Perm(img);
}

Perm four_five_cycles() {
  return Perm::from_cycles(20, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {10, 11, 12, 13, 14}, {15, 16, 17, 18, 19}});
}

}  // namespace

TEST(Perm, CompositionActsLeftToRight) {
  const Perm f({1, 2, 0});
  const Perm g({0, 2, 1});
  const Perm fg = f * g;
  for (int x = 0; x < 3; ++x) EXPECT_EQ(fg[x], g[f[x]]);
  EXPECT_TRUE((f * f.inverse()).is_identity());
  EXPECT_EQ(f.pow(-1), f.inverse());
  EXPECT_EQ(f.order(), 3u);
}

TEST(Perm, RejectsNonBijection) { EXPECT_THROW(Perm({0, 0, 1}), InputError); }

TEST(PermGroup, Orders) {
  EXPECT_EQ(PermGroup::build(5, {}).order(), 1);
  const std::vector<Perm> cyc{Perm::from_cycles(5, {{0, 1, 2, 3, 4}})};
  EXPECT_EQ(PermGroup::build(5, cyc).order(), 5);
}

TEST(PermGroup, OrderMatchesClosure) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6;
    const std::vector<Perm> gens{fx::random_perm(n, rng), fx::random_perm(n, rng)};
    const auto closure = fx::bfs_closure(n, gens, 1000);
    ASSERT_TRUE(closure);
    const auto G = PermGroup::build(n, gens);
    EXPECT_EQ(G.order(), closure->size());
    for (const auto& g : *closure) EXPECT_TRUE(G.contains(g));
  }
  const std::vector<Perm> sym6{Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  EXPECT_EQ(PermGroup::build(6, sym6).order(), fx::bfs_closure(6, sym6, 1000)->size());
}

TEST(PermGroup, Orbits) {
  EXPECT_EQ(orbits(4, {}).size(), 4u);
  const std::vector<Perm> one{Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})};
  EXPECT_EQ(orbits(7, one).size(), 1u);
  const std::vector<Perm> four{four_five_cycles()};
  const auto o = orbits(20, four);
  ASSERT_EQ(o.size(), 4u);
  for (const auto& orbit : o) EXPECT_EQ(orbit.size(), 5u);
}

TEST(PermGroup, ElementOfOrderP) {
  const std::vector<Perm> s3{Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})};
  EXPECT_FALSE(element_of_order_p(PermGroup::build(3, s3), 5));
  const std::vector<Perm> c10{Perm::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}})};
  const auto g = element_of_order_p(PermGroup::build(10, c10), 5);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->order(), 5u);
}

TEST(PermGroup, PPartOfOrder) {
  EXPECT_EQ(p_part_of_order(PermGroup::build(3, {}), 5), 1);
  // Sym(4) wr C5: five blocks of size 4 permuted cyclically
  std::vector<Perm> gens;
  for (int b = 0; b < 5; ++b) {
    gens.push_back(Perm::from_cycles(20, {{4 * b, 4 * b + 1}}));
    gens.push_back(Perm::from_cycles(20, {{4 * b, 4 * b + 1, 4 * b + 2, 4 * b + 3}}));
  }
  gens.push_back(Perm::from_cycles(20, {{0, 4, 8, 12, 16}, {1, 5, 9, 13, 17}, {2, 6, 10, 14, 18}, {3, 7, 11, 15, 19}}));
  const auto W = PermGroup::build(20, gens);
  EXPECT_EQ(W.order(), BigInt(24) * 24 * 24 * 24 * 24 * 5);
  EXPECT_EQ(p_part_of_order(W, 5), 5);
}

TEST(PermGroup, SemiregularCp) {
  EXPECT_FALSE(is_semiregular_cp(Perm(20), 5));
  EXPECT_TRUE(is_semiregular_cp(four_five_cycles(), 5));
  EXPECT_FALSE(is_semiregular_cp(Perm::from_cycles(20, {{0, 1, 2, 3, 4}}), 5));
}

TEST(PermGroup, CentralizerOfSemiregularCp) {
  const Perm P = four_five_cycles();
  const auto C = centralizer_semiregular_cp(P, 5);
  EXPECT_EQ(C.size(), 15000u);
  std::set<Perm> set(C.begin(), C.end());
  EXPECT_EQ(set.size(), C.size());
  for (int k = 0; k < 5; ++k) EXPECT_EQ(set.count(P.pow(k)), 1u);
  for (std::size_t i = 0; i < C.size(); i += 97) EXPECT_EQ(C[i] * P, P * C[i]);
}

TEST(PermGroup, SubgroupClosure) {
  const std::vector<Perm> id{Perm(20)};
  EXPECT_EQ(subgroup_closure(id, 10)->size(), 1u);
  const std::vector<Perm> gens{four_five_cycles(), orbit_swap()};
  EXPECT_EQ(subgroup_closure(gens, 100)->size(), 10u);
  const std::vector<Perm> s3{Perm::from_cycles(20, {{0, 1}}), Perm::from_cycles(20, {{1, 2}})};
  EXPECT_FALSE(subgroup_closure(s3, 5));
}

TEST(PermGroup, RegularE4Cp) {
  const std::vector<Perm> c20{Perm::from_cycles(20, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19}})};
  EXPECT_FALSE(is_regular_e4cp(*subgroup_closure(c20, 20), 5));
  const std::vector<Perm> ten{four_five_cycles(), orbit_swap()};
  EXPECT_FALSE(is_regular_e4cp(*subgroup_closure(ten, 20), 5));
}
