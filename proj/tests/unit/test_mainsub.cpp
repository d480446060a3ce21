#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/coherent.hpp"
#include "cayley4p/grouplib.hpp"
#include "cayley4p/mainsub.hpp"
#include "support/testing.hpp"

using namespace cayley4p;
namespace fx = cayley4p::testing;

namespace {

CoherentConfiguration closure_of(const Digraph& g) {
  const std::vector<Relation> seeds{g.arcs()};
  return wl_closure(g.order(), seeds);
}

void expect_contract(const CoherentConfiguration& cc, const BpSet& bp, int p) {
  std::set<Perm> seen;
  for (const auto& g : bp.groups) {
    EXPECT_TRUE(is_semiregular_cp(g, p));
    EXPECT_TRUE(is_automorphism(cc, g));
    EXPECT_TRUE(seen.insert(canonical_generator(g, p)).second);
  }
  EXPECT_EQ(bp.groups.size(), bp.provenance.size());
}

}  // namespace

TEST(MainSubroutine, TrivialConfiguration) {
  const auto cc = trivial_configuration(20);
  const auto bp = main_subroutine(cc, 5);
  ASSERT_EQ(bp.groups.size(), 1u);
  EXPECT_EQ(bp.groups[0].cycle_type(), (std::vector<int>{5, 5, 5, 5}));
  EXPECT_EQ(bp.provenance[0], BpStep::step4);
  expect_contract(cc, bp, 5);
}

TEST(MainSubroutine, PlantedCpIsFoundUpToConjugacy) {
  const auto cc = closure_of(cayley_graph(5, parse_connection_set("10.0,01.0,00.1,00.4", 5)));
  const auto bp = main_subroutine(cc, 5);
  ASSERT_FALSE(bp.groups.empty());
  expect_contract(cc, bp, 5);
  // Aut = D4 x D5 has a unique subgroup of order 5
  EXPECT_EQ(canonical_generator(bp.groups[0], 5), canonical_generator(right_translation(5, GElem{0, 1}), 5));
}

TEST(MainSubroutine, StepTwoQuotients) {
  // perfect matching: E2 with classes of size 2, quotient of degree 2p
  const auto cc = closure_of(cayley_graph(5, parse_connection_set("10.0", 5)));
  const auto bp = main_subroutine(cc, 5);
  ASSERT_FALSE(bp.step2_cycle_base_sizes.empty());
  for (auto s : bp.step2_cycle_base_sizes) EXPECT_LE(s, 10u);
  EXPECT_FALSE(bp.groups.empty());
  expect_contract(cc, bp, 5);
}

TEST(MainSubroutine, SerialAndParallelAgree) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const int p = trial % 2 == 0 ? 5 : 7;
    const auto S = fx::random_connection_set(p, 1 + trial, trial % 3 == 0, rng);
    const auto cc = closure_of(cayley_graph(p, S));
    const auto a = main_subroutine(cc, p, Execution::serial);
    const auto b = main_subroutine(cc, p, Execution::parallel);
    EXPECT_EQ(a.groups, b.groups);
    expect_contract(cc, a, p);
  }
}

TEST(CanonicalGenerator, SameForAllGeneratorsOfTheSubgroup) {
  const Perm g = right_translation(7, GElem{0, 1});
  const Perm c = canonical_generator(g, 7);
  for (int k = 1; k < 7; ++k) EXPECT_EQ(canonical_generator(g.pow(k), 7), c);
  const Perm t = Perm::from_cycles(28, {{0, 7}});
  EXPECT_NE(canonical_generator(t * g * t, 7), c);
}
