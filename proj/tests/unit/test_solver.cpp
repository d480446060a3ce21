#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/coherent.hpp"
#include "cayley4p/errors.hpp"
#include "cayley4p/grouplib.hpp"
#include "cayley4p/oracle.hpp"
#include "cayley4p/solver.hpp"
#include "support/testing.hpp"

using namespace cayley4p;
namespace fx = cayley4p::testing;

namespace {

CoherentConfiguration closure_of(const Digraph& g) {
  const std::vector<Relation> seeds{g.arcs()};
  return wl_closure(g.order(), seeds);
}

const ConnectionSet kPlanted = parse_connection_set("10.0,01.0,00.1,00.4", 5);

std::vector<Perm> planted_group(int p) {
  std::vector<Perm> gens;
  for (GElem k : {GElem{1, 0}, GElem{2, 0}, GElem{0, 1}}) gens.push_back(right_translation(p, k));
  auto H = *subgroup_closure(gens, static_cast<std::size_t>(4 * p));
  std::sort(H.begin(), H.end());
  return H;
}

}  // namespace

TEST(CentralizerInvolutions, TrivialConfigurationHasAll) {
  const Perm P = right_translation(5, GElem{0, 1});
  const auto inv = centralizer_involutions(trivial_configuration(20), P, 5);
  for (const auto& group : inv) {
    EXPECT_EQ(group.size(), 25u);
    for (const auto& x : group) {
      EXPECT_EQ(x.order(), 2u);
      EXPECT_EQ(x.fixed_points(), 0);
      EXPECT_EQ(x * P, P * x);
    }
  }
}

TEST(CentralizerInvolutions, SerialAndParallelAgree) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const auto S = fx::random_connection_set(7, 3 + trial, true, rng);
    const auto cc = closure_of(cayley_graph(7, S));
    const Perm P = right_translation(7, GElem{0, 1});
    const auto a = centralizer_involutions(cc, P, 7, Execution::serial);
    const auto b = centralizer_involutions(cc, P, 7, Execution::parallel);
    EXPECT_EQ(a, b);
    std::size_t total = 0;
    for (const auto& g : a) {
      total += g.size();
      for (const auto& x : g) EXPECT_TRUE(is_automorphism(cc, x));
    }
    EXPECT_LE(total, 3u * 49u);
  }
}

TEST(RofP, ContainsPlantedGroup) {
  const auto cc = closure_of(cayley_graph(5, kPlanted));
  const auto R = r_of_p(cc, right_translation(5, GElem{0, 1}), 5);
  EXPECT_NE(std::find(R.begin(), R.end(), planted_group(5)), R.end());
  for (const auto& H : R) EXPECT_TRUE(is_regular_e4cp(H, 5));
}

TEST(RofP, EmptyWhenOrbitsAreRigid) {
  const Perm P = right_translation(5, GElem{0, 1});
  Relation cycle, marker;
  for (int x = 0; x < 20; ++x) cycle.emplace_back(x, P[x]);
  for (int x = 0; x < 5; ++x) marker.emplace_back(x, x);
  const std::vector<Relation> seeds{cycle, marker};
  const auto cc = wl_closure(20, seeds);
  EXPECT_TRUE(r_of_p(cc, P, 5).empty());
}

TEST(FindRepresentation, PlantedAndShuffled) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const Digraph g = cayley_graph(5, kPlanted).relabeled(fx::random_perm(20, rng));
    const auto cert = find_representation(g);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(verify_certificate(g, *cert));
    EXPECT_EQ(canonical_connection_set(cert->connection_set).set, canonical_connection_set(kPlanted).set);
  }
}

TEST(FindRepresentation, Examples) {
  EXPECT_FALSE(find_representation(fx::cycle_graph(20)));
  const auto empty = find_representation(Digraph(20));
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->connection_set.size(), 0u);
  Digraph loop = cayley_graph(5, kPlanted);
  loop.add_arc(3, 3);
  EXPECT_FALSE(find_representation(loop));
  EXPECT_THROW(find_representation(Digraph(12)), InputError);
  EXPECT_THROW(find_representation(Digraph(21)), InputError);
}

TEST(Solve, ExhaustiveListsThePlantedSet) {
  const auto report = solve(cayley_graph(7, parse_connection_set("01.0,00.1,00.6,11.2", 7)), true);
  ASSERT_FALSE(report.all.empty());
  const auto planted = canonical_connection_set(parse_connection_set("01.0,00.1,00.6,11.2", 7)).set;
  bool found = false;
  std::set<std::vector<int>> distinct;
  for (const auto& c : report.all) {
    const auto canon = canonical_connection_set(c.connection_set).set;
    found = found || canon == planted;
    EXPECT_TRUE(distinct.insert(canon.indices()).second);
  }
  EXPECT_TRUE(found);
}

TEST(IsoTest, Examples) {
  std::mt19937_64 rng(43);
  const Digraph g = cayley_graph(5, kPlanted);
  const Digraph h = g.relabeled(fx::random_perm(20, rng));
  const auto phi = iso_test(kPlanted, h);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(fx::preserves_arcs(g, h, *phi));
  EXPECT_FALSE(iso_test(kPlanted, fx::cycle_graph(20)));
  for (const auto& sigma : aut_of_G(5)) {
    const auto image = cayley_graph(5, apply(sigma, kPlanted));
    const auto psi = iso_test(kPlanted, image);
    ASSERT_TRUE(psi);
    EXPECT_TRUE(fx::preserves_arcs(g, image, *psi));
  }
}

TEST(IsoTest, SmallPrimesUseDirectSearch) {
  const auto S = parse_connection_set("01.0,10.0,00.1", 2);
  const Digraph g = cayley_graph(2, S);
  std::mt19937_64 rng(47);
  const Digraph h = g.relabeled(fx::random_perm(8, rng));
  const auto phi = iso_test(S, h);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(fx::preserves_arcs(g, h, *phi));
}

TEST(PrimeOfOrder, Values) {
  EXPECT_EQ(prime_of_order(20), 5);
  EXPECT_EQ(prime_of_order(8), 2);
  EXPECT_EQ(prime_of_order(24), 0);
  EXPECT_EQ(prime_of_order(21), 0);
}
