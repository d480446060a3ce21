#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/coherent.hpp"
#include "cayley4p/errors.hpp"
#include "cayley4p/grouplib.hpp"
#include "cayley4p/oracle.hpp"
#include "support/testing.hpp"

using namespace cayley4p;
namespace fx = cayley4p::testing;

TEST(E4Cp, Arithmetic) {
  const E4Cp G(5);
  EXPECT_EQ(G.order(), 20);
  for (int i = 0; i < 20; ++i) {
    const GElem g = G.element(i);
    EXPECT_EQ(G.index(g), i);
    EXPECT_EQ(G.mul(g, G.inv(g)), G.identity());
  }
  EXPECT_EQ(G.element_order(parse_gelem("10.0", 5)), 2);
  EXPECT_EQ(G.element_order(parse_gelem("11.3", 5)), 10);
  EXPECT_THROW(E4Cp(6), InputError);
  EXPECT_THROW(parse_gelem("12.0", 5), InputError);
  EXPECT_THROW(parse_gelem("01.5", 5), InputError);
}

TEST(ConnectionSetText, RoundTrip) {
  const auto s = parse_connection_set("00.4,10.0,01.0,00.1", 5);
  EXPECT_EQ(format_connection_set(s), "00.1,00.4,01.0,10.0");
  EXPECT_TRUE(s.is_symmetric());
  EXPECT_EQ(parse_connection_set("", 5).size(), 0u);
  EXPECT_THROW(parse_connection_set("00.0", 5), InputError);
  EXPECT_THROW(parse_connection_set("00.1,00.1", 5), InputError);
}

TEST(CayleyGraph, Examples) {
  EXPECT_EQ(cayley_graph(5, ConnectionSet(5, {})).arc_count(), 0u);
  std::vector<GElem> all;
  for (int i = 1; i < 20; ++i) all.push_back(E4Cp(5).element(i));
  EXPECT_EQ(cayley_graph(5, ConnectionSet(5, all)).arc_count(), 380u);
  const Digraph g = cayley_graph(5, parse_connection_set("00.1,00.4", 5));
  // four disjoint undirected 5-cycles
  Digraph cycles(20);
  for (int b = 0; b < 4; ++b) {
    for (int i = 0; i < 5; ++i) {
      cycles.add_arc(5 * b + i, 5 * b + (i + 1) % 5);
      cycles.add_arc(5 * b + (i + 1) % 5, 5 * b + i);
    }
  }
  EXPECT_TRUE(find_isomorphism(20, graph_coloring(g), graph_coloring(cycles)));
}

TEST(AutOfG, IsTheAutomorphismGroup) {
  for (int p : {3, 5, 7}) {
    const E4Cp G(p);
    const auto auts = aut_of_G(p);
    EXPECT_EQ(auts.size(), static_cast<std::size_t>(6 * (p - 1)));
    EXPECT_EQ(auts.front(), (GroupAutomorphism{1, 2, 1, p}));
    for (const auto& s : auts) {
      std::set<int> images;
      for (int a = 0; a < G.order(); ++a) {
        images.insert(G.index(s.apply(G.element(a))));
        for (int b = 0; b < G.order(); ++b) {
          EXPECT_EQ(s.apply(G.mul(G.element(a), G.element(b))), G.mul(s.apply(G.element(a)), s.apply(G.element(b))));
        }
      }
      EXPECT_EQ(images.size(), static_cast<std::size_t>(G.order()));
      for (const auto& t : auts) EXPECT_NE(std::find(auts.begin(), auts.end(), s.then(t)), auts.end());
      for (int a = 0; a < G.order(); ++a) EXPECT_EQ(s.inverse().apply(s.apply(G.element(a))), G.element(a));
    }
  }
}

TEST(CanonicalConnectionSet, Examples) {
  EXPECT_EQ(canonical_connection_set(ConnectionSet(5, {})).set.size(), 0u);
  EXPECT_EQ(canonical_connection_set(parse_connection_set("00.2,00.3", 5)).set,
            canonical_connection_set(parse_connection_set("00.1,00.4", 5)).set);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto S = fx::random_connection_set(7, 1 + trial % 20, false, rng);
    const auto c = canonical_connection_set(S);
    EXPECT_EQ(apply(c.witness, S), c.set);
    for (const auto& sigma : aut_of_G(7)) {
      const auto image = apply(sigma, S);
      EXPECT_EQ(canonical_connection_set(image).set, c.set);
      EXPECT_LE(c.set.indices(), image.indices());
    }
  }
}

TEST(Subgroups, TenWithTheRightOrders) {
  for (int p : {3, 5, 7}) {
    const E4Cp G(p);
    const auto subs = subgroups_of_G(p);
    ASSERT_EQ(subs.size(), 10u);
    std::vector<int> orders;
    for (const auto& h : subs) {
      orders.push_back(static_cast<int>(h.size()));
      for (int a : h) {
        for (int b : h) {
          EXPECT_TRUE(std::binary_search(h.begin(), h.end(), G.index(G.mul(G.element(a), G.element(b)))));
        }
      }
    }
    std::vector<int> expected{1, 2, 2, 2, 4, p, 2 * p, 2 * p, 2 * p, 4 * p};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(orders, expected);
  }
}

TEST(RegularLabeling, RightRegularActionGivesIdentity) {
  const E4Cp G(5);
  std::vector<Perm> gens;
  for (const char* k : {"01.0", "10.0", "00.1"}) gens.push_back(right_translation(5, parse_gelem(k, 5)));
  const auto H = subgroup_closure(gens, 20);
  ASSERT_TRUE(H);
  EXPECT_TRUE(is_regular_e4cp(*H, 5));
  const auto lab = regular_labeling(*H, 5);
  for (int x = 0; x < 20; ++x) EXPECT_EQ(lab.label[static_cast<std::size_t>(x)], G.element(x));
}

TEST(RegularLabeling, RecoversPlantedSet) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto S = fx::random_connection_set(5, 2 + trial, false, rng);
    const Perm shuffle = fx::random_perm(20, rng);
    const Digraph g = cayley_graph(5, S).relabeled(shuffle);
    std::vector<Perm> gens;
    for (const char* k : {"01.0", "10.0", "00.1"}) {
      const Perm t = right_translation(5, parse_gelem(k, 5));
      gens.push_back(shuffle.inverse() * t * shuffle);
    }
    const auto H = subgroup_closure(gens, 20);
    ASSERT_TRUE(H);
    const int base = std::uniform_int_distribution<int>(0, 19)(rng);
    const auto lab = regular_labeling(*H, 5, base);
    const auto recovered = connection_set_of(g, lab, 5);
    EXPECT_EQ(canonical_connection_set(recovered).set, canonical_connection_set(S).set);
    const Certificate cert{5, lab.label, recovered, lab.generators};
    EXPECT_TRUE(verify_certificate(g, cert));
  }
}

TEST(OrbitScheme, Examples) {
  const std::vector<Relation> seeds{cayley_graph(5, parse_connection_set("10.0,00.1", 5)).arcs()};
  const auto cayley = wl_closure(20, seeds);
  EXPECT_EQ(orbit_scheme(cayley, 5), cayley);
  const auto full = orbit_scheme(complete_configuration(20), 5);
  EXPECT_EQ(full.rank(), 20);
  EXPECT_TRUE(full.is_homogeneous());
}
