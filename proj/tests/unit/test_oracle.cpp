#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/grouplib.hpp"
#include "cayley4p/oracle.hpp"
#include "support/testing.hpp"

using namespace cayley4p;
namespace fx = cayley4p::testing;

namespace {

Certificate identity_certificate(int p, const ConnectionSet& S) {
  const E4Cp G(p);
  Certificate c{p, {}, S, {}};
  for (int x = 0; x < G.order(); ++x) c.labeling.push_back(G.element(x));
  const GElem basis[3] = {{1, 0}, {2, 0}, {0, 1}};
  for (std::size_t k = 0; k < 3; ++k) c.generators[k] = right_translation(p, basis[k]);
  return c;
}

// A planted Cayley graph on 20 vertices whose automorphism group is the regular group itself.
Digraph rigid_cayley_graph() {
  std::mt19937_64 rng(53);
  while (true) {
    const auto S = fx::random_connection_set(5, 7, false, rng);
    const Digraph g = cayley_graph(5, S);
    if (automorphism_group(20, graph_coloring(g)).group.order() == 20) return g;
  }
}

}  // namespace

TEST(VerifyCertificate, Examples) {
  const auto S = parse_connection_set("10.0,01.0,00.1,00.4", 5);
  Digraph g = cayley_graph(5, S);
  const auto cert = identity_certificate(5, S);
  EXPECT_TRUE(verify_certificate(g, cert));
  const auto [a, b] = g.arcs().front();
  g.remove_arc(a, b);
  EXPECT_FALSE(verify_certificate(g, cert));
}

TEST(BruteSemiregular, Examples) {
  EXPECT_TRUE(brute_semiregular_p(Digraph(20), 5).budget_exceeded);
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    const Digraph g = fx::random_graph(20, 0.5, true, rng);
    if (automorphism_group(20, graph_coloring(g)).group.order() != 1) continue;
    const auto r = brute_semiregular_p(g, 5);
    EXPECT_FALSE(r.budget_exceeded);
    EXPECT_TRUE(r.value.empty());
  }
  const auto r = brute_semiregular_p(rigid_cayley_graph(), 5);
  EXPECT_EQ(r.value.size(), 4u);
}

TEST(BruteRegular, Examples) {
  const auto cycle = brute_regular_e4cp(fx::cycle_graph(20));
  EXPECT_FALSE(cycle.budget_exceeded);
  EXPECT_EQ(cycle.group_order, 40);
  EXPECT_TRUE(cycle.value.empty());

  const Digraph rigid = rigid_cayley_graph();
  const auto r = brute_regular_e4cp(rigid);
  ASSERT_EQ(r.value.size(), 1u);
  auto aut = *automorphism_group(20, graph_coloring(rigid)).group.elements(20);
  std::sort(aut.begin(), aut.end());
  EXPECT_EQ(r.value[0], aut);

  // four disjoint 5-cycles: Aut = D10 wr Sym(4) of order 240000
  Digraph cycles(20);
  for (int b = 0; b < 4; ++b) {
    for (int i = 0; i < 5; ++i) {
      cycles.add_arc(5 * b + i, 5 * b + (i + 1) % 5);
      cycles.add_arc(5 * b + (i + 1) % 5, 5 * b + i);
    }
  }
  const auto many = brute_regular_e4cp(cycles, 300000);
  EXPECT_EQ(many.group_order, 240000);
  EXPECT_FALSE(many.value.empty());
}

TEST(ExhaustiveSmallP, Examples) {
  Digraph q3(8);
  for (int a = 0; a < 8; ++a) {
    for (int bit : {1, 2, 4}) q3.add_arc(a, a ^ bit);
  }
  const auto cube = exhaustive_small_p(q3, 2);
  ASSERT_TRUE(cube);
  EXPECT_TRUE(verify_certificate(q3, *cube));

  const Digraph k4k4 = fx::cliques(2, 4);
  const auto two = exhaustive_small_p(k4k4, 2);
  EXPECT_EQ(two.has_value(), !brute_regular_e4cp(k4k4).value.empty());
  if (two) EXPECT_TRUE(verify_certificate(k4k4, *two));

  const auto empty = exhaustive_small_p(Digraph(12), 3);
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->connection_set.size(), 0u);
  EXPECT_TRUE(verify_certificate(Digraph(12), *empty));
}
