#include <gtest/gtest.h>

#include <random>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/coherent.hpp"
#include "cayley4p/grouplib.hpp"
#include "support/testing.hpp"

using namespace cayley4p;
namespace fx = cayley4p::testing;

namespace {

CoherentConfiguration closure_of(const Digraph& g) {
  const std::vector<Relation> seeds{g.arcs()};
  return wl_closure(g.order(), seeds);
}

}  // namespace

TEST(AutomorphismGroup, Examples) {
  EXPECT_EQ(automorphism_group(complete_configuration(6)).group.order(), 1);
  EXPECT_EQ(automorphism_group(trivial_configuration(5)).group.order(), 120);
}

TEST(AutomorphismGroup, CayleySchemeRegression) {
  const Digraph g = cayley_graph(5, parse_connection_set("10.0,01.0,00.1,00.4", 5));
  const auto cc = closure_of(g);
  const auto aut = automorphism_group(cc);
  EXPECT_EQ(aut.group.order() % 20, 0);
  // Aut(C4 box C5) = D4 x D5
  EXPECT_EQ(aut.group.order(), 80);
  const auto closure = fx::bfs_closure(20, aut.generators, 1000);
  ASSERT_TRUE(closure);
  EXPECT_EQ(closure->size(), 80u);
  for (const auto& k : aut.generators) EXPECT_TRUE(is_automorphism(cc, k));
  EXPECT_TRUE(is_automorphism(cc, Perm(20)));
  EXPECT_FALSE(is_automorphism(cc, Perm::from_cycles(20, {{0, 7}})));
}

TEST(AutomorphismGroup, MatchesBruteForceOnSmallGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + trial % 5;
    const auto g = fx::random_graph(n, 0.4, trial % 2 == 0, rng);
    const auto colors = graph_coloring(g);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::size_t brute = 0;
    do {
      brute += is_automorphism(n, colors, Perm(img)) ? 1 : 0;
    } while (std::next_permutation(img.begin(), img.end()));
    EXPECT_EQ(automorphism_group(n, colors).group.order(), brute);
  }
}

TEST(FindIsomorphism, ShuffledGraphs) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = fx::random_graph(15, 0.3, true, rng);
    const auto h = g.relabeled(fx::random_perm(15, rng));
    const auto phi = find_isomorphism(15, graph_coloring(g), graph_coloring(h));
    ASSERT_TRUE(phi);
    EXPECT_TRUE(fx::preserves_arcs(g, h, *phi));
  }
  EXPECT_FALSE(find_isomorphism(20, graph_coloring(fx::cycle_graph(20)), graph_coloring(fx::cliques(4, 5))));
}

TEST(ColorIsomorphism, Examples) {
  const auto cc = closure_of(cayley_graph(5, parse_connection_set("10.0,01.0,00.2,00.3", 5)));
  EXPECT_TRUE(color_isomorphism(cc, cc));
  EXPECT_FALSE(color_isomorphism(trivial_configuration(5), trivial_configuration(6)));
  for (const auto& e : all_equivalences(cc)) {
    if (e.classes.size() < 2) continue;
    const auto a = restriction(cc, e.classes[0]).config;
    const auto b = restriction(cc, e.classes[1]).config;
    EXPECT_TRUE(color_isomorphism(a, b));
  }
}
