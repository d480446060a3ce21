#pragma once

// Instance generators and brute-force helpers shared by the test binaries.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cayley4p/graph.hpp"
#include "cayley4p/grouplib.hpp"
#include "cayley4p/perm.hpp"

namespace cayley4p::testing {

inline Perm random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

/// size elements of G \ {e}; symmetric sets may overshoot size by one.
inline ConnectionSet random_connection_set(int p, int size, bool symmetric, std::mt19937_64& rng) {
  const E4Cp G(p);
  std::vector<int> pool(static_cast<std::size_t>(G.order() - 1));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::set<int> chosen;
  for (int x : pool) {
    if (static_cast<int>(chosen.size()) >= size) break;
    chosen.insert(x);
    if (symmetric) chosen.insert(G.index(G.inv(G.element(x))));
  }
  std::vector<GElem> elems;
  for (int x : chosen) elems.push_back(G.element(x));
  return ConnectionSet(p, elems);
}

inline Digraph random_graph(int n, double prob, bool directed, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(prob);
  Digraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = directed ? 0 : a + 1; b < n; ++b) {
      if (a == b || !coin(rng)) continue;
      g.add_arc(a, b);
      if (!directed) g.add_arc(b, a);
    }
  }
  return g;
}

/// Cayley graph of Z_n with the given connection set.
inline Digraph circulant(int n, const std::vector<int>& s) {
  Digraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int x : s) g.add_arc(a, (a + x) % n);
  }
  return g;
}

inline Digraph cycle_graph(int n) { return circulant(n, {1, n - 1}); }

/// Disjoint union of k complete graphs on m vertices each.
inline Digraph cliques(int k, int m) {
  Digraph g(k * m);
  for (int c = 0; c < k; ++c) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) g.add_arc(c * m + a, c * m + b);
      }
    }
  }
  return g;
}

/// Element list of the group generated by gens, by breadth-first products.
inline std::optional<std::vector<Perm>> bfs_closure(int n, const std::vector<Perm>& gens, std::size_t bound) {
  std::set<Perm> seen{Perm(n)};
  std::vector<Perm> queue{Perm(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Perm h = queue[i] * g;
      if (seen.insert(h).second) {
        if (seen.size() > bound) return std::nullopt;
        queue.push_back(std::move(h));
      }
    }
  }
  return queue;
}

/// a -> b arc of g iff phi(a) -> phi(b) arc of h.
inline bool preserves_arcs(const Digraph& g, const Digraph& h, const Perm& phi) {
  if (g.order() != h.order() || phi.degree() != g.order()) return false;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (g.has_arc(a, b) != h.has_arc(phi[a], phi[b])) return false;
    }
  }
  return true;
}

}  // namespace cayley4p::testing
