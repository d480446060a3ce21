#include "cayley4p/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/errors.hpp"

namespace cayley4p {

bool verify_certificate(const Digraph& graph, const Certificate& cert) {
  const int n = graph.order();
  if (cert.p <= 0 || 4 * cert.p != n || cert.labeling.size() != static_cast<std::size_t>(n)) return false;
  if (cert.connection_set.size() != 0 && cert.connection_set.p() != cert.p) return false;
  const E4Cp G(cert.p);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& g : cert.labeling) {
    if (!G.contains(g) || used[static_cast<std::size_t>(G.index(g))]) return false;
    used[static_cast<std::size_t>(G.index(g))] = true;
  }
  std::vector<bool> in_s(static_cast<std::size_t>(n), false);
  for (const auto& s : cert.connection_set.elements()) in_s[static_cast<std::size_t>(G.index(s))] = true;
  for (int a = 0; a < n; ++a) {
    const GElem ia = G.inv(cert.labeling[static_cast<std::size_t>(a)]);
    for (int b = 0; b < n; ++b) {
      const GElem d = G.mul(cert.labeling[static_cast<std::size_t>(b)], ia);
      if (graph.has_arc(a, b) != in_s[static_cast<std::size_t>(G.index(d))]) return false;
    }
  }
  return true;
}

namespace {

struct AutElements {
  bool exceeded = false;
  BigInt order = 0;
  std::vector<Perm> elements;
};

AutElements aut_elements(const Digraph& graph, std::uint64_t budget) {
  const auto colors = graph_coloring(graph);
  const auto aut = automorphism_group(graph.order(), colors);
  AutElements out;
  out.order = aut.group.order();
  if (out.order > budget) {
    out.exceeded = true;
    return out;
  }
  out.elements = *aut.group.elements(budget);
  return out;
}

}  // namespace

Budgeted<std::vector<Perm>> brute_semiregular_p(const Digraph& graph, int p, std::uint64_t element_budget) {
  Budgeted<std::vector<Perm>> out;
  auto aut = aut_elements(graph, element_budget);
  out.group_order = aut.order;
  out.budget_exceeded = aut.exceeded;
  for (const auto& g : aut.elements) {
    if (is_semiregular_cp(g, p)) out.value.push_back(g);
  }
  std::sort(out.value.begin(), out.value.end());
  return out;
}

Budgeted<std::vector<std::vector<Perm>>> brute_regular_e4cp(const Digraph& graph, std::uint64_t element_budget) {
  Budgeted<std::vector<std::vector<Perm>>> out;
  const int n = graph.order();
  const int p = prime_of_order(n);
  if (p == 0) return out;
  auto aut = aut_elements(graph, element_budget);
  out.group_order = aut.order;
  out.budget_exceeded = aut.exceeded;
  if (aut.exceeded) return out;

  // In a regular group every nonidentity element is fixed-point-free.
  std::vector<Perm> order_p, involutions;
  for (const auto& g : aut.elements) {
    if (g.fixed_points() != 0) continue;
    if (g.order() == static_cast<std::uint64_t>(p)) order_p.push_back(g);
    if (g.order() == 2) involutions.push_back(g);
  }
  std::set<std::vector<Perm>> found;
  for (const auto& g : order_p) {
    std::vector<const Perm*> cent;
    for (const auto& x : involutions) {
      if (x != g && g * x == x * g && (g * x).fixed_points() == 0) cent.push_back(&x);
    }
    for (std::size_t i = 0; i < cent.size(); ++i) {
      for (std::size_t j = i + 1; j < cent.size(); ++j) {
        const Perm& x = *cent[i];
        const Perm& y = *cent[j];
        if (x * y != y * x || (x * y).fixed_points() != 0) continue;
        const std::vector<Perm> gens{g, x, y};
        auto H = subgroup_closure(gens, static_cast<std::size_t>(n));
        if (!H || !is_regular_e4cp(*H, p)) continue;
        std::sort(H->begin(), H->end());
        found.insert(std::move(*H));
      }
    }
  }
  out.value.assign(found.begin(), found.end());
  return out;
}

std::optional<Certificate> exhaustive_small_p(const Digraph& graph, int p) {
  if (p != 2 && p != 3) throw InputError("exhaustive solver handles p = 2 and p = 3");
  return exhaustive_connection_sets(graph, p, true);
}

std::optional<Certificate> exhaustive_connection_sets(const Digraph& graph, int p, bool up_to_aut) {
  const E4Cp G(p);
  const int n = G.order();
  if (graph.order() != n) throw InputError("graph must have 4p vertices");
  if (graph.has_loop()) return std::nullopt;
  const int d = graph.out_degree(0);
  for (int v = 0; v < n; ++v) {
    if (graph.out_degree(v) != d || graph.in_degree(v) != d) return std::nullopt;
  }
  const auto target = graph_coloring(graph);
  std::set<std::vector<int>> tried;
  // subsets of the n - 1 nonidentity elements with exactly d members
  std::vector<int> pick(static_cast<std::size_t>(d));
  std::iota(pick.begin(), pick.end(), 1);
  for (bool more = d <= n - 1; more;) {
    std::vector<GElem> elems;
    for (int i : pick) elems.push_back(G.element(i));
    more = false;
    for (int k = d - 1; k >= 0; --k) {
      if (pick[static_cast<std::size_t>(k)] < n - d + k) {
        ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        more = true;
        break;
      }
    }
    const ConnectionSet S(p, elems);
    const auto canon = up_to_aut ? canonical_connection_set(S).set : S;
    if (!tried.insert(canon.indices()).second) continue;
    const auto phi = find_isomorphism(n, graph_coloring(cayley_graph(p, canon)), target);
    if (!phi) continue;
    // vertex phi(x) carries x, shifted so that vertex 0 carries the identity
    std::vector<GElem> label(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) label[static_cast<std::size_t>((*phi)[x])] = G.element(x);
    const GElem shift = G.inv(label[0]);
    for (auto& g : label) g = G.mul(g, shift);
    std::vector<int> vertex_of(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vertex_of[static_cast<std::size_t>(G.index(label[static_cast<std::size_t>(v)]))] = v;
    std::array<Perm, 3> gens;
    const std::array<GElem, 3> basis{GElem{1, 0}, GElem{2, 0}, GElem{0, 1}};
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        img[static_cast<std::size_t>(v)] =
            vertex_of[static_cast<std::size_t>(G.index(G.mul(label[static_cast<std::size_t>(v)], basis[k])))];
      }
      gens[k] = Perm(img);
    }
    return Certificate{p, std::move(label), canon, gens};
  }
  return std::nullopt;
}

}  // namespace cayley4p
