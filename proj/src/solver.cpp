#include "cayley4p/solver.hpp"

#include <algorithm>
#include <set>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/errors.hpp"

namespace cayley4p {

int prime_of_order(int n) {
  if (n <= 0 || n % 4 != 0 || !is_prime(n / 4)) return 0;
  return n / 4;
}

std::array<std::vector<Perm>, 3> centralizer_involutions(const CoherentConfiguration& cc, const Perm& P_gen, int p,
                                                         Execution exec) {
  const int n = 4 * p;
  if (cc.degree() != n || P_gen.degree() != n || !is_semiregular_cp(P_gen, p) || !is_automorphism(cc, P_gen)) {
    throw InputError("P must be a color-preserving semiregular element of order p");
  }
  // orbit i is o[i][t] = P^t(o[i][0])
  const auto cyc = P_gen.cycles();
  std::vector<std::vector<int>> o;
  for (const auto& c : cyc) {
    std::vector<int> orbit{c.front()};
    for (int t = 1; t < p; ++t) orbit.push_back(P_gen[orbit.back()]);
    o.push_back(std::move(orbit));
  }
  constexpr std::array<std::array<int, 4>, 3> pairing{{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  const std::size_t per = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
  const auto build = [&](int type, std::size_t code) {
    const auto& sigma = pairing[static_cast<std::size_t>(type)];
    // offsets: orbits 0 and the partner of the first remaining orbit are free
    std::array<int, 4> a{};
    const int k = sigma[0] == 1 ? 2 : 1;
    a[0] = static_cast<int>(code % static_cast<std::size_t>(p));
    a[static_cast<std::size_t>(k)] = static_cast<int>(code / static_cast<std::size_t>(p));
    a[static_cast<std::size_t>(sigma[0])] = (p - a[0]) % p;
    a[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = (p - a[static_cast<std::size_t>(k)]) % p;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < 4; ++i) {
      const int j = sigma[static_cast<std::size_t>(i)];
      for (int t = 0; t < p; ++t) {
        img[static_cast<std::size_t>(o[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)])] =
            o[static_cast<std::size_t>(j)][static_cast<std::size_t>((t + a[static_cast<std::size_t>(i)]) % p)];
      }
    }
    return Perm(img);
  };

  const std::size_t total = 3 * per;
  std::vector<char> keep(total, 0);
  const auto test = [&](std::size_t idx) {
    keep[idx] = is_automorphism(cc, build(static_cast<int>(idx / per), idx % per)) ? 1 : 0;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t idx = 0; idx < total; ++idx) test(idx);
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) test(idx);
  }
  std::array<std::vector<Perm>, 3> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (keep[idx] != 0) out[idx / per].push_back(build(static_cast<int>(idx / per), idx % per));
  }
  return out;
}

std::vector<std::vector<Perm>> r_of_p(const CoherentConfiguration& cc, const Perm& P_gen, int p, std::size_t limit,
                                      Execution exec) {
  const auto inv = centralizer_involutions(cc, P_gen, p, exec);
  std::vector<std::vector<Perm>> out;
  std::set<std::vector<Perm>> seen;
  const auto bound = static_cast<std::size_t>(4 * p);
  for (std::size_t tx = 0; tx < 3; ++tx) {
    for (std::size_t ty = tx + 1; ty < 3; ++ty) {
      for (const auto& x : inv[tx]) {
        for (const auto& y : inv[ty]) {
          if (x * y != y * x) continue;
          const std::vector<Perm> gens{P_gen, x, y};
          auto H = subgroup_closure(gens, bound);
          if (!H || !is_regular_e4cp(*H, p)) continue;
          std::sort(H->begin(), H->end());
          if (!seen.insert(*H).second) continue;
          out.push_back(std::move(*H));
          if (limit > 0 && out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

namespace {

Certificate certificate_from(const Digraph& graph, const std::vector<Perm>& H, int p) {
  const auto lab = regular_labeling(H, p, 0);
  return {p, lab.label, connection_set_of(graph, lab, p), lab.generators};
}

}  // namespace

SolveReport solve(const Digraph& graph, bool exhaustive, Execution exec) {
  const int n = graph.order();
  const int p = prime_of_order(n);
  if (p < 5) throw InputError("vertex count must be 4p with p >= 5 prime");
  SolveReport report;
  if (graph.has_loop()) return report;
  const std::vector<Relation> seeds{graph.arcs()};
  const auto cc = wl_closure(n, seeds, exec);
  report.homogeneous = cc.is_homogeneous();
  if (!report.homogeneous) return report;
  report.bp = main_subroutine(cc, p, exec);
  std::set<std::vector<int>> canon;
  for (const auto& P : report.bp.groups) {
    const auto R = r_of_p(cc, P, p, exhaustive ? 0 : 1, exec);
    for (const auto& H : R) {
      Certificate cert = certificate_from(graph, H, p);
      if (!report.certificate) report.certificate = cert;
      if (!exhaustive) return report;
      if (canon.insert(canonical_connection_set(cert.connection_set).set.indices()).second) {
        report.all.push_back(std::move(cert));
      }
    }
  }
  return report;
}

std::optional<Certificate> find_representation(const Digraph& graph, Execution exec) {
  return solve(graph, false, exec).certificate;
}

std::optional<Perm> iso_test(const ConnectionSet& S1, const Digraph& graph2, Execution exec) {
  const int p = S1.p();
  const E4Cp G(p);
  const int n = G.order();
  if (graph2.order() != n) return std::nullopt;
  if (p < 5) {
    const auto c1 = graph_coloring(cayley_graph(p, S1));
    const auto c2 = graph_coloring(graph2);
    return find_isomorphism(n, c1, c2);
  }
  const auto cert = find_representation(graph2, exec);
  if (!cert) return std::nullopt;
  const auto can1 = canonical_connection_set(S1);
  const auto can2 = canonical_connection_set(cert->connection_set);
  if (can1.set != can2.set) return std::nullopt;
  // g -> sigma2^-1(sigma1(g)) -> the vertex of graph2 carrying that label
  const auto tau = can1.witness.then(can2.witness.inverse());
  std::vector<int> vertex_of(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertex_of[static_cast<std::size_t>(G.index(cert->labeling[static_cast<std::size_t>(v)]))] = v;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = vertex_of[static_cast<std::size_t>(G.index(tau.apply(G.element(x))))];
  return Perm(img);
}

}  // namespace cayley4p
