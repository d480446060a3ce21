#include "cayley4p/autsearch.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cayley4p/errors.hpp"

namespace cayley4p {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (v ^ (v >> 31));
}

constexpr int kColorBits = 24;

// Ordered partition of the points; cell ids run 0..cells-1 and are assigned
// from sorted signatures, so they never depend on point labels.
struct Partition {
  std::vector<int> cell;
  int cells = 0;
  bool discrete() const { return cells == static_cast<int>(cell.size()); }
};

class Refiner {
 public:
  Refiner(int n, std::span<const int> m) : n_(n), m_(m) {
    for (int x : m) {
      if (x < 0 || x >= (1 << kColorBits)) throw InputError("color value out of range for the search");
    }
  }

  int degree() const { return n_; }
  int at(int a, int b) const { return m_[static_cast<std::size_t>(a * n_ + b)]; }

  // Root partition by diagonal color, refined; returns its trace.
  std::uint64_t root(Partition& p) const {
    std::vector<int> diag(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) diag[static_cast<std::size_t>(a)] = at(a, a);
    std::vector<int> values = diag;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::uint64_t trace = 0;
    for (int v : values) trace = mix(trace, static_cast<std::uint64_t>(v));
    p.cell.resize(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) {
      p.cell[static_cast<std::size_t>(a)] = static_cast<int>(
          std::lower_bound(values.begin(), values.end(), diag[static_cast<std::size_t>(a)]) - values.begin());
    }
    p.cells = static_cast<int>(values.size());
    return mix(trace, refine(p));
  }

  static Partition individualize(const Partition& p, int v) {
    Partition q = p;
    const int c = p.cell[static_cast<std::size_t>(v)];
    for (std::size_t w = 0; w < q.cell.size(); ++w) {
      if (p.cell[w] > c || (p.cell[w] == c && static_cast<int>(w) != v)) ++q.cell[w];
    }
    ++q.cells;
    return q;
  }

  // Equitable refinement; the trace records every round's sorted signatures.
  std::uint64_t refine(Partition& p) const {
    std::uint64_t trace = mix(0, static_cast<std::uint64_t>(p.cells));
    const auto un = static_cast<std::size_t>(n_);
    std::vector<std::vector<std::uint64_t>> sig(un);
    std::vector<int> order(un);
    while (!p.discrete()) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.clear();
        s.push_back(static_cast<std::uint64_t>(p.cell[static_cast<std::size_t>(v)]));
        for (int w = 0; w < n_; ++w) {
          if (w == v) continue;
          s.push_back((static_cast<std::uint64_t>(at(v, w)) << 32) | (static_cast<std::uint64_t>(at(w, v)) << 8) |
                      static_cast<std::uint64_t>(p.cell[static_cast<std::size_t>(w)]));
        }
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
      int id = -1;
      std::uint64_t round = 0;
      for (std::size_t i = 0; i < un; ++i) {
        const auto& s = sig[static_cast<std::size_t>(order[i])];
        if (i == 0 || s != sig[static_cast<std::size_t>(order[i - 1])]) {
          ++id;
          for (auto x : s) round = mix(round, x);
        }
        round = mix(round, static_cast<std::uint64_t>(id));
        p.cell[static_cast<std::size_t>(order[i])] = id;
      }
      const int cells = id + 1;
      trace = mix(trace, round);
      if (cells == p.cells) break;
      p.cells = cells;
    }
    return mix(trace, static_cast<std::uint64_t>(p.cells));
  }

 private:
  int n_;
  std::span<const int> m_;
};

std::vector<int> target_cell(const Partition& p) {
  std::vector<int> size(static_cast<std::size_t>(p.cells), 0);
  for (int c : p.cell) ++size[static_cast<std::size_t>(c)];
  int best = -1;
  for (int c = 0; c < p.cells; ++c) {
    if (size[static_cast<std::size_t>(c)] < 2) continue;
    if (best < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(best)]) best = c;
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < p.cell.size(); ++v) {
    if (p.cell[v] == best) out.push_back(static_cast<int>(v));
  }
  return out;
}

struct FirstPath {
  std::vector<Partition> nodes;      // nodes[d] refined partition at depth d
  std::vector<std::uint64_t> trace;  // trace[d] of nodes[d]
  std::vector<std::vector<int>> targets;
  std::vector<int> leaf_point_of_cell;
};

FirstPath first_path(const Refiner& r) {
  FirstPath fp;
  Partition p;
  fp.trace.push_back(r.root(p));
  fp.nodes.push_back(p);
  while (!p.discrete()) {
    auto t = target_cell(p);
    Partition q = Refiner::individualize(p, t.front());
    fp.targets.push_back(std::move(t));
    fp.trace.push_back(r.refine(q));
    fp.nodes.push_back(q);
    p = std::move(q);
  }
  fp.leaf_point_of_cell.resize(p.cell.size());
  for (std::size_t v = 0; v < p.cell.size(); ++v) fp.leaf_point_of_cell[static_cast<std::size_t>(p.cell[v])] = static_cast<int>(v);
  return fp;
}

// Depth-first search below node for a leaf whose trace path matches the first
// path and whose induced map passes accept.
std::optional<Perm> search(const Refiner& r, const FirstPath& fp, const Partition& node, std::size_t depth,
                           const std::function<bool(const Perm&)>& accept) {
  if (node.discrete()) {
    if (depth + 1 != fp.nodes.size()) return std::nullopt;
    std::vector<int> img(node.cell.size());
    for (std::size_t v = 0; v < node.cell.size(); ++v) {
      img[static_cast<std::size_t>(fp.leaf_point_of_cell[static_cast<std::size_t>(node.cell[v])])] = static_cast<int>(v);
    }
    Perm g(img);
    if (accept(g)) return g;
    return std::nullopt;
  }
  if (depth + 1 >= fp.nodes.size()) return std::nullopt;
  for (int v : target_cell(node)) {
    Partition child = Refiner::individualize(node, v);
    if (r.refine(child) != fp.trace[depth + 1]) continue;
    if (auto g = search(r, fp, child, depth + 1, accept)) return g;
  }
  return std::nullopt;
}

std::vector<int> orbit_of(int n, int x, const std::vector<Perm>& gens) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> out{x};
  seen[static_cast<std::size_t>(x)] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const int y = g[out[i]];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

bool is_automorphism(int n, std::span<const int> colors, const Perm& g) {
  if (g.degree() != n) return false;
  for (int a = 0; a < n; ++a) {
    const int ga = g[a];
    for (int b = 0; b < n; ++b) {
      if (colors[static_cast<std::size_t>(a * n + b)] != colors[static_cast<std::size_t>(ga * n + g[b])]) return false;
    }
  }
  return true;
}

bool is_automorphism(const CoherentConfiguration& cc, const Perm& g) {
  return is_automorphism(cc.degree(), cc.colors(), g);
}

AutResult automorphism_group(int n, std::span<const int> colors) {
  if (colors.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InputError("color matrix has wrong size");
  }
  if (n <= 1) return {{}, PermGroup::build(std::max(n, 0), {})};
  const Refiner r(n, colors);
  const FirstPath fp = first_path(r);
  const auto accept = [&](const Perm& g) { return is_automorphism(n, colors, g); };

  std::vector<Perm> gens;
  std::vector<int> base;
  for (const auto& t : fp.targets) base.push_back(t.front());
  for (std::size_t level = fp.targets.size(); level-- > 0;) {
    const int b = base[level];
    auto orbit = orbit_of(n, b, gens);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int x : orbit) done[static_cast<std::size_t>(x)] = true;
    for (int v : fp.targets[level]) {
      if (done[static_cast<std::size_t>(v)]) continue;
      Partition child = Refiner::individualize(fp.nodes[level], v);
      std::optional<Perm> g;
      if (r.refine(child) == fp.trace[level + 1]) g = search(r, fp, child, level + 1, accept);
      if (g) {
        gens.push_back(*g);
        orbit = orbit_of(n, b, gens);
        for (int x : orbit) done[static_cast<std::size_t>(x)] = true;
      } else {
        // no automorphism reaches v, nor anything in its current orbit
        for (int x : orbit_of(n, v, gens)) done[static_cast<std::size_t>(x)] = true;
      }
    }
  }
  AutResult out{gens, PermGroup::from_bsgs(n, base, gens)};
  return out;
}

AutResult automorphism_group(const CoherentConfiguration& cc) { return automorphism_group(cc.degree(), cc.colors()); }

std::optional<Perm> find_isomorphism(int n, std::span<const int> colors1, std::span<const int> colors2,
                                     const std::function<bool(const Perm&)>& accept) {
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (colors1.size() != cells || colors2.size() != cells) throw InputError("color matrix has wrong size");
  if (n == 0) return Perm(0);
  const Refiner r1(n, colors1);
  const Refiner r2(n, colors2);
  const FirstPath fp = first_path(r1);
  Partition root;
  if (r2.root(root) != fp.trace.front()) return std::nullopt;
  const auto check = [&](const Perm& g) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (colors1[static_cast<std::size_t>(a * n + b)] != colors2[static_cast<std::size_t>(g[a] * n + g[b])]) {
          return false;
        }
      }
    }
    return !accept || accept(g);
  };
  return search(r2, fp, root, 0, check);
}

std::optional<Perm> color_isomorphism(const CoherentConfiguration& cc1, const CoherentConfiguration& cc2) {
  const int n = cc1.degree();
  if (n != cc2.degree() || cc1.rank() != cc2.rank()) return std::nullopt;
  const int rank = cc1.rank();
  const CoherentConfiguration* cc[2] = {&cc1, &cc2};

  // Color names invariant under algebraic isomorphism, computed jointly so
  // that both configurations share one name space.
  std::vector<int> name[2];
  std::vector<std::pair<int, int>> rep[2];
  for (int k = 0; k < 2; ++k) {
    name[k].assign(static_cast<std::size_t>(rank), 0);
    rep[k].assign(static_cast<std::size_t>(rank), {-1, -1});
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        auto& slot = rep[k][static_cast<std::size_t>(cc[k]->color(a, b))];
        if (slot.first < 0) slot = {a, b};
      }
    }
  }
  int names = 1;
  while (true) {
    std::map<std::vector<std::int64_t>, int> ids;
    std::vector<std::vector<std::int64_t>> keys[2];
    for (int k = 0; k < 2; ++k) {
      const auto& X = *cc[k];
      for (int c = 0; c < rank; ++c) {
        const auto [a, b] = rep[k][static_cast<std::size_t>(c)];
        std::vector<std::int64_t> key{name[k][static_cast<std::size_t>(c)],
                                      name[k][static_cast<std::size_t>(X.transpose(c))], a == b ? 1 : 0,
                                      X.valency(c)};
        std::vector<std::int64_t> pairs;
        for (int g = 0; g < n; ++g) {
          pairs.push_back(static_cast<std::int64_t>(name[k][static_cast<std::size_t>(X.color(a, g))]) * rank +
                          name[k][static_cast<std::size_t>(X.color(g, b))]);
        }
        std::sort(pairs.begin(), pairs.end());
        key.insert(key.end(), pairs.begin(), pairs.end());
        ids.emplace(key, 0);
        keys[k].push_back(std::move(key));
      }
    }
    int id = 0;
    for (auto& [key, v] : ids) v = id++;
    for (int k = 0; k < 2; ++k) {
      for (int c = 0; c < rank; ++c) name[k][static_cast<std::size_t>(c)] = ids[keys[k][static_cast<std::size_t>(c)]];
    }
    if (id == names) break;
    names = id;
  }
  std::vector<int> n1 = name[0], n2 = name[1];
  std::sort(n1.begin(), n1.end());
  std::sort(n2.begin(), n2.end());
  if (n1 != n2) return std::nullopt;

  std::vector<int> m1(cc1.colors().size()), m2(cc2.colors().size());
  for (std::size_t i = 0; i < m1.size(); ++i) {
    m1[i] = name[0][static_cast<std::size_t>(cc1.colors()[i])];
    m2[i] = name[1][static_cast<std::size_t>(cc2.colors()[i])];
  }
  const auto consistent = [&](const Perm& g) {
    std::vector<int> fwd(static_cast<std::size_t>(rank), -1), back(static_cast<std::size_t>(rank), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int c1 = cc1.color(a, b), c2 = cc2.color(g[a], g[b]);
        auto& f = fwd[static_cast<std::size_t>(c1)];
        auto& k = back[static_cast<std::size_t>(c2)];
        if ((f >= 0 && f != c2) || (k >= 0 && k != c1)) return false;
        f = c2;
        k = c1;
      }
    }
    return true;
  };
  return find_isomorphism(n, m1, m2, consistent);
}

}  // namespace cayley4p
