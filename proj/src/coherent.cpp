#include "cayley4p/coherent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cayley4p/errors.hpp"

namespace cayley4p {

namespace {

std::size_t cell(int n, int a, int b) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer folded into a running hash
  v += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (v ^ (v >> 31));
}

// Relabels values by first occurrence; returns the number of distinct values.
int renumber_in_place(std::vector<int>& labels) {
  std::unordered_map<int, int> ids;
  for (auto& x : labels) {
    auto [it, inserted] = ids.try_emplace(x, static_cast<int>(ids.size()));
    x = it->second;
  }
  return static_cast<int>(ids.size());
}

void split_by_relation(int n, std::vector<int>& labels, const Relation& rel) {
  std::vector<std::uint8_t> member(labels.size(), 0);
  for (const auto& [a, b] : rel) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("relation pair out of range");
    member[cell(n, a, b)] = 1;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = labels[i] * 2 + member[i];
  renumber_in_place(labels);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> classes() {
    const int n = static_cast<int>(parent.size());
    std::vector<std::vector<int>> out;
    std::vector<int> slot(parent.size(), -1);
    for (int x = 0; x < n; ++x) {
      const int r = find(x);
      if (slot[static_cast<std::size_t>(r)] < 0) {
        slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x);
    }
    return out;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// CoherentConfiguration

CoherentConfiguration CoherentConfiguration::from_coloring(int n, std::span<const int> colors) {
  if (n < 0 || n > kMaxDegree) throw InputError("degree out of range");
  if (colors.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InputError("color matrix has wrong size");
  }
  CoherentConfiguration cc;
  cc.n_ = n;
  cc.colors_.assign(colors.begin(), colors.end());
  cc.rank_ = renumber_in_place(cc.colors_);
  const auto r = static_cast<std::size_t>(cc.rank_);

  cc.transpose_.assign(r, -1);
  cc.diagonal_.assign(r, false);
  cc.color_fibers_.assign(r, {-1, -1});
  cc.valency_.assign(r, 0);
  std::vector<int> first_row(r, -1);

  // fibers from diagonal colors, ordered by first point
  cc.fiber_of_point_.assign(static_cast<std::size_t>(n), -1);
  std::unordered_map<int, int> fiber_of_diag;
  for (int a = 0; a < n; ++a) {
    const int c = cc.color(a, a);
    auto [it, inserted] = fiber_of_diag.try_emplace(c, static_cast<int>(cc.fibers_.size()));
    if (inserted) {
      cc.fibers_.emplace_back();
      cc.diagonal_colors_.push_back(c);
    }
    cc.fibers_[static_cast<std::size_t>(it->second)].push_back(a);
    cc.fiber_of_point_[static_cast<std::size_t>(a)] = it->second;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto c = static_cast<std::size_t>(cc.color(a, b));
      if (first_row[c] < 0) {
        first_row[c] = a;
        cc.transpose_[c] = cc.color(b, a);
        cc.diagonal_[c] = a == b;
        cc.color_fibers_[c] = {cc.fiber_of_point_[static_cast<std::size_t>(a)],
                               cc.fiber_of_point_[static_cast<std::size_t>(b)]};
      }
      if (first_row[c] == a) ++cc.valency_[c];
    }
  }
  return cc;
}

Relation CoherentConfiguration::relation(int c) const {
  Relation out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (color(a, b) == c) out.emplace_back(a, b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// EquivRel

int EquivRel::class_size() const {
  if (classes.empty()) return 0;
  const auto s = classes.front().size();
  for (const auto& c : classes) {
    if (c.size() != s) return 0;
  }
  return static_cast<int>(s);
}

std::size_t EquivRel::pair_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size() * c.size();
  return total;
}

bool EquivRel::is_identity() const { return classes.size() == class_of.size(); }
bool EquivRel::is_total() const { return classes.size() == 1; }

bool is_contained(const EquivRel& E, const EquivRel& F) {
  return std::includes(F.color_set.begin(), F.color_set.end(), E.color_set.begin(), E.color_set.end());
}

EquivRel equivalence_from_classes(const CoherentConfiguration& cc, std::vector<std::vector<int>> classes) {
  const int n = cc.degree();
  EquivRel E;
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  E.class_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (int x : classes[i]) E.class_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  E.classes = std::move(classes);
  std::vector<bool> inside(static_cast<std::size_t>(cc.rank()), false);
  for (const auto& c : E.classes) {
    for (int a : c) {
      for (int b : c) inside[static_cast<std::size_t>(cc.color(a, b))] = true;
    }
  }
  std::size_t cells = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) cells += inside[static_cast<std::size_t>(cc.color(a, b))] ? 1 : 0;
  }
  if (cells != E.pair_count()) throw InternalError("equivalence closure is not a union of basis relations");
  for (int c = 0; c < cc.rank(); ++c) {
    if (inside[static_cast<std::size_t>(c)]) E.color_set.push_back(c);
  }
  return E;
}

// ---------------------------------------------------------------------------
// WL refinement

std::vector<int> wl_round(int n, std::span<const int> colors, int rank, Execution exec) {
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const auto un = static_cast<std::size_t>(n);
  const auto R = static_cast<std::uint64_t>(rank);
  std::vector<std::uint64_t> sig(cells * un);
  std::vector<std::uint64_t> hash(cells);

  auto row = [&](int a) {
    for (int b = 0; b < n; ++b) {
      const std::size_t k = cell(n, a, b);
      std::uint64_t* s = sig.data() + k * un;
      for (int g = 0; g < n; ++g) {
        s[g] = static_cast<std::uint64_t>(colors[cell(n, a, g)]) * R + static_cast<std::uint64_t>(colors[cell(n, g, b)]);
      }
      std::sort(s, s + n);
      std::uint64_t h = mix(0, static_cast<std::uint64_t>(colors[k]));
      for (int g = 0; g < n; ++g) h = mix(h, s[g]);
      hash[k] = h;
    }
  };

  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int a = 0; a < n; ++a) row(a);
  } else {
    for (int a = 0; a < n; ++a) row(a);
  }

  // Group equal (color, signature) cells; hash buckets are rechecked on the
  // full signature so a collision can never merge distinct cells.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<int> out(cells);
  std::vector<int> id_of_rep(cells, -1);
  int next = 0;
  for (std::size_t k = 0; k < cells; ++k) {
    auto& reps = buckets[hash[k]];
    int id = -1;
    for (std::size_t rep : reps) {
      if (colors[rep] == colors[k] &&
          std::equal(sig.begin() + static_cast<std::ptrdiff_t>(rep * un),
                     sig.begin() + static_cast<std::ptrdiff_t>((rep + 1) * un),
                     sig.begin() + static_cast<std::ptrdiff_t>(k * un))) {
        id = id_of_rep[rep];
        break;
      }
    }
    if (id < 0) {
      id = next++;
      reps.push_back(k);
      id_of_rep[k] = id;
    }
    out[k] = id;
  }
  return out;
}

CoherentConfiguration stabilize(int n, std::span<const int> initial, Execution exec) {
  if (n < 0 || n > kMaxDegree) throw InputError("degree out of range");
  if (initial.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InputError("initial coloring has wrong size");
  }
  std::map<std::tuple<bool, int, int>, int> ids;
  std::vector<int> colors(initial.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto key = std::make_tuple(a == b, initial[cell(n, a, b)], initial[cell(n, b, a)]);
      auto [it, inserted] = ids.try_emplace(key, static_cast<int>(ids.size()));
      colors[cell(n, a, b)] = it->second;
    }
  }
  int rank = renumber_in_place(colors);
  while (true) {
    auto next = wl_round(n, colors, rank, exec);
    const int next_rank = next.empty() ? 0 : *std::max_element(next.begin(), next.end()) + 1;
    colors = std::move(next);
    if (next_rank == rank) break;
    rank = next_rank;
  }
  return CoherentConfiguration::from_coloring(n, colors);
}

CoherentConfiguration wl_closure(int n, std::span<const Relation> seeds, Execution exec) {
  std::vector<int> labels(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& rel : seeds) split_by_relation(n, labels, rel);
  return stabilize(n, labels, exec);
}

CoherentConfiguration refine(const CoherentConfiguration& cc, std::span<const Relation> extra, Execution exec) {
  if (extra.empty()) return cc;
  std::vector<int> labels(cc.colors().begin(), cc.colors().end());
  for (const auto& rel : extra) split_by_relation(cc.degree(), labels, rel);
  return stabilize(cc.degree(), labels, exec);
}

std::optional<std::string> coherence_violation(const CoherentConfiguration& cc) {
  const int n = cc.degree();
  const int r = cc.rank();
  const auto ur = static_cast<std::size_t>(r);
  std::vector<int> seen_diag(ur, -1);  // -1 unseen, 0 off-diagonal, 1 diagonal
  std::vector<int> transpose(ur, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto c = static_cast<std::size_t>(cc.color(a, b));
      if (c >= ur) return "color index out of range";
      const int d = a == b ? 1 : 0;
      if (seen_diag[c] >= 0 && seen_diag[c] != d) return "color meets the diagonal partially";
      seen_diag[c] = d;
      const int t = cc.color(b, a);
      if (transpose[c] >= 0 && transpose[c] != t) return "coloring is not closed under transpose";
      transpose[c] = t;
    }
  }
  if (std::find(seen_diag.begin(), seen_diag.end(), -1) != seen_diag.end()) return "unused color";

  // fibers: points sharing a diagonal color
  std::vector<int> fiber(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) fiber[static_cast<std::size_t>(a)] = cc.color(a, a);
  std::vector<std::pair<int, int>> ends(ur, {-1, -1});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto c = static_cast<std::size_t>(cc.color(a, b));
      const std::pair<int, int> fb{fiber[static_cast<std::size_t>(a)], fiber[static_cast<std::size_t>(b)]};
      if (ends[c].first >= 0 && ends[c] != fb) return "color is not contained in a single fiber product";
      ends[c] = fb;
    }
  }

  // valency constant over the source fiber
  std::vector<int> valency(ur, -1);
  std::vector<int> row_count(ur);
  for (int a = 0; a < n; ++a) {
    std::fill(row_count.begin(), row_count.end(), 0);
    for (int b = 0; b < n; ++b) ++row_count[static_cast<std::size_t>(cc.color(a, b))];
    for (std::size_t c = 0; c < ur; ++c) {
      if (ends[c].first != fiber[static_cast<std::size_t>(a)]) continue;
      if (valency[c] >= 0 && valency[c] != row_count[c]) return "valency is not constant";
      valency[c] = row_count[c];
    }
  }

  // intersection numbers: the multiset of (color(a,g), color(g,b)) over g
  // must depend only on color(a,b)
  std::vector<std::vector<std::uint64_t>> reference(ur);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n; ++g) {
        counts[static_cast<std::size_t>(g)] =
            static_cast<std::uint64_t>(cc.color(a, g)) * ur + static_cast<std::uint64_t>(cc.color(g, b));
      }
      std::sort(counts.begin(), counts.end());
      auto& ref = reference[static_cast<std::size_t>(cc.color(a, b))];
      if (ref.empty()) {
        ref = counts;
      } else if (ref != counts) {
        return "intersection numbers depend on the chosen pair";
      }
    }
  }
  return std::nullopt;
}

bool intersection_numbers_check(const CoherentConfiguration& cc) { return !coherence_violation(cc).has_value(); }

bool is_refinement_of(const CoherentConfiguration& fine, const CoherentConfiguration& coarse) {
  if (fine.degree() != coarse.degree()) return false;
  std::vector<int> image(static_cast<std::size_t>(fine.rank()), -1);
  const auto fc = fine.colors();
  const auto cc = coarse.colors();
  for (std::size_t k = 0; k < fc.size(); ++k) {
    auto& slot = image[static_cast<std::size_t>(fc[k])];
    if (slot >= 0 && slot != cc[k]) return false;
    slot = cc[k];
  }
  return true;
}

// ---------------------------------------------------------------------------
// Equivalences

EquivRel equivalence_closure(const CoherentConfiguration& cc, int c) {
  UnionFind uf(cc.degree());
  for (const auto& [a, b] : cc.relation(c)) uf.unite(a, b);
  return equivalence_from_classes(cc, uf.classes());
}

namespace {

EquivRel join(const CoherentConfiguration& cc, const EquivRel& A, const EquivRel& B) {
  UnionFind uf(cc.degree());
  for (const auto* E : {&A, &B}) {
    for (const auto& c : E->classes) {
      for (int x : c) uf.unite(c.front(), x);
    }
  }
  return equivalence_from_classes(cc, uf.classes());
}

bool canonical_less(const EquivRel& a, const EquivRel& b) {
  const auto pa = a.pair_count(), pb = b.pair_count();
  if (pa != pb) return pa < pb;
  return a.color_set < b.color_set;
}

}  // namespace

std::vector<EquivRel> all_equivalences(const CoherentConfiguration& cc) {
  std::vector<EquivRel> list;
  std::set<std::vector<int>> keys;
  auto add = [&](EquivRel E) {
    if (keys.insert(E.color_set).second) {
      if (list.size() >= kEquivalenceCap) throw CapacityError("more than 4096 equivalence relations");
      list.push_back(std::move(E));
    }
  };
  std::vector<std::vector<int>> singletons;
  for (int a = 0; a < cc.degree(); ++a) singletons.push_back({a});
  add(equivalence_from_classes(cc, singletons));
  for (int c = 0; c < cc.rank(); ++c) add(equivalence_closure(cc, c));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (is_contained(list[i], list[j]) || is_contained(list[j], list[i])) continue;
      EquivRel J = join(cc, list[i], list[j]);
      add(std::move(J));
    }
  }
  std::sort(list.begin(), list.end(), canonical_less);
  return list;
}

// ---------------------------------------------------------------------------
// Constructions

SubConfiguration restriction(const CoherentConfiguration& cc, std::vector<int> points) {
  const int n = cc.degree();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw InputError("restriction to an empty set");
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int x : points) {
    if (x < 0 || x >= n) throw InputError("restriction point out of range");
    in[static_cast<std::size_t>(x)] = true;
  }
  bool union_of_fibers = true;
  for (const auto& f : cc.fibers()) {
    const auto inside = std::count_if(f.begin(), f.end(), [&](int x) { return in[static_cast<std::size_t>(x)]; });
    if (inside != 0 && static_cast<std::size_t>(inside) != f.size()) union_of_fibers = false;
  }
  if (!union_of_fibers) {
    bool is_class = false;
    for (const auto& E : all_equivalences(cc)) {
      const auto& cls = E.classes[static_cast<std::size_t>(E.class_of[static_cast<std::size_t>(points.front())])];
      if (cls == points) {
        is_class = true;
        break;
      }
    }
    if (!is_class) throw InputError("restriction domain is neither a union of fibers nor an equivalence class");
  }
  const int m = static_cast<int>(points.size());
  std::vector<int> colors(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      colors[cell(m, i, j)] = cc.color(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
    }
  }
  return {CoherentConfiguration::from_coloring(m, colors), std::move(points)};
}

QuotientConfiguration quotient(const CoherentConfiguration& cc, const EquivRel& E) {
  if (!cc.is_homogeneous()) throw InputError("quotient needs a homogeneous configuration");
  if (E.class_of.size() != static_cast<std::size_t>(cc.degree())) throw InputError("equivalence has wrong degree");
  const int m = static_cast<int>(E.classes.size());
  std::map<std::vector<int>, int> ids;
  std::vector<int> colors(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  std::vector<int> present;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      present.clear();
      for (int a : E.classes[static_cast<std::size_t>(i)]) {
        for (int b : E.classes[static_cast<std::size_t>(j)]) present.push_back(cc.color(a, b));
      }
      std::sort(present.begin(), present.end());
      present.erase(std::unique(present.begin(), present.end()), present.end());
      auto [it, inserted] = ids.try_emplace(present, static_cast<int>(ids.size()));
      colors[cell(m, i, j)] = it->second;
    }
  }
  return {CoherentConfiguration::from_coloring(m, colors), E.classes, E.class_of};
}

CoherentConfiguration extension_fixing_classes(const CoherentConfiguration& cc, const EquivRel& E) {
  std::vector<Relation> extra;
  for (const auto& cls : E.classes) {
    Relation diag;
    for (int x : cls) diag.emplace_back(x, x);
    extra.push_back(std::move(diag));
  }
  return refine(cc, extra);
}

CoherentConfiguration extension_by_quotient_cycle(const CoherentConfiguration& cc, const EquivRel& E, const Perm& c) {
  if (c.degree() != static_cast<int>(E.classes.size())) {
    throw InputError("class permutation degree does not match the number of classes");
  }
  Relation s;
  for (std::size_t i = 0; i < E.classes.size(); ++i) {
    for (int a : E.classes[i]) {
      for (int b : E.classes[static_cast<std::size_t>(c[static_cast<int>(i)])]) s.emplace_back(a, b);
    }
  }
  const std::vector<Relation> extra{std::move(s)};
  return refine(cc, extra);
}

CoherentConfiguration direct_sum(const CoherentConfiguration& a, const CoherentConfiguration& b) {
  const int na = a.degree(), nb = b.degree(), n = na + nb;
  const int ra = a.rank(), rb = b.rank();
  const int fa = static_cast<int>(a.fibers().size()), fb = static_cast<int>(b.fibers().size());
  std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int c;
      if (x < na && y < na) {
        c = a.color(x, y);
      } else if (x >= na && y >= na) {
        c = ra + b.color(x - na, y - na);
      } else if (x < na) {
        c = ra + rb + a.fiber_of_point(x) * fb + b.fiber_of_point(y - na);
      } else {
        c = ra + rb + fa * fb + b.fiber_of_point(x - na) * fa + a.fiber_of_point(y);
      }
      colors[cell(n, x, y)] = c;
    }
  }
  return CoherentConfiguration::from_coloring(n, colors);
}

CoherentConfiguration tensor_product(const CoherentConfiguration& a, const CoherentConfiguration& b) {
  const int na = a.degree(), nb = b.degree(), n = na * nb;
  if (n > kMaxDegree) throw InputError("tensor product degree out of range");
  std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      colors[cell(n, x, y)] = a.color(x / nb, y / nb) * b.rank() + b.color(x % nb, y % nb);
    }
  }
  return CoherentConfiguration::from_coloring(n, colors);
}

bool is_generalized_wreath(const CoherentConfiguration& cc, const EquivRel& E, const EquivRel& F) {
  if (!cc.is_homogeneous()) throw InputError("generalized wreath test needs a homogeneous configuration");
  if (!is_contained(E, F)) return false;
  std::vector<bool> in_F(static_cast<std::size_t>(cc.rank()), false);
  for (int c : F.color_set) in_F[static_cast<std::size_t>(c)] = true;
  // A color outside F must fill every E-block it meets.
  for (const auto& X : E.classes) {
    for (const auto& Y : E.classes) {
      const int first = cc.color(X.front(), Y.front());
      bool outside_F = false, mono = true;
      for (int a : X) {
        for (int b : Y) {
          const int c = cc.color(a, b);
          outside_F = outside_F || !in_F[static_cast<std::size_t>(c)];
          mono = mono && c == first;
        }
      }
      if (outside_F && !mono) return false;
    }
  }
  return true;
}

bool is_trivial_wreath(const EquivRel& E, const EquivRel& F) { return E.is_identity() || F.is_total(); }

std::optional<EquivRel> tensor_complement(const CoherentConfiguration& cc, const EquivRel& E) {
  if (!cc.is_homogeneous()) return std::nullopt;
  const int n = cc.degree();
  const auto QE = quotient(cc, E);
  for (const auto& F : all_equivalences(cc)) {
    std::vector<int> common;
    std::set_intersection(E.color_set.begin(), E.color_set.end(), F.color_set.begin(), F.color_set.end(),
                          std::back_inserter(common));
    if (common != cc.diagonal_colors()) continue;
    if (E.classes.size() * F.classes.size() != static_cast<std::size_t>(n)) continue;
    const auto QF = quotient(cc, F);
    const int rE = QE.config.rank(), rF = QF.config.rank();
    std::vector<int> pair_of_color(static_cast<std::size_t>(cc.rank()), -1);
    std::vector<int> color_of_pair(static_cast<std::size_t>(rE) * static_cast<std::size_t>(rF), -1);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        const int pe = QE.config.color(E.class_of[static_cast<std::size_t>(a)], E.class_of[static_cast<std::size_t>(b)]);
        const int pf = QF.config.color(F.class_of[static_cast<std::size_t>(a)], F.class_of[static_cast<std::size_t>(b)]);
        const int pair = pe * rF + pf;
        const int c = cc.color(a, b);
        auto& pc = pair_of_color[static_cast<std::size_t>(c)];
        auto& cp = color_of_pair[static_cast<std::size_t>(pair)];
        if ((pc >= 0 && pc != pair) || (cp >= 0 && cp != c)) ok = false;
        pc = pair;
        cp = c;
      }
    }
    if (!ok) continue;
    if (std::find(color_of_pair.begin(), color_of_pair.end(), -1) != color_of_pair.end()) continue;
    return F;
  }
  return std::nullopt;
}

std::optional<EquivRel> gw_complement(const CoherentConfiguration& cc, const EquivRel& E) {
  if (!cc.is_homogeneous()) return std::nullopt;
  if (E.is_identity()) return std::nullopt;
  for (const auto& F : all_equivalences(cc)) {
    if (F.is_total() || !is_contained(E, F)) continue;
    if (is_generalized_wreath(cc, E, F)) return F;
  }
  return std::nullopt;
}

CoherentConfiguration trivial_configuration(int n) {
  std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1);
  for (int a = 0; a < n; ++a) colors[cell(n, a, a)] = 0;
  return CoherentConfiguration::from_coloring(n, colors);
}

CoherentConfiguration complete_configuration(int n) {
  std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::iota(colors.begin(), colors.end(), 0);
  return CoherentConfiguration::from_coloring(n, colors);
}

}  // namespace cayley4p
