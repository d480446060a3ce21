#include "cayley4p/cyclebase.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/errors.hpp"

namespace cayley4p {

bool is_full_cycle(const Perm& g) {
  const int n = g.degree();
  if (n <= 1) return true;
  int x = 0, len = 0;
  do {
    x = g[x];
    ++len;
  } while (x != 0);
  return len == n;
}

namespace {

Perm point_order_cycle(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = (x + 1) % n;
  return Perm(img);
}

std::vector<Perm> enumerate_base(const PermGroup& aut) {
  std::vector<Perm> full;
  aut.for_each_element([&](const Perm& g) {
    if (is_full_cycle(g)) full.push_back(g);
    return true;
  });
  std::sort(full.begin(), full.end());
  std::unordered_set<Perm, PermHash> covered;
  std::vector<Perm> base;
  for (const auto& c : full) {
    if (covered.count(c) != 0) continue;
    base.push_back(c);
    aut.for_each_element([&](const Perm& k) {
      covered.insert(k.inverse() * c * k);
      return true;
    });
  }
  return base;
}

// Quotient classes identified with the class of point 0 by color-preserving
// bijections; nothing if some class is not isomorphic to the first.
std::optional<std::vector<std::vector<int>>> identify_classes(const CoherentConfiguration& cc, const EquivRel& E) {
  const auto& first = E.classes.front();
  const int k = static_cast<int>(first.size());
  const auto block = [&](const std::vector<int>& cls) {
    std::vector<int> m(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i * k + j)] = cc.color(cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)]);
    }
    return m;
  };
  const auto m0 = block(first);
  std::vector<std::vector<int>> iota;
  for (const auto& cls : E.classes) {
    auto g = find_isomorphism(k, m0, block(cls));
    if (!g) return std::nullopt;
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int y = 0; y < k; ++y) img[static_cast<std::size_t>(y)] = cls[static_cast<std::size_t>((*g)[y])];
    iota.push_back(std::move(img));
  }
  return iota;
}

std::optional<std::vector<Perm>> tensor_base(const CoherentConfiguration& cc) {
  for (const auto& E : all_equivalences(cc)) {
    if (E.is_identity() || E.is_total()) continue;
    auto F = tensor_complement(cc, E);
    if (!F) continue;
    const auto QE = quotient(cc, E);
    const auto QF = quotient(cc, *F);
    const int a = QE.config.degree(), b = QF.config.degree();
    if (std::gcd(a, b) != 1) return std::vector<Perm>{};
    const auto base_e = cycle_base(QE.config);
    const auto base_f = cycle_base(QF.config);
    std::vector<int> point(static_cast<std::size_t>(a) * static_cast<std::size_t>(b), -1);
    for (int x = 0; x < cc.degree(); ++x) {
      point[static_cast<std::size_t>(E.class_of[static_cast<std::size_t>(x)] * b + F->class_of[static_cast<std::size_t>(x)])] = x;
    }
    std::vector<Perm> out;
    for (const auto& ce : base_e) {
      for (const auto& cf : base_f) {
        std::vector<int> img(static_cast<std::size_t>(cc.degree()));
        for (int x = 0; x < cc.degree(); ++x) {
          const int i = E.class_of[static_cast<std::size_t>(x)], j = F->class_of[static_cast<std::size_t>(x)];
          img[static_cast<std::size_t>(x)] = point[static_cast<std::size_t>(ce[i] * b + cf[j])];
        }
        out.emplace_back(img);
      }
    }
    return out;
  }
  return std::nullopt;
}

std::optional<std::vector<Perm>> wreath_base(const CoherentConfiguration& cc) {
  for (const auto& E : all_equivalences(cc)) {
    if (E.is_identity() || E.is_total() || !is_generalized_wreath(cc, E, E)) continue;
    const auto iota = identify_classes(cc, E);
    if (!iota) return std::vector<Perm>{};
    const auto inner = restriction(cc, E.classes.front());
    const auto outer = quotient(cc, E);
    const auto base_in = cycle_base(inner.config);
    const auto base_out = cycle_base(outer.config);
    const int k = static_cast<int>(E.classes.front().size());
    // local index of each point inside its class under the identification
    std::vector<int> local(static_cast<std::size_t>(cc.degree()));
    for (const auto& map : *iota) {
      for (int y = 0; y < k; ++y) local[static_cast<std::size_t>(map[static_cast<std::size_t>(y)])] = y;
    }
    std::vector<Perm> out;
    for (const auto& a : base_in) {
      for (const auto& b : base_out) {
        std::vector<int> img(static_cast<std::size_t>(cc.degree()));
        for (int x = 0; x < cc.degree(); ++x) {
          const int i = E.class_of[static_cast<std::size_t>(x)];
          int y = local[static_cast<std::size_t>(x)];
          if (i == 0) y = a[y];
          img[static_cast<std::size_t>(x)] = (*iota)[static_cast<std::size_t>(b[i])][static_cast<std::size_t>(y)];
        }
        out.emplace_back(img);
      }
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Perm> cycle_base(const CoherentConfiguration& cc) {
  if (!cc.is_homogeneous()) throw InputError("cycle base needs a homogeneous configuration");
  const int n = cc.degree();
  if (n <= 1) return {Perm(n)};
  if (cc.rank() <= 2) return {point_order_cycle(n)};
  const auto aut = automorphism_group(cc);
  const auto orb = orbits(n, aut.generators);
  if (orb.size() != 1) return {};
  if (aut.group.order() <= kCycleBaseEnumerationLimit) return enumerate_base(aut.group);
  if (auto t = tensor_base(cc)) return *t;
  if (auto w = wreath_base(cc)) return *w;
  throw CapacityError("automorphism group too large for the cycle base and no decomposition applies");
}

}  // namespace cayley4p
