#include "cayley4p/structure.hpp"

#include <algorithm>
#include <numeric>

#include "cayley4p/errors.hpp"

namespace cayley4p {

std::optional<QuasitrivialDecomposition> is_quasitrivial(const CoherentConfiguration& cc) {
  const auto& fibers = cc.fibers();
  const int m = static_cast<int>(fibers.size());
  const auto um = static_cast<std::size_t>(m);

  // colors of S_{D,L} for each fiber pair
  std::vector<std::vector<int>> between(um * um);
  for (int c = 0; c < cc.rank(); ++c) {
    const auto [d, l] = cc.fibers_of_color(c);
    between[static_cast<std::size_t>(d) * um + static_cast<std::size_t>(l)].push_back(c);
  }
  const auto bijection = [&](int c) { return cc.valency(c) == 1 && cc.valency(cc.transpose(c)) == 1; };

  std::vector<int> parent(um);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<int> link(um * um, -1);  // the bijection color of S_{D,L} when D ~ L
  for (int d = 0; d < m; ++d) {
    for (int l = 0; l < m; ++l) {
      const auto& s = between[static_cast<std::size_t>(d) * um + static_cast<std::size_t>(l)];
      if (s.size() == 1) continue;
      if (s.size() != 2) return std::nullopt;
      const int c = bijection(s[0]) ? s[0] : (bijection(s[1]) ? s[1] : -1);
      if (c < 0) return std::nullopt;
      link[static_cast<std::size_t>(d) * um + static_cast<std::size_t>(l)] = c;
      const int x = find(d), y = find(l);
      if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    }
  }

  QuasitrivialDecomposition dec;
  dec.degree = cc.degree();
  dec.fibers = fibers;
  std::vector<int> class_of_root(um, -1);
  for (int d = 0; d < m; ++d) {
    const int r = find(d);
    if (class_of_root[static_cast<std::size_t>(r)] < 0) {
      class_of_root[static_cast<std::size_t>(r)] = static_cast<int>(dec.classes.size());
      dec.classes.emplace_back();
    }
    dec.classes[static_cast<std::size_t>(class_of_root[static_cast<std::size_t>(r)])].push_back(d);
  }
  for (const auto& cls : dec.classes) {
    const auto& rep = fibers[static_cast<std::size_t>(cls.front())];
    std::vector<std::vector<int>> maps;
    for (int d : cls) {
      if (d == cls.front()) {
        maps.push_back(rep);
        continue;
      }
      const int c = link[static_cast<std::size_t>(cls.front()) * um + static_cast<std::size_t>(d)];
      if (c < 0) return std::nullopt;  // ~ failed to be transitive
      std::vector<int> img;
      for (int x : rep) {
        for (int y : fibers[static_cast<std::size_t>(d)]) {
          if (cc.color(x, y) == c) {
            img.push_back(y);
            break;
          }
        }
      }
      maps.push_back(std::move(img));
    }
    dec.maps.push_back(std::move(maps));
  }
  return dec;
}

BigInt quasitrivial_aut_order(const QuasitrivialDecomposition& dec) {
  BigInt out = 1;
  for (const auto& cls : dec.classes) {
    const auto k = dec.fibers[static_cast<std::size_t>(cls.front())].size();
    for (std::size_t i = 2; i <= k; ++i) out *= static_cast<unsigned>(i);
  }
  return out;
}

Perm quasitrivial_semiregular_p(const QuasitrivialDecomposition& dec, int p) {
  std::vector<int> img(static_cast<std::size_t>(dec.degree));
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i < dec.classes.size(); ++i) {
    const auto& rep = dec.fibers[static_cast<std::size_t>(dec.classes[i].front())];
    const int k = static_cast<int>(rep.size());
    if (p <= 1 || k % p != 0) throw InputError("fiber size is not divisible by p");
    // g on the representative, as local indices
    std::vector<int> g(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) g[static_cast<std::size_t>(x)] = (x % p == p - 1) ? x - (p - 1) : x + 1;
    // f^-1 g f sends f(x) to f(g(x))
    for (const auto& f : dec.maps[i]) {
      for (int x = 0; x < k; ++x) {
        img[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] =
            f[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])];
      }
    }
  }
  return Perm(img);
}

std::optional<PrincipalEquivalence> principal_equivalence(const CoherentConfiguration& cc) {
  const int n = cc.degree();
  if (!cc.is_homogeneous()) throw InputError("principal equivalence needs a homogeneous configuration");
  if (n % 4 != 0 || !is_prime(n / 4) || n / 4 < 5) throw InputError("degree must be 4p with p >= 5 prime");
  const int p = n / 4;

  const auto all = all_equivalences(cc);
  std::vector<const EquivRel*> nontrivial;
  for (const auto& E : all) {
    if (!E.is_identity()) nontrivial.push_back(&E);
  }
  const auto minimal_in = [](const std::vector<const EquivRel*>& pool) {
    std::vector<const EquivRel*> out;
    for (const auto* E : pool) {
      const bool minimal = std::none_of(pool.begin(), pool.end(), [&](const EquivRel* F) {
        return F != E && F->color_set != E->color_set && is_contained(*F, *E);
      });
      if (minimal) out.push_back(E);
    }
    std::sort(out.begin(), out.end(), [](const EquivRel* a, const EquivRel* b) { return a->color_set < b->color_set; });
    return out;
  };

  const EquivRel* chosen = nullptr;
  for (const auto* E : minimal_in(nontrivial)) {
    if (E->class_size() >= p) {
      chosen = E;
      break;
    }
  }
  std::vector<const EquivRel*> large;
  for (const auto* E : nontrivial) {
    if (E->class_size() >= p) large.push_back(E);
  }
  const auto alt = minimal_in(large);
  const EquivRel* alternative = alt.empty() ? nullptr : alt.front();

  if (chosen != nullptr) {
    PrincipalEquivalence out;
    out.E = *chosen;
    out.kind = PrincipalEquivalence::Kind::E1;
    out.readings_disagree = alternative == nullptr || alternative->color_set != chosen->color_set;
    return out;
  }

  std::vector<const EquivRel*> small;
  for (const auto* E : nontrivial) {
    const int k = E->class_size();
    if (k >= 2 && k <= 4) small.push_back(E);
  }
  std::sort(small.begin(), small.end(), [](const EquivRel* a, const EquivRel* b) { return a->color_set < b->color_set; });
  for (const auto* E : small) {
    PrincipalEquivalence out;
    out.E = *E;
    out.kind = PrincipalEquivalence::Kind::E2;
    out.readings_disagree = alternative != nullptr;
    if (auto F = tensor_complement(cc, *E)) {
      out.complement = std::move(F);
      out.complement_kind = PrincipalEquivalence::ComplementKind::tensor;
      return out;
    }
    if (auto F = gw_complement(cc, *E)) {
      out.complement = std::move(F);
      out.complement_kind = PrincipalEquivalence::ComplementKind::wreath;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace cayley4p
