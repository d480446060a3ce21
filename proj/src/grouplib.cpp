#include "cayley4p/grouplib.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cayley4p/errors.hpp"

namespace cayley4p {

E4Cp::E4Cp(int p) : p_(p) {
  if (!is_prime(p) || 4 * p > kMaxDegree) throw InputError("p must be a prime with 4p <= 255");
}

GElem E4Cp::pow(GElem a, long long k) const {
  const long long z = ((a.z * (k % p_)) % p_ + p_) % p_;
  return {(k % 2 != 0) ? a.u : 0, static_cast<int>(z)};
}

int E4Cp::element_order(GElem a) const {
  const int o2 = a.u != 0 ? 2 : 1;
  const int op = a.z != 0 ? p_ : 1;
  return o2 == op ? o2 : o2 * op;
}

std::string to_string(GElem g) {
  std::string s;
  s += static_cast<char>('0' + ((g.u >> 1) & 1));
  s += static_cast<char>('0' + (g.u & 1));
  s += '.';
  s += std::to_string(g.z);
  return s;
}

GElem parse_gelem(const std::string& text, int p) {
  if (text.size() < 4 || text[2] != '.' || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1')) {
    throw InputError("bad group element '" + text + "'");
  }
  const std::string zs = text.substr(3);
  if (zs.empty() || !std::all_of(zs.begin(), zs.end(), [](char c) { return c >= '0' && c <= '9'; }) || zs.size() > 6) {
    throw InputError("bad group element '" + text + "'");
  }
  const int z = std::stoi(zs);
  if (z >= p) throw InputError("residue out of range in '" + text + "'");
  return {(text[0] - '0') * 2 + (text[1] - '0'), z};
}

ConnectionSet::ConnectionSet(int p, std::vector<GElem> elements) : p_(p) {
  const E4Cp G(p);
  for (const auto& g : elements) {
    if (!G.contains(g)) throw InputError("connection set element out of range");
    if (g == G.identity()) throw InputError("connection set contains the identity");
  }
  std::sort(elements.begin(), elements.end(), [&](GElem a, GElem b) { return G.index(a) < G.index(b); });
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw InputError("connection set has a repeated element");
  }
  elements_ = std::move(elements);
}

bool ConnectionSet::contains(GElem g) const { return std::find(elements_.begin(), elements_.end(), g) != elements_.end(); }

bool ConnectionSet::is_symmetric() const {
  const E4Cp G(p_);
  return std::all_of(elements_.begin(), elements_.end(), [&](GElem g) { return contains(G.inv(g)); });
}

std::vector<int> ConnectionSet::indices() const {
  std::vector<int> out;
  for (const auto& g : elements_) out.push_back(g.z + p_ * g.u);
  return out;
}

ConnectionSet parse_connection_set(const std::string& spec, int p) {
  std::vector<GElem> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    out.push_back(parse_gelem(item, p));
  }
  return ConnectionSet(p, std::move(out));
}

std::string format_connection_set(const ConnectionSet& s) {
  std::string out;
  for (const auto& g : s.elements()) {
    if (!out.empty()) out += ',';
    out += to_string(g);
  }
  return out;
}

GElem GroupAutomorphism::apply(GElem g) const {
  const int u = ((g.u & 1) ? image_u0 : 0) ^ ((g.u & 2) ? image_u1 : 0);
  return {u, static_cast<int>((static_cast<long long>(g.z) * unit) % p)};
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  GroupAutomorphism inv{0, 0, 1, p};
  // E4 part: find the preimages of 01 and 10
  for (int u = 1; u < 4; ++u) {
    const int img = apply({u, 0}).u;
    if (img == 1) inv.image_u0 = u;
    if (img == 2) inv.image_u1 = u;
  }
  for (int m = 1; m < p; ++m) {
    if ((static_cast<long long>(m) * unit) % p == 1) inv.unit = m;
  }
  return inv;
}

GroupAutomorphism GroupAutomorphism::then(const GroupAutomorphism& other) const {
  return {other.apply({image_u0, 0}).u, other.apply({image_u1, 0}).u,
          static_cast<int>((static_cast<long long>(unit) * other.unit) % p), p};
}

std::vector<GroupAutomorphism> aut_of_G(int p) {
  const E4Cp G(p);
  std::vector<GroupAutomorphism> out;
  for (int x = 1; x < 4; ++x) {
    for (int y = 1; y < 4; ++y) {
      if (x == y) continue;
      for (int m = 1; m < p; ++m) out.push_back({x, y, m, p});
    }
  }
  return out;
}

ConnectionSet apply(const GroupAutomorphism& sigma, const ConnectionSet& s) {
  std::vector<GElem> out;
  for (const auto& g : s.elements()) out.push_back(sigma.apply(g));
  return ConnectionSet(s.p(), std::move(out));
}

CanonicalConnectionSet canonical_connection_set(const ConnectionSet& s) {
  const int p = s.p();
  const E4Cp G(p);
  const auto auts = aut_of_G(p);
  std::vector<int> best;
  std::size_t best_i = 0;
  std::vector<int> img;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    img.clear();
    for (const auto& g : s.elements()) img.push_back(G.index(auts[i].apply(g)));
    std::sort(img.begin(), img.end());
    if (i == 0 || img < best) {
      best = img;
      best_i = i;
    }
  }
  std::vector<GElem> elems;
  for (int x : best) elems.push_back(G.element(x));
  return {ConnectionSet(p, std::move(elems)), auts[best_i]};
}

std::vector<std::vector<int>> subgroups_of_G(int p) {
  const E4Cp G(p);
  const int n = G.order();
  std::set<std::vector<int>> found;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      std::vector<bool> in(static_cast<std::size_t>(n), false);
      std::vector<int> list{0};
      in[0] = true;
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (int s : {a, b}) {
          const int y = G.index(G.mul(G.element(list[i]), G.element(s)));
          if (!in[static_cast<std::size_t>(y)]) {
            in[static_cast<std::size_t>(y)] = true;
            list.push_back(y);
          }
        }
      }
      std::sort(list.begin(), list.end());
      found.insert(list);
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

Digraph cayley_graph(int p, const ConnectionSet& s) {
  const E4Cp G(p);
  if (s.p() != p && s.size() != 0) throw InputError("connection set belongs to a different p");
  Digraph out(G.order());
  for (int x = 0; x < G.order(); ++x) {
    for (const auto& g : s.elements()) out.add_arc(x, G.index(G.mul(G.element(x), g)));
  }
  return out;
}

Perm right_translation(int p, GElem k) {
  const E4Cp G(p);
  std::vector<int> img(static_cast<std::size_t>(G.order()));
  for (int x = 0; x < G.order(); ++x) img[static_cast<std::size_t>(x)] = G.index(G.mul(G.element(x), k));
  return Perm(img);
}

RegularLabeling regular_labeling(std::span<const Perm> H, int p, int base) {
  const E4Cp G(p);
  if (!is_regular_e4cp(H, p)) throw InputError("group is not a regular E4 x Cp");
  const int n = G.order();
  if (base < 0 || base >= n) throw InputError("base point out of range");
  std::vector<Perm> sorted(H.begin(), H.end());
  std::sort(sorted.begin(), sorted.end());
  const Perm* a = nullptr;
  const Perm* b = nullptr;
  const Perm* c = nullptr;
  for (const auto& h : sorted) {
    const auto o = h.order();
    if (o == 2 && a == nullptr) {
      a = &h;
    } else if (o == 2 && b == nullptr) {
      b = &h;
    } else if (o == static_cast<std::uint64_t>(p) && c == nullptr && p != 2) {
      c = &h;
    }
  }
  if (p == 2) {
    // E8: a third involution outside <a, b>
    const Perm ab = *a * *b;
    for (const auto& h : sorted) {
      if (h.order() == 2 && h != *a && h != *b && h != ab) {
        c = &h;
        break;
      }
    }
  }
  if (a == nullptr || b == nullptr || c == nullptr) throw InputError("group is not a regular E4 x Cp");
  RegularLabeling out{std::vector<GElem>(static_cast<std::size_t>(n)), {*a, *b, *c}};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int u = 0; u < 4; ++u) {
    for (int z = 0; z < p; ++z) {
      Perm h(n);
      if (u & 1) h *= *a;
      if (u & 2) h *= *b;
      h *= c->pow(z);
      const int x = h[base];
      if (seen[static_cast<std::size_t>(x)]) throw InputError("group is not regular");
      seen[static_cast<std::size_t>(x)] = true;
      out.label[static_cast<std::size_t>(x)] = {u, z};
    }
  }
  return out;
}

ConnectionSet connection_set_of(const Digraph& graph, const RegularLabeling& labeling, int p) {
  int base = -1;
  for (std::size_t x = 0; x < labeling.label.size(); ++x) {
    if (labeling.label[x] == GElem{}) base = static_cast<int>(x);
  }
  if (base < 0 || graph.order() != static_cast<int>(labeling.label.size())) throw InputError("labeling mismatch");
  std::vector<GElem> out;
  for (int y = 0; y < graph.order(); ++y) {
    if (graph.has_arc(base, y)) out.push_back(labeling.label[static_cast<std::size_t>(y)]);
  }
  return ConnectionSet(p, std::move(out));
}

CoherentConfiguration orbit_scheme(const CoherentConfiguration& ccY, int p) {
  const E4Cp G(p);
  const int n = G.order();
  if (ccY.degree() != n) throw InputError("configuration degree is not 4p");
  const int r = ccY.rank();
  std::vector<int> parent(static_cast<std::size_t>(r));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (GElem k : {GElem{1, 0}, GElem{2, 0}, GElem{0, 1 % p}}) {
    const Perm t = right_translation(p, k);
    std::vector<int> fwd(static_cast<std::size_t>(r), -1), back(static_cast<std::size_t>(r), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int c1 = ccY.color(a, b), c2 = ccY.color(t[a], t[b]);
        auto& f = fwd[static_cast<std::size_t>(c1)];
        auto& bk = back[static_cast<std::size_t>(c2)];
        if ((f >= 0 && f != c2) || (bk >= 0 && bk != c1)) {
          throw InputError("right translations do not act on the colors");
        }
        f = c2;
        bk = c1;
      }
    }
    for (int c = 0; c < r; ++c) {
      const int x = find(c), y = find(fwd[static_cast<std::size_t>(c)]);
      if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    }
  }
  std::vector<int> colors(ccY.colors().size());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = find(ccY.colors()[i]);
  return CoherentConfiguration::from_coloring(n, colors);
}

}  // namespace cayley4p
