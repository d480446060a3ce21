#include "cayley4p/perm.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cayley4p/errors.hpp"

namespace cayley4p {

Perm::Perm(int n) {
  if (n < 0 || n > kMaxDegree) throw InputError("permutation degree out of range");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Perm::Perm(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxDegree) throw InputError("permutation degree out of range");
  std::vector<bool> seen(images.size(), false);
  images_.reserve(images.size());
  for (int x : images) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      throw InputError("image list is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
    images_.push_back(static_cast<std::uint8_t>(x));
  }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int x = cyc[i];
      if (x < 0 || x >= n || used[static_cast<std::size_t>(x)]) {
        throw InputError("cycles are not disjoint or out of range");
      }
      used[static_cast<std::size_t>(x)] = true;
      img[static_cast<std::size_t>(x)] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Perm(img);
}

std::vector<int> Perm::image_vector() const { return {images_.begin(), images_.end()}; }

Perm Perm::operator*(const Perm& rhs) const {
  Perm r = *this;
  r *= rhs;
  return r;
}

Perm& Perm::operator*=(const Perm& rhs) {
  if (rhs.degree() != degree()) throw InputError("composing permutations of different degree");
  for (auto& x : images_) x = rhs.images_[x];
  return *this;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm Perm::pow(long long k) const {
  const long long ord = static_cast<long long>(order());
  k %= ord;
  if (k < 0) k += ord;
  // Walk each cycle once instead of repeated multiplication.
  Perm r(degree());
  for (const auto& cyc : cycles()) {
    const auto len = static_cast<long long>(cyc.size());
    for (long long i = 0; i < len; ++i) {
      r.images_[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] =
          static_cast<std::uint8_t>(cyc[static_cast<std::size_t>((i + k) % len)]);
    }
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Perm::fixed_points() const {
  int c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) c += images_[i] == i ? 1 : 0;
  return c;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cyc;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(static_cast<int>(x));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t PermHash::operator()(const Perm& g) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : g.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// PermGroup

std::vector<const Perm*> PermGroup::level_generators(std::size_t i) const {
  std::vector<const Perm*> gens;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < i && fixes; ++j) fixes = s[base_[j]] == base_[j];
    if (fixes) gens.push_back(&s);
  }
  return gens;
}

void PermGroup::rebuild_level(std::size_t i) {
  if (levels_.size() <= i) levels_.resize(i + 1);
  Level& lv = levels_[i];
  lv.point = base_[i];
  lv.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  lv.orbit.clear();
  lv.transversal[static_cast<std::size_t>(lv.point)] = Perm(degree_);
  lv.orbit.push_back(lv.point);
  const auto gens = level_generators(i);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const int x = lv.orbit[k];
    for (const Perm* s : gens) {
      const int y = (*s)[x];
      if (!lv.transversal[static_cast<std::size_t>(y)]) {
        lv.transversal[static_cast<std::size_t>(y)] = *lv.transversal[static_cast<std::size_t>(x)] * *s;
        lv.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(const Perm& g, std::size_t from) const {
  Perm h = g;
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const int beta = h[base_[j]];
    const auto& u = levels_[j].transversal[static_cast<std::size_t>(beta)];
    if (!u) return {h, j};
    h *= u->inverse();
  }
  return {h, levels_.size()};
}

PermGroup PermGroup::build(int degree, std::span<const Perm> generators) {
  PermGroup g(degree);
  for (const auto& s : generators) {
    if (s.degree() != degree) throw InputError("generator degree mismatch");
    if (!s.is_identity() && std::find(g.strong_.begin(), g.strong_.end(), s) == g.strong_.end()) {
      g.strong_.push_back(s);
    }
  }
  auto moved_point = [&](const Perm& s) {
    for (int x = 0; x < degree; ++x) {
      if (s[x] != x) return x;
    }
    return -1;
  };
  for (const auto& s : g.strong_) {
    bool fixes_base = true;
    for (int b : g.base_) fixes_base = fixes_base && s[b] == b;
    if (fixes_base) g.base_.push_back(moved_point(s));
  }
  for (std::size_t i = 0; i < g.base_.size(); ++i) g.rebuild_level(i);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(g.base_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    bool restarted = false;
    const auto gens = g.level_generators(level);
    const auto orbit = g.levels_[level].orbit;
    for (std::size_t a = 0; a < orbit.size() && !restarted; ++a) {
      const int beta = orbit[a];
      for (const Perm* s : gens) {
        const int image = (*s)[beta];
        const Perm& u_beta = *g.levels_[level].transversal[static_cast<std::size_t>(beta)];
        const Perm& u_image = *g.levels_[level].transversal[static_cast<std::size_t>(image)];
        Perm y = u_beta * *s;
        if (y == u_image) continue;
        y *= u_image.inverse();
        auto [h, j] = g.strip(y, level + 1);
        if (j == g.levels_.size() && h.is_identity()) continue;
        g.strong_.push_back(h);
        if (j == g.levels_.size()) {
          g.base_.push_back(moved_point(h));
        }
        for (std::size_t l = level + 1; l <= j; ++l) g.rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return g;
}

PermGroup PermGroup::from_bsgs(int degree, std::vector<int> base, std::vector<Perm> strong_generators) {
  PermGroup g(degree);
  g.base_ = std::move(base);
  for (auto& s : strong_generators) {
    if (s.degree() != degree) throw InputError("generator degree mismatch");
    if (!s.is_identity()) g.strong_.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < g.base_.size(); ++i) g.rebuild_level(i);
  return g;
}

BigInt PermGroup::order() const {
  BigInt ord = 1;
  for (const auto& lv : levels_) ord *= static_cast<unsigned>(lv.orbit.size());
  return ord;
}

std::vector<int> PermGroup::orbit_lengths() const {
  std::vector<int> out;
  for (const auto& lv : levels_) out.push_back(static_cast<int>(lv.orbit.size()));
  return out;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g);
  return j == levels_.size() && h.is_identity();
}

void PermGroup::for_each_element(const std::function<bool(const Perm&)>& visit) const {
  // g = u_{k-1} * ... * u_1 * u_0 enumerates every element exactly once.
  const std::function<bool(std::ptrdiff_t, const Perm&)> rec = [&](std::ptrdiff_t level, const Perm& acc) {
    if (level < 0) return visit(acc);
    const auto& lv = levels_[static_cast<std::size_t>(level)];
    for (int x : lv.orbit) {
      if (!rec(level - 1, acc * *lv.transversal[static_cast<std::size_t>(x)])) return false;
    }
    return true;
  };
  rec(static_cast<std::ptrdiff_t>(levels_.size()) - 1, Perm(degree_));
}

std::optional<std::vector<Perm>> PermGroup::elements(std::uint64_t limit) const {
  if (order() > limit) return std::nullopt;
  std::vector<Perm> out;
  for_each_element([&](const Perm& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm acc(degree_);
  for (std::ptrdiff_t level = static_cast<std::ptrdiff_t>(levels_.size()) - 1; level >= 0; --level) {
    const auto& lv = levels_[static_cast<std::size_t>(level)];
    std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
    acc *= *lv.transversal[static_cast<std::size_t>(lv.orbit[pick(rng)])];
  }
  return acc;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> orbits(int degree, std::span<const Perm> generators) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    for (int x = 0; x < degree; ++x) {
      const int a = find(x), b = find(g[x]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(degree), -1);
  for (int x = 0; x < degree; ++x) {
    const int r = find(x);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x);
  }
  return out;
}

BigInt p_part_of_order(const PermGroup& group, int p) {
  BigInt ord = group.order();
  BigInt part = 1;
  while (ord % p == 0) {
    ord /= p;
    part *= p;
  }
  return part;
}

std::optional<Perm> element_of_order_p(const PermGroup& group, int p) {
  if (p < 2 || p_part_of_order(group, p) == 1) return std::nullopt;
  auto power_down = [p](const Perm& g) -> std::optional<Perm> {
    const auto ord = g.order();
    if (ord % static_cast<std::uint64_t>(p) != 0) return std::nullopt;
    return g.pow(static_cast<long long>(ord / static_cast<std::uint64_t>(p)));
  };
  for (const auto& s : group.strong_generators()) {
    if (auto r = power_down(s)) return r;
  }
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(p));
  for (int attempt = 0; attempt < 4096; ++attempt) {
    if (auto r = power_down(group.random_element(rng))) return r;
  }
  if (group.order() <= 1000000) {
    std::optional<Perm> found;
    group.for_each_element([&](const Perm& g) {
      found = power_down(g);
      return !found.has_value();
    });
    return found;
  }
  return std::nullopt;
}

bool is_semiregular_cp(const Perm& g, int p) {
  if (p < 2 || g.degree() == 0 || g.degree() % p != 0) return false;
  for (int len : g.cycle_type()) {
    if (len != p) return false;
  }
  return true;
}

std::vector<Perm> centralizer_semiregular_cp(const Perm& P_gen, int p) {
  if (P_gen.degree() != 4 * p || !is_semiregular_cp(P_gen, p)) {
    throw InputError("centralizer_semiregular_cp needs a semiregular element of order p on 4p points");
  }
  // point(i, t) = P^t applied to the smallest point of the i-th orbit.
  const auto cyc = P_gen.cycles();
  std::vector<std::vector<int>> at(4, std::vector<int>(static_cast<std::size_t>(p)));
  std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(4 * p));
  for (int i = 0; i < 4; ++i) {
    int x = cyc[static_cast<std::size_t>(i)][0];
    for (int t = 0; t < p; ++t, x = P_gen[x]) {
      at[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = x;
      pos[static_cast<std::size_t>(x)] = {i, t};
    }
  }
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(24 * p * p * p * p));
  std::array<int, 4> sigma{0, 1, 2, 3};
  std::vector<int> img(static_cast<std::size_t>(4 * p));
  do {
    std::array<int, 4> off{0, 0, 0, 0};
    while (true) {
      for (int x = 0; x < 4 * p; ++x) {
        const auto [i, t] = pos[static_cast<std::size_t>(x)];
        const int j = sigma[static_cast<std::size_t>(i)];
        img[static_cast<std::size_t>(x)] =
            at[static_cast<std::size_t>(j)][static_cast<std::size_t>((t + off[static_cast<std::size_t>(i)]) % p)];
      }
      out.emplace_back(img);
      int k = 0;
      while (k < 4 && ++off[static_cast<std::size_t>(k)] == p) off[static_cast<std::size_t>(k++)] = 0;
      if (k == 4) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::optional<std::vector<Perm>> subgroup_closure(std::span<const Perm> elements, std::size_t bound) {
  if (elements.empty()) throw InputError("subgroup_closure needs at least one element");
  const int n = elements.front().degree();
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out{Perm(n)};
  seen.insert(out.front());
  if (out.size() > bound) return std::nullopt;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : elements) {
      Perm y = out[k] * s;
      if (seen.insert(y).second) {
        out.push_back(std::move(y));
        if (out.size() > bound) return std::nullopt;
      }
    }
  }
  return out;
}

bool is_regular_e4cp(std::span<const Perm> elements, int p) {
  const auto n = static_cast<std::size_t>(4 * p);
  if (elements.size() != n) return false;
  std::unordered_set<Perm, PermHash> set(elements.begin(), elements.end());
  if (set.size() != n) return false;
  for (const auto& g : elements) {
    if (g.degree() != 4 * p) return false;
  }
  if (!set.contains(Perm(4 * p))) return false;
  std::vector<bool> hit(n, false);
  for (const auto& g : elements) {
    hit[static_cast<std::size_t>(g[0])] = true;
    if (g.order() % 4 == 0) return false;
    for (const auto& h : elements) {
      const Perm gh = g * h;
      if (gh != h * g || !set.contains(gh)) return false;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

}  // namespace cayley4p
