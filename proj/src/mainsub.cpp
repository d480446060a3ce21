#include "cayley4p/mainsub.hpp"

#include <algorithm>
#include <set>

#include "cayley4p/autsearch.hpp"
#include "cayley4p/cyclebase.hpp"
#include "cayley4p/errors.hpp"

namespace cayley4p {

Perm canonical_generator(const Perm& g, int p) {
  Perm best = g;
  Perm x = g;
  for (int k = 2; k < p; ++k) {
    x *= g;
    if (x < best) best = x;
  }
  return best;
}

namespace {

void add_group(BpSet& out, std::set<Perm>& seen, const Perm& g, BpStep step, int p) {
  if (seen.insert(canonical_generator(g, p)).second) {
    out.groups.push_back(g);
    out.provenance.push_back(step);
  }
}

void step2(const CoherentConfiguration& cc, const EquivRel& E, int p, BpSet& out) {
  const auto Q = quotient(cc, E);
  const auto C = cycle_base(Q.config);
  out.step2_cycle_base_sizes.push_back(C.size());
  std::set<Perm> seen;
  for (const auto& c : C) {
    const auto Xc = extension_by_quotient_cycle(cc, E, c);
    const auto Kc = automorphism_group(Xc);
    if (p_part_of_order(Kc.group, p) != p) continue;
    auto g = element_of_order_p(Kc.group, p);
    if (g && is_semiregular_cp(*g, p) && is_automorphism(cc, *g)) add_group(out, seen, *g, BpStep::step2, p);
  }
}

void step3to5(const CoherentConfiguration& cc, const EquivRel& E, int p, BpSet& out, Execution exec) {
  const int n = cc.degree();
  const int nE = E.class_size();
  const auto Y = extension_fixing_classes(cc, E);
  std::vector<Perm> cycles;  // one full cycle per fiber, in fiber-local coordinates
  for (const auto& fiber : Y.fibers()) {
    if (static_cast<int>(fiber.size()) != nE) return;
    const auto sub = restriction(Y, fiber);
    auto base = cycle_base(sub.config);
    if (base.empty()) return;
    cycles.push_back(base.front());
  }

  std::set<Perm> seen;
  if (auto dec = is_quasitrivial(Y)) {
    for (const auto& cls : dec->classes) {
      if (dec->fibers[static_cast<std::size_t>(cls.front())].size() % static_cast<std::size_t>(p) != 0) return;
    }
    const Perm g = quasitrivial_semiregular_p(*dec, p);
    if (!is_automorphism(cc, g)) throw InternalError("transported semiregular element is not an automorphism");
    add_group(out, seen, g, BpStep::step4, p);
    return;
  }

  // Step 5: order-p elements of the product of the cyclic groups, first exponent normalized to 1
  const auto& fibers = Y.fibers();
  const std::size_t m = fibers.size();
  std::vector<std::vector<int>> q;  // q[i][k] = image of fibers[i][k] under the order-p power
  for (std::size_t i = 0; i < m; ++i) {
    const int k = static_cast<int>(fibers[i].size());
    if (k % p != 0) return;
    const Perm c = cycles[i].pow(k / p);
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) img[static_cast<std::size_t>(x)] = c[x];
    q.push_back(std::move(img));
  }
  std::size_t total = 1;
  for (std::size_t i = 1; i < m; ++i) total *= static_cast<std::size_t>(p - 1);

  const auto build = [&](std::size_t code) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m; ++i) {
      int e = 1;
      if (i > 0) {
        e = static_cast<int>(code % static_cast<std::size_t>(p - 1)) + 1;
        code /= static_cast<std::size_t>(p - 1);
      }
      const auto& f = fibers[i];
      const auto k = f.size();
      for (std::size_t x = 0; x < k; ++x) {
        std::size_t y = x;
        for (int t = 0; t < e; ++t) y = static_cast<std::size_t>(q[i][y]);
        img[static_cast<std::size_t>(f[x])] = f[y];
      }
    }
    return Perm(img);
  };

  std::vector<char> keep(total, 0);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t code = 0; code < total; ++code) keep[code] = is_automorphism(cc, build(code)) ? 1 : 0;
  } else {
    for (std::size_t code = 0; code < total; ++code) keep[code] = is_automorphism(cc, build(code)) ? 1 : 0;
  }
  for (std::size_t code = 0; code < total; ++code) {
    if (keep[code] != 0) add_group(out, seen, build(code), BpStep::step5, p);
  }
}

}  // namespace

BpSet main_subroutine(const CoherentConfiguration& cc, int p, Execution exec) {
  if (!is_prime(p) || p < 5) throw InputError("p must be a prime >= 5");
  if (cc.degree() != 4 * p) throw InputError("configuration degree must be 4p");
  if (!cc.is_homogeneous()) throw InputError("main subroutine needs a homogeneous configuration");
  BpSet out;
  out.principal = principal_equivalence(cc);
  if (!out.principal) return out;
  const auto& E = out.principal->E;
  if (E.class_size() <= 4) {
    step2(cc, E, p, out);
  } else {
    step3to5(cc, E, p, out, exec);
  }
  return out;
}

}  // namespace cayley4p
