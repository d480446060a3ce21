// Serial vs parallel timings for the OpenMP kernels. Each pair of runs must
// produce identical output; a mismatch exits with status 1.
//
//   bench_kernels [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "cayley4p/coherent.hpp"
#include "cayley4p/grouplib.hpp"
#include "cayley4p/mainsub.hpp"
#include "cayley4p/solver.hpp"

using namespace cayley4p;

namespace {

int mismatches = 0;

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e100;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <typename T>
void compare(const std::string& name, int repeats, const std::function<T(Execution)>& kernel) {
  T serial, parallel;
  const double ts = best_of(repeats, [&] { serial = kernel(Execution::serial); });
  const double tp = best_of(repeats, [&] { parallel = kernel(Execution::parallel); });
  const bool same = serial == parallel;
  if (!same) ++mismatches;
  std::printf("%-40s serial %9.4f s  parallel %9.4f s  speedup %5.2f  %s\n", name.c_str(), ts, tp, ts / tp,
              same ? "same" : "MISMATCH");
}

Digraph random_cayley(int p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const E4Cp G(p);
  std::vector<GElem> s;
  for (int i = 1; i < G.order(); ++i) {
    if (std::bernoulli_distribution(0.3)(rng)) s.push_back(G.element(i));
  }
  return cayley_graph(p, ConnectionSet(p, s));
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());

  for (int n : {40, 80, 120}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::vector<int> colors(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        colors[static_cast<std::size_t>(a * n + b)] = a == b ? 2 : static_cast<int>(std::bernoulli_distribution(0.5)(rng));
      }
    }
    compare<std::vector<int>>("wl_round n=" + std::to_string(n), repeats,
                              [&](Execution e) { return wl_round(n, colors, 3, e); });
    compare<CoherentConfiguration>("stabilize n=" + std::to_string(n), repeats,
                                   [&](Execution e) { return stabilize(n, colors, e); });
  }

  for (int p : {7, 13, 23}) {
    const Digraph g = random_cayley(p, 100 + static_cast<std::uint64_t>(p));
    const std::vector<Relation> seeds{g.arcs()};
    const auto cc = wl_closure(4 * p, seeds);
    const Perm P = right_translation(p, GElem{0, 1});
    compare<std::array<std::vector<Perm>, 3>>("centralizer_involutions p=" + std::to_string(p), repeats,
                                             [&](Execution e) { return centralizer_involutions(cc, P, p, e); });
  }

  // four directed p-cycles: every Step 5 candidate survives, (p-1)^3 of them
  for (int p : {7, 13, 23}) {
    Digraph g(4 * p);
    const E4Cp G(p);
    for (int x = 0; x < 4 * p; ++x) {
      const GElem e = G.element(x);
      g.add_arc(x, G.index(G.mul(e, GElem{0, 1})));
    }
    const std::vector<Relation> seeds{g.arcs()};
    const auto cc = wl_closure(4 * p, seeds);
    compare<std::vector<Perm>>("main_subroutine (4 directed C_p) p=" + std::to_string(p), repeats,
                               [&](Execution e) { return main_subroutine(cc, p, e).groups; });
  }
  return mismatches == 0 ? 0 : 1;
}
