#pragma once

// Recognition of Cayley graphs over E4 x Cp and the isomorphism test built on
// the CI-property.

#include <array>
#include <optional>
#include <vector>

#include "cayley4p/coherent.hpp"
#include "cayley4p/graph.hpp"
#include "cayley4p/grouplib.hpp"
#include "cayley4p/mainsub.hpp"
#include "cayley4p/perm.hpp"

namespace cayley4p {

struct Certificate {
  int p = 0;
  std::vector<GElem> labeling;  // vertex -> group element
  ConnectionSet connection_set;
  std::array<Perm, 3> generators;  // act as 01.0, 10.0 and 00.1
};

/// Involutions of C_P that act on the four P-orbits as a double
/// transposition and preserve every color, grouped by the three pairings.
std::array<std::vector<Perm>, 3> centralizer_involutions(const CoherentConfiguration& cc, const Perm& P_gen, int p,
                                                         Execution exec = Execution::parallel);

/// R(P): regular E4 x Cp subgroups (as element lists) with P <= H <= C_P and
/// H preserving the colors of cc. Stops after limit groups when limit > 0.
std::vector<std::vector<Perm>> r_of_p(const CoherentConfiguration& cc, const Perm& P_gen, int p,
                                      std::size_t limit = 0, Execution exec = Execution::parallel);

struct SolveReport {
  std::optional<Certificate> certificate;
  /// Filled in exhaustive mode: one certificate per Cayley-inequivalent representation.
  std::vector<Certificate> all;
  bool homogeneous = false;
  BpSet bp;
};

/// Requires 4p vertices with p >= 5 prime; smaller p is handled by the oracle.
SolveReport solve(const Digraph& graph, bool exhaustive = false, Execution exec = Execution::parallel);
std::optional<Certificate> find_representation(const Digraph& graph, Execution exec = Execution::parallel);

/// Bijection from the vertices of cayley_graph(p, S1) onto those of graph2, if
/// the graphs are isomorphic. Uses a direct search for p < 5.
std::optional<Perm> iso_test(const ConnectionSet& S1, const Digraph& graph2, Execution exec = Execution::parallel);

/// p with 4p == n, or 0 when n is not four times a prime.
int prime_of_order(int n);

}  // namespace cayley4p
