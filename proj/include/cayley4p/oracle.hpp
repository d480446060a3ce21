#pragma once

// Brute-force checks used by the tests, and the solver for p in {2, 3}.

#include <optional>
#include <vector>

#include "cayley4p/graph.hpp"
#include "cayley4p/solver.hpp"

namespace cayley4p {

inline constexpr std::uint64_t kDefaultElementBudget = 100000;

template <typename T>
struct Budgeted {
  bool budget_exceeded = false;
  BigInt group_order = 0;
  T value{};
};

/// Labeling is a bijection onto G and (a, b) is an arc iff label(b) label(a)^-1 is in S.
bool verify_certificate(const Digraph& graph, const Certificate& cert);

/// Every element of Aut(graph) with cycle type p^(n/p).
Budgeted<std::vector<Perm>> brute_semiregular_p(const Digraph& graph, int p,
                                                std::uint64_t element_budget = kDefaultElementBudget);

/// Every regular subgroup of Aut(graph) isomorphic to E4 x Cp, as sorted element lists.
Budgeted<std::vector<std::vector<Perm>>> brute_regular_e4cp(const Digraph& graph,
                                                            std::uint64_t element_budget = kDefaultElementBudget);

/// Tries every connection set up to Aut(G) against the graph; n must be 8 or 12.
std::optional<Certificate> exhaustive_small_p(const Digraph& graph, int p);

/// Same search for any p: every d-subset of G (d the out-degree), reduced by
/// aut_of_G when up_to_aut is set, tried against the graph by isomorphism search.
std::optional<Certificate> exhaustive_connection_sets(const Digraph& graph, int p, bool up_to_aut = true);

}  // namespace cayley4p
