#pragma once

// Automorphisms and color isomorphisms of colored n x n matrices by
// individualization-refinement. A coherent configuration is searched through
// its color matrix; raw graph colorings work the same way.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cayley4p/coherent.hpp"
#include "cayley4p/perm.hpp"

namespace cayley4p {

struct AutResult {
  std::vector<Perm> generators;
  PermGroup group;
};

/// Full group of permutations g with M(a,b) == M(g(a), g(b)).
AutResult automorphism_group(int n, std::span<const int> colors);
AutResult automorphism_group(const CoherentConfiguration& cc);

bool is_automorphism(int n, std::span<const int> colors, const Perm& g);
bool is_automorphism(const CoherentConfiguration& cc, const Perm& g);

/// A bijection g with colors1(a,b) == colors2(g(a), g(b)) that also passes
/// accept (when given); nothing if none exists.
std::optional<Perm> find_isomorphism(int n, std::span<const int> colors1, std::span<const int> colors2,
                                     const std::function<bool(const Perm&)>& accept = {});

/// Point bijection inducing a bijection between the color sets.
std::optional<Perm> color_isomorphism(const CoherentConfiguration& cc1, const CoherentConfiguration& cc2);

}  // namespace cayley4p
