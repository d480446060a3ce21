#pragma once

#include <optional>
#include <vector>

#include "cayley4p/coherent.hpp"
#include "cayley4p/perm.hpp"
#include "cayley4p/structure.hpp"

namespace cayley4p {

enum class BpStep { step2, step4, step5 };

struct BpSet {
  /// One generator of order p per subgroup; no two generate the same subgroup.
  std::vector<Perm> groups;
  std::vector<BpStep> provenance;
  std::optional<PrincipalEquivalence> principal;
  /// Cycle-base size of each Step 2 quotient that was examined.
  std::vector<std::size_t> step2_cycle_base_sizes;
};

/// Semiregular Cp-subgroups of Aut(cc) that are empty or representative.
/// cc must be homogeneous of degree 4p with p >= 5 prime.
BpSet main_subroutine(const CoherentConfiguration& cc, int p, Execution exec = Execution::parallel);

/// Least nonidentity power of g in image order; equal iff <g> == <h> for order-p elements.
Perm canonical_generator(const Perm& g, int p);

}  // namespace cayley4p
