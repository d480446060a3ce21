#pragma once

#include <vector>

#include "cayley4p/coherent.hpp"
#include "cayley4p/perm.hpp"

namespace cayley4p {

inline constexpr std::uint64_t kCycleBaseEnumerationLimit = 1000000;

/// Pairwise non-conjugate full cycles of Aut(cc), one per conjugacy class;
/// empty iff cc is not circulant. Groups above the enumeration limit are
/// handled through a tensor or wreath decomposition; CapacityError otherwise.
std::vector<Perm> cycle_base(const CoherentConfiguration& cc);

bool is_full_cycle(const Perm& g);

}  // namespace cayley4p
