#pragma once

// Quasitrivial configurations and principal equivalence relations.

#include <optional>
#include <vector>

#include "cayley4p/coherent.hpp"
#include "cayley4p/perm.hpp"

namespace cayley4p {

struct QuasitrivialDecomposition {
  int degree = 0;
  std::vector<std::vector<int>> fibers;  // fibers of the configuration, by smallest point
  /// classes[i] lists fiber indices of the i-th class of ~; classes[i][0] is the representative.
  std::vector<std::vector<int>> classes;
  /// maps[i][j][k]: image of the k-th point of the representative under f_ij (maps[i][0] is the identity).
  std::vector<std::vector<std::vector<int>>> maps;
};

std::optional<QuasitrivialDecomposition> is_quasitrivial(const CoherentConfiguration& cc);

/// Product of |representative|! over the classes.
BigInt quasitrivial_aut_order(const QuasitrivialDecomposition& dec);

/// Consecutive p-cycles on each representative, transported along the f_ij.
Perm quasitrivial_semiregular_p(const QuasitrivialDecomposition& dec, int p);

struct PrincipalEquivalence {
  enum class Kind { E1, E2 };
  enum class ComplementKind { none, tensor, wreath };

  EquivRel E;
  Kind kind = Kind::E1;
  std::optional<EquivRel> complement;
  ComplementKind complement_kind = ComplementKind::none;
  /// The other reading of minimality (minimal among n_E >= p) would pick a different E1.
  bool readings_disagree = false;
};

/// Throws InputError unless cc is homogeneous of degree 4p with p >= 5 prime.
std::optional<PrincipalEquivalence> principal_equivalence(const CoherentConfiguration& cc);

}  // namespace cayley4p
