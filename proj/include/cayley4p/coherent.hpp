#pragma once

// Coherent configurations: a partition of Omega x Omega into colored basis
// relations, built by two-dimensional Weisfeiler-Leman refinement, together
// with the standard constructions on them (restriction, quotient,
// extensions, direct sum, tensor product, generalized wreath detection).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley4p/graph.hpp"

namespace cayley4p {

enum class Execution { serial, parallel };

class CoherentConfiguration {
 public:
  CoherentConfiguration() = default;

  /// Renumbers colors by first occurrence in row-major order and derives the
  /// per-color data. Does not check coherence; see intersection_numbers_check.
  static CoherentConfiguration from_coloring(int n, std::span<const int> colors);

  int degree() const { return n_; }
  int rank() const { return rank_; }
  int color(int a, int b) const { return colors_[static_cast<std::size_t>(a * n_ + b)]; }
  std::span<const int> colors() const { return colors_; }

  /// Color of s* for color s, read off the first occurrence of s.
  int transpose(int c) const { return transpose_[static_cast<std::size_t>(c)]; }
  bool is_diagonal(int c) const { return diagonal_[static_cast<std::size_t>(c)]; }
  const std::vector<int>& diagonal_colors() const { return diagonal_colors_; }
  /// Fibers in order of their smallest point.
  const std::vector<std::vector<int>>& fibers() const { return fibers_; }
  int fiber_of_point(int a) const { return fiber_of_point_[static_cast<std::size_t>(a)]; }
  std::pair<int, int> fibers_of_color(int c) const { return color_fibers_[static_cast<std::size_t>(c)]; }
  int valency(int c) const { return valency_[static_cast<std::size_t>(c)]; }
  bool is_homogeneous() const { return fibers_.size() == 1; }
  /// Cells of color c in row-major order.
  Relation relation(int c) const;

  friend bool operator==(const CoherentConfiguration& a, const CoherentConfiguration& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_;
  }

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<int> colors_;
  std::vector<int> transpose_;
  std::vector<bool> diagonal_;
  std::vector<int> diagonal_colors_;
  std::vector<std::vector<int>> fibers_;
  std::vector<int> fiber_of_point_;
  std::vector<std::pair<int, int>> color_fibers_;
  std::vector<int> valency_;
};

/// An equivalence relation that is a union of basis relations.
struct EquivRel {
  std::vector<int> color_set;             // sorted
  std::vector<std::vector<int>> classes;  // each sorted, ordered by smallest point
  std::vector<int> class_of;              // point -> class index

  /// Common class size, or 0 when the class sizes differ.
  int class_size() const;
  std::size_t pair_count() const;
  bool is_identity() const;  // 1_Omega
  bool is_total() const;     // Omega x Omega

  friend bool operator==(const EquivRel& a, const EquivRel& b) { return a.color_set == b.color_set; }
};

/// E is contained in F as relations.
bool is_contained(const EquivRel& E, const EquivRel& F);

/// Builds the equivalence with the given classes; throws InternalError when it
/// is not a union of colors of cc.
EquivRel equivalence_from_classes(const CoherentConfiguration& cc, std::vector<std::vector<int>> classes);

// --- WL closure -------------------------------------------------------------

/// Two-dimensional WL stabilization of an arbitrary initial cell labeling.
/// The initial labeling is first split by diagonal/off-diagonal and by the
/// label of the transposed cell.
CoherentConfiguration stabilize(int n, std::span<const int> initial, Execution exec = Execution::parallel);

/// One refinement round; returns the new canonical coloring (same count means stable).
std::vector<int> wl_round(int n, std::span<const int> colors, int rank, Execution exec);

CoherentConfiguration wl_closure(int n, std::span<const Relation> seeds, Execution exec = Execution::parallel);
CoherentConfiguration refine(const CoherentConfiguration& cc, std::span<const Relation> extra,
                             Execution exec = Execution::parallel);

/// Empty when coherent; otherwise a description of the first violated axiom.
std::optional<std::string> coherence_violation(const CoherentConfiguration& cc);
bool intersection_numbers_check(const CoherentConfiguration& cc);

/// every cell colored by cc_fine lies inside one color of cc_coarse
bool is_refinement_of(const CoherentConfiguration& fine, const CoherentConfiguration& coarse);

// --- equivalences -----------------------------------------------------------

inline constexpr std::size_t kEquivalenceCap = 4096;

/// All equivalence relations in the relation lattice, sorted by pair count and
/// then by color set. Throws CapacityError above kEquivalenceCap.
std::vector<EquivRel> all_equivalences(const CoherentConfiguration& cc);

/// Smallest equivalence in the lattice containing color c.
EquivRel equivalence_closure(const CoherentConfiguration& cc, int c);

// --- constructions ----------------------------------------------------------

struct SubConfiguration {
  CoherentConfiguration config;
  std::vector<int> points;  // local index -> original point
};

struct QuotientConfiguration {
  CoherentConfiguration config;
  std::vector<std::vector<int>> classes;  // quotient point -> class
  std::vector<int> class_of;              // original point -> quotient point
};

SubConfiguration restriction(const CoherentConfiguration& cc, std::vector<int> points);
QuotientConfiguration quotient(const CoherentConfiguration& cc, const EquivRel& E);

CoherentConfiguration extension_fixing_classes(const CoherentConfiguration& cc, const EquivRel& E);
/// WL(cc, { union over classes D of D x c(D) }), c acting on class indices.
CoherentConfiguration extension_by_quotient_cycle(const CoherentConfiguration& cc, const EquivRel& E, const Perm& c);

CoherentConfiguration direct_sum(const CoherentConfiguration& a, const CoherentConfiguration& b);
/// Point (x, y) is x * b.degree() + y.
CoherentConfiguration tensor_product(const CoherentConfiguration& a, const CoherentConfiguration& b);

bool is_generalized_wreath(const CoherentConfiguration& cc, const EquivRel& E, const EquivRel& F);
/// E = 1 or F = Omega x Omega.
bool is_trivial_wreath(const EquivRel& E, const EquivRel& F);

/// Nothing when cc is not homogeneous.
std::optional<EquivRel> tensor_complement(const CoherentConfiguration& cc, const EquivRel& E);
std::optional<EquivRel> gw_complement(const CoherentConfiguration& cc, const EquivRel& E);

/// Trivial configuration of degree n (rank 2, or 1 when n == 1).
CoherentConfiguration trivial_configuration(int n);
/// Complete configuration (every cell its own color).
CoherentConfiguration complete_configuration(int n);

}  // namespace cayley4p
