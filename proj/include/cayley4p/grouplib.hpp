#pragma once

// The group G = E4 x Cp: arithmetic, automorphisms, subgroups, Cayley graphs,
// labelings of regular actions and canonical connection sets.
//
// Elements are written "u1u0.z"; point index of an element is z + p*(2*u1 + u0).

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley4p/coherent.hpp"
#include "cayley4p/graph.hpp"
#include "cayley4p/perm.hpp"

namespace cayley4p {

struct GElem {
  int u = 0;  // bits u1 u0 of the E4 part
  int z = 0;  // residue mod p

  friend bool operator==(const GElem&, const GElem&) = default;
};

class E4Cp {
 public:
  /// Throws InputError unless p is prime.
  explicit E4Cp(int p);

  int p() const { return p_; }
  int order() const { return 4 * p_; }
  GElem identity() const { return {}; }
  GElem mul(GElem a, GElem b) const { return {a.u ^ b.u, (a.z + b.z) % p_}; }
  GElem inv(GElem a) const { return {a.u, (p_ - a.z) % p_}; }
  GElem pow(GElem a, long long k) const;
  int index(GElem a) const { return a.z + p_ * a.u; }
  GElem element(int index) const { return {index / p_, index % p_}; }
  int element_order(GElem a) const;
  bool contains(GElem a) const { return a.u >= 0 && a.u < 4 && a.z >= 0 && a.z < p_; }

 private:
  int p_;
};

std::string to_string(GElem g);
/// Parses "u1u0.z"; throws InputError on bad syntax or range.
GElem parse_gelem(const std::string& text, int p);

/// Subset of G without the identity, kept sorted by point index.
class ConnectionSet {
 public:
  ConnectionSet() = default;
  /// Throws InputError on the identity, duplicates or out-of-range elements.
  ConnectionSet(int p, std::vector<GElem> elements);

  int p() const { return p_; }
  const std::vector<GElem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(GElem g) const;
  bool is_symmetric() const;
  std::vector<int> indices() const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.p_ == b.p_ && a.elements_ == b.elements_;
  }

 private:
  int p_ = 0;
  std::vector<GElem> elements_;
};

/// Comma-separated "u1u0.z" list; the empty string gives the empty set.
ConnectionSet parse_connection_set(const std::string& spec, int p);
std::string format_connection_set(const ConnectionSet& s);

/// Automorphism of G: the E4 part by the images of 01 and 10, the Cp part by a unit.
struct GroupAutomorphism {
  int image_u0 = 1;
  int image_u1 = 2;
  int unit = 1;
  int p = 0;

  GElem apply(GElem g) const;
  GroupAutomorphism inverse() const;
  /// (this * other)(g) == other(this(g)).
  GroupAutomorphism then(const GroupAutomorphism& other) const;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// 6(p-1) automorphisms, identity first.
std::vector<GroupAutomorphism> aut_of_G(int p);

ConnectionSet apply(const GroupAutomorphism& sigma, const ConnectionSet& s);

struct CanonicalConnectionSet {
  ConnectionSet set;
  GroupAutomorphism witness;  // witness applied to the input gives set
};

/// Lexicographically least image (as a sorted index vector) under aut_of_G.
CanonicalConnectionSet canonical_connection_set(const ConnectionSet& s);

/// All 10 subgroups as sorted index lists, ordered by size and then lexicographically.
std::vector<std::vector<int>> subgroups_of_G(int p);

/// Arc (g, g*s) for every g in G and s in S.
Digraph cayley_graph(int p, const ConnectionSet& s);

/// Right translation g -> g*k as a permutation of the point indices.
Perm right_translation(int p, GElem k);

struct RegularLabeling {
  std::vector<GElem> label;  // point -> group element
  std::array<Perm, 3> generators;  // images of 01.0, 10.0, 00.1
};

/// Labels base with the identity and h(base) with the coordinates of h in
/// the basis (a, b, c): the two least involutions and the least element of
/// order p. Throws InputError unless H is a regular E4 x Cp.
RegularLabeling regular_labeling(std::span<const Perm> H, int p, int base = 0);

/// Labels of the out-neighbours of the identity-labeled point.
ConnectionSet connection_set_of(const Digraph& graph, const RegularLabeling& labeling, int p);

/// Joins the colors of ccY along G_right; throws InputError if G_right does
/// not act by color isomorphisms.
CoherentConfiguration orbit_scheme(const CoherentConfiguration& ccY, int p);

}  // namespace cayley4p
