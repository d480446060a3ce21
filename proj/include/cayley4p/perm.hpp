#pragma once

// Permutations of {0..n-1} and a small Schreier-Sims permutation-group engine.
//
// Composition is left-to-right: (f * g)(x) == g(f(x)), i.e. f is applied
// first. Every group-theoretic routine in the library uses this convention.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley4p {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxDegree = 255;

class Perm {
 public:
  Perm() = default;
  /// Identity of degree n.
  explicit Perm(int n);
  /// Throws InputError unless images is a bijection on {0..n-1}.
  explicit Perm(const std::vector<int>& images);

  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const std::uint8_t> images() const { return images_; }
  std::vector<int> image_vector() const;

  Perm operator*(const Perm& rhs) const;
  Perm& operator*=(const Perm& rhs);
  Perm inverse() const;
  /// k may be negative.
  Perm pow(long long k) const;

  bool is_identity() const;
  int fixed_points() const;
  std::uint64_t order() const;
  /// Cycles of length >= 2, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  /// Sorted cycle lengths including fixed points (length 1).
  std::vector<int> cycle_type() const;
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint8_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& g) const;
};

/// Permutation group given by a base and strong generating set.
class PermGroup {
 public:
  /// Deterministic Schreier-Sims. Throws InputError on degree mismatch.
  static PermGroup build(int degree, std::span<const Perm> generators);
  /// Trusts that (base, strong_generators) already form a BSGS; only the
  /// transversals are computed.
  static PermGroup from_bsgs(int degree, std::vector<int> base, std::vector<Perm> strong_generators);

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }
  BigInt order() const;
  /// Basic orbit lengths, level by level.
  std::vector<int> orbit_lengths() const;
  bool contains(const Perm& g) const;
  /// All elements if the order is at most limit.
  std::optional<std::vector<Perm>> elements(std::uint64_t limit) const;
  /// Calls visit(g) for every element; stops early when visit returns false.
  void for_each_element(const std::function<bool(const Perm&)>& visit) const;
  Perm random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    int point = 0;
    // transversal[x] is set iff x lies in the basic orbit; it maps point to x.
    std::vector<std::optional<Perm>> transversal;
    std::vector<int> orbit;
  };

  PermGroup(int degree) : degree_(degree) {}
  void rebuild_level(std::size_t i);
  std::vector<const Perm*> level_generators(std::size_t i) const;
  // Returns residue and level where sifting stopped (levels_.size() if it went through).
  std::pair<Perm, std::size_t> strip(const Perm& g, std::size_t from = 0) const;

  int degree_ = 0;
  std::vector<int> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

/// Orbit partition of the group generated by generators; orbits sorted by smallest point.
std::vector<std::vector<int>> orbits(int degree, std::span<const Perm> generators);

/// A permutation of order exactly p in the group, if p divides its order.
std::optional<Perm> element_of_order_p(const PermGroup& group, int p);

/// Largest power of p dividing the group order.
BigInt p_part_of_order(const PermGroup& group, int p);

/// True iff g has cycle type p^(n/p).
bool is_semiregular_cp(const Perm& g, int p);

/// All 24 p^4 elements of the centralizer of <P_gen> in Sym(4p).
std::vector<Perm> centralizer_semiregular_cp(const Perm& P_gen, int p);

/// Element list of the generated group, or nothing if it has more than bound elements.
std::optional<std::vector<Perm>> subgroup_closure(std::span<const Perm> elements, std::size_t bound);

/// Whether the element list is a regular permutation group isomorphic to E4 x Cp.
bool is_regular_e4cp(std::span<const Perm> elements, int p);

bool is_prime(long long x);

}  // namespace cayley4p
