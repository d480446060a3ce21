#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cayley4p/perm.hpp"

namespace cayley4p {

using Arc = std::pair<int, int>;
/// A binary relation on {0..n-1} given as a list of pairs.
using Relation = std::vector<Arc>;

/// Simple digraph stored as an adjacency matrix. Loops are representable.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const Relation& arcs);

  int order() const { return n_; }
  bool has_arc(int a, int b) const { return adj_[index(a, b)] != 0; }
  void add_arc(int a, int b);
  void remove_arc(int a, int b);
  /// Arcs in row-major order.
  Relation arcs() const;
  std::size_t arc_count() const;
  int out_degree(int a) const;
  int in_degree(int a) const;
  bool has_loop() const;

  /// Image of the graph under a vertex permutation: arc (a,b) becomes (g(a), g(b)).
  Digraph relabeled(const Perm& g) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Color matrix of a graph used by the search routines: 0 non-arc, 1 arc,
/// 2 diagonal without loop, 3 diagonal with loop.
std::vector<int> graph_coloring(const Digraph& g);

}  // namespace cayley4p
