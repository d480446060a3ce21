#include "cayley4p/graph.hpp"

#include "cayley4p/errors.hpp"

namespace cayley4p {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxDegree) throw InputError("graph order out of range");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, const Relation& arcs) : Digraph(n) {
  for (const auto& [a, b] : arcs) add_arc(a, b);
}

void Digraph::add_arc(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw InputError("arc endpoint out of range");
  adj_[index(a, b)] = 1;
}

void Digraph::remove_arc(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw InputError("arc endpoint out of range");
  adj_[index(a, b)] = 0;
}

Relation Digraph::arcs() const {
  Relation out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (has_arc(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (auto x : adj_) c += x;
  return c;
}

int Digraph::out_degree(int a) const {
  int d = 0;
  for (int b = 0; b < n_; ++b) d += has_arc(a, b) ? 1 : 0;
  return d;
}

int Digraph::in_degree(int a) const {
  int d = 0;
  for (int b = 0; b < n_; ++b) d += has_arc(b, a) ? 1 : 0;
  return d;
}

bool Digraph::has_loop() const {
  for (int a = 0; a < n_; ++a) {
    if (has_arc(a, a)) return true;
  }
  return false;
}

Digraph Digraph::relabeled(const Perm& g) const {
  if (g.degree() != n_) throw InputError("relabeling permutation has wrong degree");
  Digraph out(n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (has_arc(a, b)) out.add_arc(g[a], g[b]);
    }
  }
  return out;
}

std::vector<int> graph_coloring(const Digraph& g) {
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int arc = g.has_arc(a, b) ? 1 : 0;
      colors[static_cast<std::size_t>(a * n + b)] = a == b ? 2 + arc : arc;
    }
  }
  return colors;
}

}  // namespace cayley4p
