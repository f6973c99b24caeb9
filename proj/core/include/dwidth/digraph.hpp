#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwidth/vertex_set.hpp"

namespace dwidth {

struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on 0..n-1.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  // Normalized to u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet neighbors(int v) const { return adj_.at(v); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

// Finite simple digraph on the vertex ids 0..n-1. Immutable once built.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  // Throws std::invalid_argument on self-loops, duplicate arcs or ids >= n.
  Digraph(int n, std::span<const Arc> arcs);

  int n() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  VertexSet vertices() const { return VertexSet::first(n_); }
  // Sorted lexicographically.
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(int u, int v) const { return u >= 0 && u < n_ && out_[u].contains(v); }
  VertexSet out(int v) const { return out_.at(v); }
  VertexSet in(int v) const { return in_.at(v); }

  // Vertices reachable from `sources` by directed paths avoiding `blocked`.
  // Sources inside `blocked` are ignored.
  VertexSet reachable_from(VertexSet sources, VertexSet blocked = {}) const;
  // Vertices that reach `targets` by directed paths avoiding `blocked`.
  VertexSet reaching(VertexSet targets, VertexSet blocked = {}) const;

  Digraph reversed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// An ordered pair (A, B) of vertex sets; a separation when A ∪ B = V and no
// arc runs from A∖B to B∖A.
struct Separation {
  VertexSet a;
  VertexSet b;

  VertexSet separator() const { return a & b; }
  int order() const { return separator().size(); }
  bool separates(VertexSet from, VertexSet to) const {
    return from.subset_of(a) && to.subset_of(b);
  }
  friend bool operator==(const Separation&, const Separation&) = default;
};

struct SeparationCheck {
  bool ok = false;
  int order = 0;
  // Set when A ∪ B misses vertices.
  VertexSet uncovered;
  // Set when an arc runs from A∖B to B∖A.
  std::optional<Arc> crossing_arc;
};

struct GuardCheck {
  bool ok = false;
  // Set when W and X share a vertex.
  std::optional<int> overlap;
  // Set when an arc leaves W into V∖(W ∪ X).
  std::optional<Arc> escaping_arc;
};

struct InducedSubgraph {
  Digraph graph;
  // to_original[i] is the id in the parent graph of vertex i in `graph`;
  // vertices keep their relative order.
  std::vector<int> to_original;
  std::vector<int> to_local;  // -1 for vertices outside the subset
};

InducedSubgraph induced_subgraph(const Digraph& g, VertexSet subset);

SeparationCheck is_separation(const Digraph& g, VertexSet a, VertexSet b);

// X guards W: W ∩ X = ∅ and every arc with tail in W has its head in W ∪ X.
GuardCheck guards(const Digraph& g, VertexSet guard, VertexSet region);

Digraph bidirect(const UndirectedGraph& u);

// Relabels vertex v as perm[v].
Digraph relabel(const Digraph& g, std::span<const int> perm);

}  // namespace dwidth
