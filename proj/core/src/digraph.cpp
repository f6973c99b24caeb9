#include "dwidth/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dwidth {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > VertexSet::kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." +
                                std::to_string(VertexSet::kMaxVertices));
  }
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n, std::span<const Edge> edges) : n_(n), adj_(n) {
  check_vertex_count(n);
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adj_[e.u].contains(e.v)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

Digraph::Digraph(int n) : n_(n), out_(n), in_(n) { check_vertex_count(n); }

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," +
                                  std::to_string(a.head) + ") has an endpoint outside 0.." +
                                  std::to_string(n - 1));
    }
    if (a.tail == a.head) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(a.tail));
    }
    if (out_[a.tail].contains(a.head)) {
      throw std::invalid_argument("duplicate arc (" + std::to_string(a.tail) + "," +
                                  std::to_string(a.head) + ")");
    }
    out_[a.tail].insert(a.head);
    in_[a.head].insert(a.tail);
    arcs_.push_back(a);
  }
  std::sort(arcs_.begin(), arcs_.end());
}

VertexSet Digraph::reachable_from(VertexSet sources, VertexSet blocked) const {
  VertexSet seen = sources - blocked;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= out_[v];
    next -= seen;
    next -= blocked;
    seen |= next;
    frontier = next;
  }
  return seen;
}

VertexSet Digraph::reaching(VertexSet targets, VertexSet blocked) const {
  VertexSet seen = targets - blocked;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= in_[v];
    next -= seen;
    next -= blocked;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Digraph Digraph::reversed() const {
  std::vector<Arc> rev;
  rev.reserve(arcs_.size());
  for (const Arc& a : arcs_) rev.push_back({a.head, a.tail});
  return Digraph(n_, rev);
}

InducedSubgraph induced_subgraph(const Digraph& g, VertexSet subset) {
  if (!subset.subset_of(g.vertices())) {
    throw std::out_of_range("induced_subgraph: vertex set " + subset.to_string() +
                            " is not contained in 0.." + std::to_string(g.n() - 1));
  }
  InducedSubgraph result;
  result.to_local.assign(g.n(), -1);
  for (int v : subset) {
    result.to_local[v] = static_cast<int>(result.to_original.size());
    result.to_original.push_back(v);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (subset.contains(a.tail) && subset.contains(a.head)) {
      arcs.push_back({result.to_local[a.tail], result.to_local[a.head]});
    }
  }
  result.graph = Digraph(subset.size(), arcs);
  return result;
}

SeparationCheck is_separation(const Digraph& g, VertexSet a, VertexSet b) {
  SeparationCheck check;
  check.order = (a & b).size();
  check.uncovered = g.vertices() - (a | b);
  const VertexSet a_only = a - b;
  const VertexSet b_only = b - a;
  for (int u : a_only) {
    VertexSet hit = g.out(u) & b_only;
    if (!hit.empty()) {
      check.crossing_arc = Arc{u, hit.front()};
      break;
    }
  }
  check.ok = check.uncovered.empty() && !check.crossing_arc;
  return check;
}

GuardCheck guards(const Digraph& g, VertexSet guard, VertexSet region) {
  GuardCheck check;
  const VertexSet overlap = guard & region;
  if (!overlap.empty()) {
    check.overlap = overlap.front();
    return check;
  }
  const VertexSet allowed = guard | region;
  for (int u : region) {
    if (u >= g.n()) continue;
    VertexSet escape = g.out(u) - allowed;
    if (!escape.empty()) {
      check.escaping_arc = Arc{u, escape.front()};
      return check;
    }
  }
  check.ok = true;
  return check;
}

Digraph bidirect(const UndirectedGraph& u) {
  std::vector<Arc> arcs;
  arcs.reserve(u.edges().size() * 2);
  for (const Edge& e : u.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(u.n(), arcs);
}

Digraph relabel(const Digraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  VertexSet image;
  for (int v : perm) {
    if (v < 0 || v >= g.n() || image.contains(v)) {
      throw std::invalid_argument("relabel: not a permutation of 0.." + std::to_string(g.n() - 1));
    }
    image.insert(v);
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph(g.n(), arcs);
}

}  // namespace dwidth
