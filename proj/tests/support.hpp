#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dwidth/digraph.hpp"
#include "dwidth/path_decomposition.hpp"
#include "oracles/oracles.hpp"

namespace test {

inline dwidth::Digraph digraph(int n, std::vector<std::pair<int, int>> arcs) {
  std::vector<dwidth::Arc> list;
  for (auto [u, v] : arcs) list.push_back({u, v});
  return dwidth::Digraph(n, list);
}

// Directed cycle 0 → 1 → ... → n-1 → 0.
inline dwidth::Digraph cycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return digraph(n, arcs);
}

// The digraph whose arcs are picked by the bits of `mask` over the ordered
// pairs (u, v), u != v, in lexicographic order.
inline dwidth::Digraph from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> arcs;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) arcs.emplace_back(u, v);
      ++bit;
    }
  }
  return digraph(n, arcs);
}

inline oracle::Graph to_oracle(const dwidth::Digraph& g) {
  oracle::Graph out{g.n(), {}};
  for (const dwidth::Arc& a : g.arcs()) out.arcs.emplace_back(a.tail, a.head);
  return out;
}

inline oracle::Graph to_oracle(const dwidth::UndirectedGraph& u) {
  oracle::Graph out{u.n(), {}};
  for (const dwidth::Edge& e : u.edges()) out.arcs.emplace_back(e.u, e.v);
  return out;
}

inline dwidth::UndirectedGraph from_oracle(const oracle::Graph& g) {
  std::vector<dwidth::Edge> edges;
  for (auto [u, v] : g.arcs) edges.push_back({u, v});
  return dwidth::UndirectedGraph(g.n, edges);
}

inline dwidth::PathDecomposition dpd(std::vector<std::vector<int>> bags) {
  dwidth::PathDecomposition d;
  for (const auto& bag : bags) d.bags.push_back(dwidth::VertexSet::of(bag));
  return d;
}

inline std::vector<dwidth::VertexSet> bags(std::vector<std::vector<int>> list) {
  std::vector<dwidth::VertexSet> out;
  for (const auto& bag : list) out.push_back(dwidth::VertexSet::of(bag));
  return out;
}

}  // namespace test
