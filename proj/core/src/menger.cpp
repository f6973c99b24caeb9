#include "dwidth/menger.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flow_network.hpp"

namespace dwidth {

namespace {

using detail::FlowNetwork;
using Value = FlowNetwork::Value;

// Vertex v becomes entry 2v and exit 2v+1 joined by one internal edge; G's
// arcs, the source edges and the sink edges are uncapacitated, so every
// finite cut consists of internal edges only.
struct SplitNetwork {
  FlowNetwork net;
  int source;
  int sink;

  static int entry(int v) { return 2 * v; }
  static int exit(int v) { return 2 * v + 1; }

  SplitNetwork(const Digraph& g, VertexSet from, VertexSet to,
               std::span<const Value> internal_cap, std::span<const Value> internal_cost)
      : net(2 * g.n() + 2), source(2 * g.n()), sink(2 * g.n() + 1) {
    const VertexSet all = g.vertices();
    if (!from.subset_of(all) || !to.subset_of(all)) {
      throw std::out_of_range("terminal set " + (from | to).to_string() +
                              " not contained in the vertex set");
    }
    for (int v = 0; v < g.n(); ++v) {
      net.add_edge(entry(v), exit(v), internal_cap[v], internal_cost[v]);
    }
    for (const Arc& a : g.arcs()) net.add_edge(exit(a.tail), entry(a.head), FlowNetwork::kInfinity);
    for (int x : from) net.add_edge(source, entry(x), FlowNetwork::kInfinity);
    for (int y : to) net.add_edge(exit(y), sink, FlowNetwork::kInfinity);
  }

  PathSystem extract_paths() const {
    PathSystem system;
    for (const auto& walk : net.decompose(source, sink)) {
      std::vector<int> path;
      // walk = source, entry(x), exit(x), entry(.), ..., exit(y), sink
      for (std::size_t i = 1; i + 1 < walk.size(); i += 2) path.push_back(walk[i] / 2);
      system.paths.push_back(std::move(path));
    }
    std::sort(system.paths.begin(), system.paths.end());
    return system;
  }

  Separation cut(int n) const {
    const std::vector<bool> reach = net.residual_reachable(source);
    Separation sep;
    for (int v = 0; v < n; ++v) {
      if (reach[entry(v)]) sep.a.insert(v);
      if (!reach[exit(v)]) sep.b.insert(v);
    }
    return sep;
  }
};

std::vector<Value> unit(int n, Value value) { return std::vector<Value>(n, value); }

}  // namespace

VertexSet PathSystem::vertices() const {
  VertexSet all;
  for (const auto& p : paths) all |= VertexSet::of(p);
  return all;
}

std::vector<int> PathSystem::crossing_vertices(VertexSet separator) const {
  std::vector<int> crossing;
  crossing.reserve(paths.size());
  for (const auto& p : paths) {
    const VertexSet hit = VertexSet::of(p) & separator;
    crossing.push_back(hit.size() == 1 ? hit.front() : -1);
  }
  return crossing;
}

bool is_valid_path_system(const Digraph& g, const PathSystem& system, VertexSet from,
                          VertexSet to) {
  VertexSet used;
  for (const auto& p : system.paths) {
    if (p.empty()) return false;
    if (!from.contains(p.front()) || !to.contains(p.back())) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.n() || used.contains(p[i])) return false;
      used.insert(p[i]);
      if (i + 1 < p.size() && !g.has_arc(p[i], p[i + 1])) return false;
    }
  }
  return true;
}

int count_disjoint_paths(const Digraph& g, VertexSet from, VertexSet to) {
  SplitNetwork split(g, from, to, unit(g.n(), 1), unit(g.n(), 0));
  return static_cast<int>(split.net.max_flow(split.source, split.sink));
}

PathSystem max_disjoint_paths(const Digraph& g, VertexSet from, VertexSet to) {
  SplitNetwork split(g, from, to, unit(g.n(), 1), unit(g.n(), 0));
  const Value flow = split.net.max_flow(split.source, split.sink);
  PathSystem system = split.extract_paths();
  const Separation sep = split.cut(g.n());
  if (system.size() != flow || sep.order() != flow) {
    throw std::logic_error("max_disjoint_paths: flow " + std::to_string(flow) +
                           " disagrees with path count " + std::to_string(system.size()) +
                           " or cut order " + std::to_string(sep.order()));
  }
  return system;
}

Separation min_separator(const Digraph& g, VertexSet from, VertexSet to) {
  SplitNetwork split(g, from, to, unit(g.n(), 1), unit(g.n(), 0));
  const Value flow = split.net.max_flow(split.source, split.sink);
  Separation sep = split.cut(g.n());
  if (sep.order() != flow) {
    throw std::logic_error("min_separator: cut order " + std::to_string(sep.order()) +
                           " differs from flow value " + std::to_string(flow));
  }
  return sep;
}

PathSystem min_vertex_path_system(const Digraph& g, VertexSet from, VertexSet to, int count) {
  if (count < 0) throw std::invalid_argument("min_vertex_path_system: negative path count");
  SplitNetwork split(g, from, to, unit(g.n(), 1), unit(g.n(), 1));
  const auto [flow, cost] = split.net.min_cost_flow(split.source, split.sink, count);
  if (flow < count) {
    throw std::invalid_argument("min_vertex_path_system: only " + std::to_string(flow) +
                                " disjoint paths exist, " + std::to_string(count) +
                                " requested");
  }
  PathSystem system = split.extract_paths();
  if (system.total_vertices() != cost) {
    throw std::logic_error("min_vertex_path_system: extracted paths use " +
                           std::to_string(system.total_vertices()) + " vertices, flow cost is " +
                           std::to_string(cost));
  }
  return system;
}

Separation min_separator_weighted(const Digraph& g, VertexSet from, VertexSet to,
                                  std::span<const std::int64_t> weight) {
  if (static_cast<int>(weight.size()) != g.n()) {
    throw std::invalid_argument("min_separator_weighted: need one weight per vertex");
  }
  Value max_weight = 0;
  for (Value w : weight) {
    if (w < 0) throw std::invalid_argument("min_separator_weighted: negative weight");
    max_weight = std::max(max_weight, w);
  }
  // Any separator weighs at most n·max_weight < big, so a minimum cut under
  // capacities big + w(v) has minimum order first and minimum weight second.
  const Value big = static_cast<Value>(g.n()) * max_weight + 1;
  if (big > FlowNetwork::kInfinity / (g.n() + 1)) {
    throw std::overflow_error("min_separator_weighted: weights too large");
  }
  std::vector<Value> cap(g.n());
  for (int v = 0; v < g.n(); ++v) cap[v] = big + weight[v];
  SplitNetwork split(g, from, to, cap, unit(g.n(), 0));
  const Value flow = split.net.max_flow(split.source, split.sink);
  Separation sep = split.cut(g.n());
  Value sep_weight = 0;
  for (int v : sep.separator()) sep_weight += weight[v];
  if (flow != static_cast<Value>(sep.order()) * big + sep_weight) {
    throw std::logic_error("min_separator_weighted: cut capacity differs from flow value");
  }
  return sep;
}

std::vector<VertexSet> min_order_separators(const Digraph& g, VertexSet from, VertexSet to,
                                            int limit) {
  const int order = count_disjoint_paths(g, from, to);
  std::vector<VertexSet> out;
  for_each_subset_of_size(g.vertices(), order, [&](VertexSet s) {
    if (!g.reachable_from(from, s).intersects(to - s)) out.push_back(s);
    return static_cast<int>(out.size()) < limit;
  });
  return out;
}

Separation orient_separation(const Digraph& g, VertexSet separator, VertexSet from, VertexSet to,
                             VertexSet prefer_from) {
  const VertexSet forced_from = g.reachable_from(from, separator);
  const VertexSet forced_to = g.reaching(to, separator);
  if (forced_from.intersects(forced_to)) {
    throw std::invalid_argument("orient_separation: " + separator.to_string() +
                                " does not separate the two sets");
  }
  const VertexSet strict_a =
      g.reachable_from(forced_from | (prefer_from - forced_to), separator);
  const VertexSet all = g.vertices();
  return Separation{strict_a | separator, all - strict_a};
}

}  // namespace dwidth
