#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dwidth::detail {

// Small residual network with integral capacities and costs. Edges are kept
// in insertion order; every search scans them in that order so results are
// reproducible.
class FlowNetwork {
 public:
  using Value = std::int64_t;
  static constexpr Value kInfinity = Value{1} << 50;

  struct Edge {
    int from;
    int to;
    Value cap;
    Value cost;
    Value flow;
  };

  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  int num_nodes() const { return static_cast<int>(adj_.size()); }

  int add_edge(int from, int to, Value cap, Value cost = 0) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({from, to, cap, cost, 0});
    edges_.push_back({to, from, 0, -cost, 0});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<int>& out_edges(int node) const { return adj_[node]; }

  // Edmonds-Karp.
  Value max_flow(int source, int sink, Value limit = kInfinity) {
    Value total = 0;
    std::vector<int> via(adj_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int u = queue.front();
        queue.pop_front();
        for (int id : adj_[u]) {
          const Edge& e = edges_[id];
          if (e.cap - e.flow > 0 && via[e.to] == -1) {
            via[e.to] = id;
            queue.push_back(e.to);
          }
        }
      }
      if (via[sink] == -1) break;
      total += augment(source, sink, via, limit - total);
    }
    return total;
  }

  // Successive shortest paths (Bellman-Ford on the residual network, so
  // negative residual costs are fine). Sends at most `limit` units; returns
  // {flow, cost}.
  std::pair<Value, Value> min_cost_flow(int source, int sink, Value limit) {
    Value total = 0;
    Value total_cost = 0;
    const int nodes = num_nodes();
    std::vector<Value> dist(nodes);
    std::vector<int> via(nodes);
    while (total < limit) {
      std::fill(dist.begin(), dist.end(), std::numeric_limits<Value>::max());
      std::fill(via.begin(), via.end(), -1);
      dist[source] = 0;
      via[source] = -2;
      for (int round = 0; round < nodes; ++round) {
        bool changed = false;
        for (int u = 0; u < nodes; ++u) {
          if (dist[u] == std::numeric_limits<Value>::max()) continue;
          for (int id : adj_[u]) {
            const Edge& e = edges_[id];
            if (e.cap - e.flow > 0 && dist[u] + e.cost < dist[e.to]) {
              dist[e.to] = dist[u] + e.cost;
              via[e.to] = id;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (via[sink] == -1) break;
      const Value pushed = augment(source, sink, via, limit - total);
      total += pushed;
      total_cost += pushed * dist[sink];
    }
    return {total, total_cost};
  }

  // Nodes reachable from `source` through edges with residual capacity.
  std::vector<bool> residual_reachable(int source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.cap - e.flow > 0 && !seen[e.to]) {
          seen[e.to] = true;
          queue.push_back(e.to);
        }
      }
    }
    return seen;
  }

  // Splits the current integral flow into source→sink node walks, always
  // leaving a node through its lowest-numbered edge that still carries flow.
  // Closed loops met along the way are cut out.
  std::vector<std::vector<int>> decompose(int source, int sink) const {
    std::vector<Value> remaining(edges_.size(), 0);
    for (std::size_t id = 0; id < edges_.size(); id += 2) remaining[id] = edges_[id].flow;
    std::vector<std::vector<int>> walks;
    while (true) {
      std::vector<int> walk{source};
      std::vector<int> position(adj_.size(), -1);
      position[source] = 0;
      int u = source;
      while (u != sink) {
        int next_edge = -1;
        for (int id : adj_[u]) {
          if (id % 2 == 0 && remaining[id] > 0) {
            next_edge = id;
            break;
          }
        }
        if (next_edge == -1) break;
        --remaining[next_edge];
        u = edges_[next_edge].to;
        if (position[u] != -1) {
          for (std::size_t i = position[u] + 1; i < walk.size(); ++i) position[walk[i]] = -1;
          walk.resize(position[u] + 1);
        } else {
          position[u] = static_cast<int>(walk.size());
          walk.push_back(u);
        }
      }
      if (u != sink) break;
      walks.push_back(std::move(walk));
    }
    return walks;
  }

 private:
  Value augment(int source, int sink, const std::vector<int>& via, Value cap_left) {
    Value push = cap_left;
    for (int v = sink; v != source; v = edges_[via[v]].from) {
      const Edge& e = edges_[via[v]];
      push = std::min(push, e.cap - e.flow);
    }
    for (int v = sink; v != source; v = edges_[via[v]].from) {
      edges_[via[v]].flow += push;
      edges_[via[v] ^ 1].flow -= push;
    }
    return push;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace dwidth::detail
