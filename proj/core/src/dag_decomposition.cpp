#include "dwidth/dag_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "dwidth/menger.hpp"
#include "path_counter.hpp"

namespace dwidth {

Dag::Dag(int nodes, std::span<const Arc> arcs)
    : nodes_(nodes), children_(nodes), parents_(nodes) {
  if (nodes < 0) throw std::invalid_argument("Dag: negative node count");
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= nodes || a.head >= nodes) {
      throw std::invalid_argument("Dag: arc (" + std::to_string(a.tail) + "," +
                                  std::to_string(a.head) + ") has a node outside 0.." +
                                  std::to_string(nodes - 1));
    }
    if (a.tail == a.head) throw std::invalid_argument("Dag: self-loop on node " + std::to_string(a.tail));
    arcs_.push_back(a);
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw std::invalid_argument("Dag: duplicate arc");
  }
  for (const Arc& a : arcs_) {
    children_[a.tail].push_back(a.head);
    parents_[a.head].push_back(a.tail);
  }

  // Kahn's algorithm, smallest ready node first.
  std::vector<int> indegree(nodes);
  for (const Arc& a : arcs_) ++indegree[a.head];
  std::vector<int> ready;
  for (int i = nodes - 1; i >= 0; --i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    const int u = ready.back();
    ready.pop_back();
    topo_.push_back(u);
    for (int c : children_[u]) {
      if (--indegree[c] == 0) {
        ready.push_back(c);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
    }
  }
  if (static_cast<int>(topo_.size()) != nodes) throw std::invalid_argument("Dag: arcs contain a cycle");

  dist_.assign(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes), -1);
  std::deque<int> queue;
  for (int s = 0; s < nodes; ++s) {
    dist_[index(s, s)] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int c : children_[u]) {
        if (dist_[index(s, c)] < 0) {
          dist_[index(s, c)] = dist_[index(s, u)] + 1;
          queue.push_back(c);
        }
      }
    }
  }
}

std::vector<int> Dag::roots() const {
  std::vector<int> out;
  for (int i = 0; i < nodes_; ++i) {
    if (parents_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<int> Dag::at_or_below(int i) const {
  std::vector<int> out;
  for (int j = 0; j < nodes_; ++j) {
    if (precedes(i, j)) out.push_back(j);
  }
  return out;
}

bool Dag::is_path_shaped() const {
  if (static_cast<int>(arcs_.size()) != std::max(0, nodes_ - 1)) return false;
  for (int i = 0; i + 1 < nodes_; ++i) {
    if (arcs_[i].tail != i || arcs_[i].head != i + 1) return false;
  }
  return true;
}

std::vector<int> interval(const Dag& t, int t1, int t2) {
  std::vector<int> out;
  if (!t.precedes(t1, t2)) return out;
  for (int m = 0; m < t.size(); ++m) {
    if (t.precedes(t1, m) && t.precedes(m, t2)) out.push_back(m);
  }
  return out;
}

int DagDecomposition::width() const {
  int widest = 0;
  for (VertexSet bag : bags) widest = std::max(widest, bag.size());
  return widest;
}

Fatness fatness(const Digraph& g, const DagDecomposition& d) { return Fatness(g.n(), d.bags); }

const char* to_string(DagCondition c) {
  switch (c) {
    case DagCondition::kNone: return "none";
    case DagCondition::kBagCount: return "bag-count";
    case DagCondition::kVertexOutOfRange: return "vertex-out-of-range";
    case DagCondition::kCoverage: return "DGW-1";
    case DagCondition::kConvexity: return "DGW-2";
    case DagCondition::kArcGuard: return "DGW-3";
    case DagCondition::kRootGuard: return "DGW-3-root";
  }
  return "unknown";
}

namespace {

// X_{⪰i} for every node.
std::vector<VertexSet> bags_below(const DagDecomposition& d) {
  const Dag& t = d.dag;
  std::vector<VertexSet> below(d.bags);
  const auto& order = t.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int c : t.children(*it)) below[*it] |= below[c];
  }
  return below;
}

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

DagReport validate_dagdec(const Digraph& g, const DagDecomposition& d) {
  DagReport report;
  auto fail = [&report](DagCondition c, std::string message) {
    report.valid = false;
    report.failed = c;
    report.message = std::move(message);
    return report;
  };
  const Dag& t = d.dag;
  if (t.size() == 0 || static_cast<int>(d.bags.size()) != t.size()) {
    return fail(DagCondition::kBagCount, "need one bag per node and at least one node");
  }
  const VertexSet all = g.vertices();
  VertexSet covered;
  for (int i = 0; i < t.size(); ++i) {
    const VertexSet stray = d.bags[i] - all;
    if (!stray.empty()) {
      report.vertex = stray.front();
      return fail(DagCondition::kVertexOutOfRange,
                  "bag of node " + std::to_string(i) + " holds vertex " +
                      std::to_string(stray.front()) + " outside the digraph");
    }
    covered |= d.bags[i];
  }
  if (covered != all) {
    report.vertex = (all - covered).front();
    return fail(DagCondition::kCoverage,
                "vertex " + std::to_string(*report.vertex) + " is in no bag");
  }

  for (int v = 0; v < g.n(); ++v) {
    for (int j = 0; j < t.size(); ++j) {
      if (d.bags[j].contains(v)) continue;
      int above = -1;
      int below = -1;
      for (int i = 0; i < t.size() && (above < 0 || below < 0); ++i) {
        if (!d.bags[i].contains(v)) continue;
        if (above < 0 && t.precedes(i, j)) above = i;
        if (below < 0 && t.precedes(j, i)) below = i;
      }
      if (above >= 0 && below >= 0) {
        report.vertex = v;
        report.triple = std::array<int, 3>{above, j, below};
        return fail(DagCondition::kConvexity,
                    "vertex " + std::to_string(v) + " is in nodes " + std::to_string(above) +
                        " and " + std::to_string(below) + " but not in node " +
                        std::to_string(j) + " between them");
      }
    }
  }

  const std::vector<VertexSet> below = bags_below(d);
  for (const Arc& a : t.arcs()) {
    const VertexSet guard = d.bags[a.tail] & d.bags[a.head];
    const VertexSet region = below[a.head] - d.bags[a.tail];
    const GuardCheck check = guards(g, guard, region);
    if (!check.ok) {
      report.dag_arc = a;
      report.escaping_arc = check.escaping_arc;
      return fail(DagCondition::kArcGuard,
                  "at T-arc " + arc_text(a) + " the guard " + guard.to_string() +
                      " does not guard " + region.to_string() +
                      (check.escaping_arc ? ": arc " + arc_text(*check.escaping_arc) + " escapes"
                                          : ""));
    }
  }
  for (int r : t.roots()) {
    const GuardCheck check = guards(g, VertexSet{}, below[r]);
    if (!check.ok) {
      report.root = r;
      report.escaping_arc = check.escaping_arc;
      return fail(DagCondition::kRootGuard,
                  "region " + below[r].to_string() + " below root " + std::to_string(r) +
                      " is left by arc " + arc_text(*check.escaping_arc));
    }
  }
  report.valid = true;
  return report;
}

namespace {

void require_valid(const Digraph& g, const DagDecomposition& d, const char* routine) {
  const DagReport report = validate_dagdec(g, d);
  if (!report.valid) {
    throw InvalidDecomposition(std::string(routine) + ": " + to_string(report.failed) + ": " +
                               report.message);
  }
}

// Largest k for which the "small consecutive intersection" escape fails,
// i.e. every relevant T-arc inside [t1, t2] keeps at least k shared vertices.
int intersection_bound(const DagDecomposition& d, const std::vector<int>& nodes, int t1, int t2,
                       LeanReading reading) {
  constexpr int kUnbounded = std::numeric_limits<int>::max();
  const Dag& t = d.dag;
  if (t1 == t2) return kUnbounded;
  if (reading == LeanReading::kSomeArc) {
    int bound = kUnbounded;
    for (int i : nodes) {
      for (int j : t.children(i)) {
        if (t.precedes(j, t2)) bound = std::min(bound, (d.bags[i] & d.bags[j]).size());
      }
    }
    return bound;
  }
  // Widest t1→t2 path, bottleneck = smallest intersection along it.
  std::vector<int> best(t.size(), -1);
  best[t1] = kUnbounded;
  for (int u : t.topological_order()) {
    if (best[u] < 0 || !t.precedes(u, t2)) continue;
    for (int c : t.children(u)) {
      if (!t.precedes(c, t2)) continue;
      best[c] = std::max(best[c], std::min(best[u], (d.bags[u] & d.bags[c]).size()));
    }
  }
  return best[t2];
}

std::vector<std::pair<int, int>> ordered_pairs(const Dag& t) {
  std::vector<std::tuple<int, int, int>> pairs;
  for (int t1 = 0; t1 < t.size(); ++t1) {
    for (int t2 = 0; t2 < t.size(); ++t2) {
      if (t.precedes(t1, t2)) pairs.emplace_back(t.distance(t1, t2), t1, t2);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<int, int>> out;
  out.reserve(pairs.size());
  for (const auto& [dist, t1, t2] : pairs) out.emplace_back(t1, t2);
  return out;
}

}  // namespace

std::vector<DagViolation> lean_violations_dag(const Digraph& g, const DagDecomposition& d,
                                              LeanReading reading, int limit) {
  require_valid(g, d, "lean_violations_dag");
  const Dag& t = d.dag;
  detail::PathCounter counter(g);
  std::vector<DagViolation> found;
  for (const auto& [t1, t2] : ordered_pairs(t)) {
    if (!found.empty() && t.distance(t1, t2) > found.front().distance) break;
    if (d.bags[t1].empty() || d.bags[t2].empty()) continue;
    const std::vector<int> nodes = interval(t, t1, t2);
    const int k_max = std::min({d.bags[t1].size(), d.bags[t2].size(),
                                intersection_bound(d, nodes, t1, t2, reading)});
    for (int k = k_max; k >= 1; --k) {
      for_each_subset_of_size(d.bags[t1], k, [&](VertexSet z1) {
        return for_each_subset_of_size(d.bags[t2], k, [&](VertexSet z2) {
          if (counter.count(z2, z1) >= k) return true;
          found.push_back(
              DagViolation{t1, t2, k, z1, z2, t.distance(t1, t2), min_separator(g, z2, z1)});
          return static_cast<int>(found.size()) < limit;
        });
      });
      if (static_cast<int>(found.size()) >= limit) return found;
    }
  }
  return found;
}

std::optional<DagViolation> check_lean_dagdec(const Digraph& g, const DagDecomposition& d,
                                              LeanReading reading) {
  std::vector<DagViolation> found = lean_violations_dag(g, d, reading, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<DagLinkedViolation> check_linked_dagdec(const Digraph& g,
                                                      const DagDecomposition& d) {
  require_valid(g, d, "check_linked_dagdec");
  const Dag& t = d.dag;
  for (const auto& [t1, t2] : ordered_pairs(t)) {
    int smallest = std::numeric_limits<int>::max();
    for (int i : interval(t, t1, t2)) smallest = std::min(smallest, d.bags[i].size());
    const int paths = count_disjoint_paths(g, d.bags[t2], d.bags[t1]);
    if (paths < smallest) {
      return DagLinkedViolation{t1, t2, paths + 1, t.distance(t1, t2),
                                min_separator(g, d.bags[t2], d.bags[t1])};
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> interval_distances(const DagDecomposition& d, int n, int t1, int t2) {
  const Dag& t = d.dag;
  const std::vector<int> nodes = interval(t, t1, t2);
  if (nodes.empty()) throw std::invalid_argument("interval_distances: t1 does not precede t2");
  std::vector<int> node_dist(t.size(), -1);
  for (int j = 0; j < t.size(); ++j) {
    for (int i : nodes) {
      const int dij = t.distance(i, j);
      if (dij >= 0 && (node_dist[j] < 0 || dij < node_dist[j])) node_dist[j] = dij;
    }
  }
  const std::int64_t unreachable = t.size();
  std::vector<std::int64_t> dv(n, -1);
  for (int j = 0; j < t.size(); ++j) {
    const std::int64_t value = node_dist[j] < 0 ? unreachable : node_dist[j];
    for (int v : d.bags[j]) {
      if (v < n && (dv[v] < 0 || value < dv[v])) dv[v] = value;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (dv[v] < 0) {
      throw std::invalid_argument("interval_distances: vertex " + std::to_string(v) +
                                  " is in no bag");
    }
  }
  return dv;
}

std::int64_t t1t2_distance(const DagDecomposition& d, int n, int t1, int t2, VertexSet s) {
  const std::vector<std::int64_t> dv = interval_distances(d, n, t1, t2);
  std::int64_t total = 0;
  for (int v : s) {
    if (v >= n) throw std::invalid_argument("t1t2_distance: vertex outside the digraph");
    total += dv[v];
  }
  return total;
}

DagDecomposition dpd_to_dagdec(const Digraph& g, const PathDecomposition& d) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < d.size(); ++i) arcs.push_back({i, i + 1});
  DagDecomposition out{Dag(d.size(), arcs), d.bags};
  const DagReport report = validate_dagdec(g, out);
  if (!report.valid) {
    throw InvalidDecomposition("dpd_to_dagdec: " + std::string(to_string(report.failed)) + ": " +
                               report.message);
  }
  return out;
}

bool check_path_meeting_dag(const Digraph& g, const DagDecomposition& d,
                            std::span<const int> path, int a, int b) {
  if (path.size() < 2) throw std::invalid_argument("check_path_meeting_dag: path needs two vertices");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_arc(path[i], path[i + 1])) {
      throw std::invalid_argument("check_path_meeting_dag: not a directed path of the digraph");
    }
  }
  const VertexSet on_path = VertexSet::of(path);
  if (on_path.size() != static_cast<int>(path.size())) {
    throw std::invalid_argument("check_path_meeting_dag: path repeats a vertex");
  }
  const Dag& t = d.dag;
  if (a < 0 || b < 0 || a >= t.size() || b >= t.size() || !t.precedes(a, b)) {
    throw std::invalid_argument("check_path_meeting_dag: need a ⪯ b");
  }
  if (!d.bags[a].contains(path.back()) || !d.bags[b].contains(path.front())) {
    throw std::invalid_argument("check_path_meeting_dag: last vertex must be in X_a, first in X_b");
  }
  for (int i : interval(t, a, b)) {
    if (!d.bags[i].intersects(on_path)) return false;
  }
  return true;
}

}  // namespace dwidth
