#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwidth/digraph.hpp"
#include "dwidth/path_decomposition.hpp"

namespace dwidth {

// Acyclic digraph on nodes 0..N-1 with precomputed reachability and
// shortest directed distances.
class Dag {
 public:
  Dag() = default;
  // Throws std::invalid_argument on cycles, self-loops, duplicate arcs or bad
  // node ids.
  Dag(int nodes, std::span<const Arc> arcs);

  int size() const { return nodes_; }
  // Sorted lexicographically.
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& children(int i) const { return children_.at(i); }
  const std::vector<int>& parents(int i) const { return parents_.at(i); }
  const std::vector<int>& topological_order() const { return topo_; }
  std::vector<int> roots() const;

  // i ⪯ j: i = j or a directed walk leads from i to j.
  bool precedes(int i, int j) const { return dist_[index(i, j)] >= 0; }
  // Shortest directed distance, -1 when j is not reachable from i.
  int distance(int i, int j) const { return dist_[index(i, j)]; }
  // Nodes of T_{⪰i}, ascending.
  std::vector<int> at_or_below(int i) const;
  bool is_path_shaped() const;

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.nodes_ == b.nodes_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(nodes_) +
           static_cast<std::size_t>(j);
  }

  int nodes_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
  std::vector<int> topo_;
  std::vector<int> dist_;
};

// {m : t1 ⪯ m ⪯ t2}, ascending; empty unless t1 ⪯ t2.
std::vector<int> interval(const Dag& t, int t1, int t2);

struct DagDecomposition {
  Dag dag;
  std::vector<VertexSet> bags;  // bags[i] belongs to node i

  // max |X_i|, no -1 shift.
  int width() const;
  friend bool operator==(const DagDecomposition&, const DagDecomposition&) = default;
};

Fatness fatness(const Digraph& g, const DagDecomposition& d);

enum class DagCondition {
  kNone,
  kBagCount,
  kVertexOutOfRange,
  kCoverage,    // DGW-1
  kConvexity,   // DGW-2
  kArcGuard,    // DGW-3, arc clause
  kRootGuard,   // DGW-3, root clause
};

const char* to_string(DagCondition c);

struct DagReport {
  bool valid = false;
  DagCondition failed = DagCondition::kNone;
  std::string message;
  std::optional<int> vertex;
  std::optional<std::array<int, 3>> triple;
  std::optional<Arc> dag_arc;
  std::optional<int> root;
  std::optional<Arc> escaping_arc;  // arc of G leaving the guarded region
};

DagReport validate_dagdec(const Digraph& g, const DagDecomposition& d);

// How the "consecutive intersection" clause of the lean condition is read on
// a DAG. kSomeArc: some arc (i, j) of T inside [t1, t2] has |X_i ∩ X_j| < k.
// kEveryPath: every directed t1→t2 path of T contains such an arc.
enum class LeanReading { kSomeArc, kEveryPath };

struct DagViolation {
  int t1 = 0;
  int t2 = 0;
  int k = 0;
  VertexSet z1;
  VertexSet z2;
  int distance = 0;  // d_T(t1, t2)
  Separation certificate;
};

struct DagLinkedViolation {
  int t1 = 0;
  int t2 = 0;
  int k = 0;
  int distance = 0;
  Separation certificate;
};

// Empty when lean under `reading`. Otherwise the violation minimising
// d_T(t1, t2), then (t1, t2), then maximising k, then lexicographically
// smallest Z1, then Z2.
std::optional<DagViolation> check_lean_dagdec(const Digraph& g, const DagDecomposition& d,
                                              LeanReading reading = LeanReading::kSomeArc);

// Up to `limit` violations sharing the smallest d_T(t1, t2), in the order
// above.
std::vector<DagViolation> lean_violations_dag(const Digraph& g, const DagDecomposition& d,
                                              LeanReading reading, int limit);

std::optional<DagLinkedViolation> check_linked_dagdec(const Digraph& g,
                                                      const DagDecomposition& d);

// d_v = min{d_T(i, j) : i ∈ [t1, t2], v ∈ X_j} for every vertex v of G.
// Vertices held only by bags that cannot be reached from the interval get
// the value N (one more than any finite distance). Throws
// std::invalid_argument when a vertex is in no bag.
std::vector<std::int64_t> interval_distances(const DagDecomposition& d, int n, int t1, int t2);

// The t1t2 distance of S: the sum of d_v over v ∈ S.
std::int64_t t1t2_distance(const DagDecomposition& d, int n, int t1, int t2, VertexSet s);

// Path-shaped DAG 0 → 1 → ... → r-1 carrying the same bags.
DagDecomposition dpd_to_dagdec(const Digraph& g, const PathDecomposition& d);

// Path meeting property: for a directed path P with its last vertex in X_a,
// its first in X_b and a ⪯ b, every node of [a, b] has a bag meeting P.
bool check_path_meeting_dag(const Digraph& g, const DagDecomposition& d,
                            std::span<const int> path, int a, int b);

enum class DgwStatus {
  kFound,    // width is exact, decomposition validated
  kUnknown,  // a strategy exists at `width` but its decomposition failed validation
  kAboveKMax,
};

struct ExactDgw {
  DgwStatus status = DgwStatus::kAboveKMax;
  int width = 0;
  DagDecomposition decomposition;
  std::string message;
};

// Least k for which k cops have a monotone winning strategy against a visible
// robber, with the DAG decomposition read off that strategy (soft limit: 8
// vertices).
ExactDgw exact_dgw_tiny(const Digraph& g, int k_max);

}  // namespace dwidth
