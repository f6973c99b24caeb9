#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwidth/dag_decomposition.hpp"
#include "dwidth/dpd_lean.hpp"

namespace dwidth {

// X^B_i and X^A_i for every node i of T.
struct DagSplit {
  int t1 = 0;
  int t2 = 0;
  std::vector<VertexSet> b;
  std::vector<VertexSet> a;
  std::vector<Discrepancy> discrepancies;
};

DagSplit split_bags_dag(const Digraph& g, const DagDecomposition& d, const DagViolation& witness,
                        const Separation& separation, const PathSystem& paths);

struct MergeResult {
  DagDecomposition decomposition;
  // Whether the empty copy-A nodes outside T_{⪰t1} had to be dropped.
  bool pruned = false;
  DagReport report;
};

// Copy B of T on nodes 0..N-1, copy A on N..2N-1, the arc t2^B → t1^A and an
// arc from t2^B to every root of copy A. When that fails validation, copy-A
// nodes with empty bags that t1^A does not reach are removed and the result
// validated again; `report` holds the final verdict.
MergeResult merge_dagdecs(const Digraph& g, const Dag& t, const DagSplit& split);

// Minimum-order separation of (Z2, Z1), then minimum t1t2 distance. Vertices
// whose bags all lie in T_{⪰t2} go to the A side unless a path to Z1 forces
// them into B.
Separation choose_separation_dag(const Digraph& g, const DagDecomposition& d,
                                 const DagViolation& witness);

struct DagRefinementStep {
  DagViolation witness;
  Separation separation;
  PathSystem paths;
  std::vector<int> crossing;
  DagSplit split;
  bool pruned = false;
  DagDecomposition result;
  Fatness fatness_before;
  Fatness fatness_after;
  std::vector<Discrepancy> discrepancies;
  int candidate = 0;
  int candidates_tried = 1;
  std::vector<Discrepancy> first_choice;

  bool fatal() const;
};

DagRefinementStep refine_with_dag(const Digraph& g, const DagDecomposition& d,
                                  const DagViolation& witness, const Separation& separation);

// Empty when d is lean under `reading`. Candidate choices as in refine_once,
// with separators restricted to minimum t1t2 distance.
std::optional<DagRefinementStep> refine_once_dag(const Digraph& g, const DagDecomposition& d,
                                                 LeanReading reading = LeanReading::kSomeArc,
                                                 const RefineOptions& options = {});

struct DagLeanifyResult {
  DagDecomposition decomposition;
  std::vector<DagRefinementStep> trace;
  bool lean = false;
  std::string stopped;
  int first_choice_failures = 0;
};

// max_steps = 0 means 10·n·N for the input node count N. The loop also stops
// once T would grow beyond max_nodes nodes.
DagLeanifyResult leanify_dagdec(const Digraph& g, const DagDecomposition& d, int max_steps = 0,
                                LeanReading reading = LeanReading::kSomeArc,
                                int max_nodes = 512, const RefineOptions& options = {});

}  // namespace dwidth
