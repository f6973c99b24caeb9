#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwidth/menger.hpp"
#include "dwidth/path_decomposition.hpp"

namespace dwidth {

// A refinement step that did not behave as the correctness argument says it
// must. Fatal discrepancies (invalid result, no fatness decrease) stop the
// leanification loop; the others are recorded and the loop goes on.
struct Discrepancy {
  std::string check;
  std::string detail;
  bool fatal = false;
};

// Check ids used in Discrepancy::check.
namespace checks {
inline constexpr const char* kPathEndpoints = "path-endpoints";
inline constexpr const char* kSingleCrossing = "single-crossing";
inline constexpr const char* kJunction = "junction-holds-separator";
inline constexpr const char* kSplitValid = "split-valid";
inline constexpr const char* kTwinInSeparator = "twin-in-separator";
inline constexpr const char* kDoubleShrink = "double-shrink";
inline constexpr const char* kCopySize = "copy-size";
inline constexpr const char* kOutsideUnchanged = "outside-unchanged";
inline constexpr const char* kResultValid = "result-valid";
inline constexpr const char* kFatnessDecrease = "fatness-decrease";
inline constexpr const char* kWidth = "width";
}  // namespace checks

// X^B_0..X^B_{t2} (`before`, a decomposition of G[B]) and X^A_{t1}..X^A_{r-1}
// (`after`, a decomposition of G[A]).
struct SplitBags {
  int t1 = 0;
  int t2 = 0;
  std::vector<VertexSet> before;
  std::vector<VertexSet> after;
  std::vector<Discrepancy> discrepancies;
};

// X^B_i = (X_i ∩ B) ∪ {p_j : X_i ∩ A ∩ P_j ≠ ∅} and symmetrically for X^A_i.
// `paths` must cross the separator once each.
SplitBags split_bags(const Digraph& g, const PathDecomposition& d, const DpdViolation& witness,
                     const Separation& separation, const PathSystem& paths);

// ⟨X^B_0..X^B_{t2}, X^A_{t1}..X^A_{r-1}⟩. Throws InvalidDecomposition when
// the result is not a decomposition of g.
PathDecomposition concatenate(const Digraph& g, const SplitBags& split);

// Minimum-order separation of (Z2, Z1); among those, minimum summed distance
// from the bags [t1, t2]. Vertices living only in bags after t2 go to the A
// side unless a path to Z1 forces them into B.
Separation choose_separation(const Digraph& g, const PathDecomposition& d,
                             const DpdViolation& witness);

// The correctness argument leaves open which minimal violation, which
// minimum separator and which side assignment of the free vertices to use.
// With `explore` set, a step whose first choice fails any check retries the
// other choices in a fixed order and commits to the first one that passes
// every check.
struct RefineOptions {
  bool explore = true;
  int max_witnesses = 32;
  int max_separators = 64;
};

struct RefinementStep {
  DpdViolation witness;
  Separation separation;
  PathSystem paths;
  std::vector<int> crossing;  // p_j per path
  SplitBags split;
  PathDecomposition result;
  Fatness fatness_before;
  Fatness fatness_after;
  std::vector<Discrepancy> discrepancies;
  // 0 when the first choice was kept; otherwise the position of the
  // committed choice and the first choice's discrepancies.
  int candidate = 0;
  int candidates_tried = 1;
  std::vector<Discrepancy> first_choice;

  bool fatal() const;
};

// One refinement for a given violation and separation, with all checks.
RefinementStep refine_with(const Digraph& g, const PathDecomposition& d,
                           const DpdViolation& witness, const Separation& separation);

// Empty when d is lean; otherwise one refinement on the violation reported
// by check_lean_dpd. Never throws on a failed correctness check: those end
// up in `discrepancies`. Throws InvalidDecomposition on invalid input.
std::optional<RefinementStep> refine_once(const Digraph& g, const PathDecomposition& d,
                                         const RefineOptions& options = {});

struct LeanifyResult {
  PathDecomposition decomposition;
  std::vector<RefinementStep> trace;
  bool lean = false;
  // Why the loop stopped early: step cap reached or a fatal step.
  std::string stopped;
  // Steps whose first choice failed a check.
  int first_choice_failures = 0;
};

// Applies refine_once until the decomposition is lean. max_steps = 0 means
// 10·n·r for the input length r.
LeanifyResult leanify_dpd(const Digraph& g, const PathDecomposition& d, int max_steps = 0,
                          const RefineOptions& options = {});

}  // namespace dwidth
