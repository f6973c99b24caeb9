#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwidth/digraph.hpp"

namespace dwidth {

// A sequence of bags X_0..X_{r-1}. Bag positions are 0-based everywhere in
// the library and in the JSON formats.
struct PathDecomposition {
  std::vector<VertexSet> bags;

  int size() const { return static_cast<int>(bags.size()); }
  // max |X_i| - 1; -1 for a sequence of empty bags.
  int width() const;
  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

// (f_n, f_{n-1}, ..., f_0) with f_i the number of bags of size i, compared
// lexicographically from f_n down.
class Fatness {
 public:
  Fatness() = default;
  Fatness(int n, std::span<const VertexSet> bags);

  int n() const { return static_cast<int>(counts_.size()) - 1; }
  int count_of_size(int size) const { return counts_.at(n() - size); }
  // counts()[0] is f_n.
  const std::vector<int>& counts() const { return counts_; }
  std::string to_string() const;

  friend auto operator<=>(const Fatness&, const Fatness&) = default;

 private:
  std::vector<int> counts_;
};

Fatness fatness(const Digraph& g, const PathDecomposition& d);

enum class DpdCondition {
  kNone,
  kNoBags,
  kVertexOutOfRange,
  kCoverage,  // DPW-1
  kConvexity, // DPW-2
  kArc,       // DPW-3
};

const char* to_string(DpdCondition c);

struct DpdReport {
  bool valid = false;
  DpdCondition failed = DpdCondition::kNone;
  std::string message;
  std::optional<int> vertex;
  std::optional<std::array<int, 3>> triple;
  std::optional<Arc> arc;
  // Set when the interval form of DPW-2 or the cut form of DPW-3 disagrees
  // with the direct form on this instance.
  bool equivalence_alarm = false;
  std::string alarm;
};

DpdReport validate_dpd(const Digraph& g, const PathDecomposition& d);

// Thrown by routines whose precondition is a valid decomposition.
class InvalidDecomposition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quadruple (t1, t2, Z1, Z2) with |Z1| = |Z2| = k such that fewer than k
// disjoint Z2→Z1 paths exist although every consecutive intersection between
// t1 and t2 has at least k vertices. `certificate` separates (Z2, Z1).
struct DpdViolation {
  int t1 = 0;
  int t2 = 0;
  int k = 0;
  VertexSet z1;
  VertexSet z2;
  Separation certificate;
};

// A pair t1 <= t2 with fewer than k disjoint X_t2→X_t1 paths while every bag
// in [t1, t2] has at least k vertices.
struct LinkedViolation {
  int t1 = 0;
  int t2 = 0;
  int k = 0;
  Separation certificate;
};

// Empty when d is lean. Otherwise the violation minimising t2 - t1, then t1,
// then maximising k, then lexicographically smallest Z1, then Z2.
std::optional<DpdViolation> check_lean_dpd(const Digraph& g, const PathDecomposition& d);

// Up to `limit` violations sharing the smallest t2 - t1, in the order above.
std::vector<DpdViolation> lean_violations(const Digraph& g, const PathDecomposition& d,
                                          int limit);

// Empty when d is linked. Otherwise the violation minimising t2 - t1, then t1;
// k is one more than the number of disjoint paths.
std::optional<LinkedViolation> check_linked_dpd(const Digraph& g, const PathDecomposition& d);

struct ExactDpw {
  int width = -1;
  PathDecomposition decomposition;
};

// Directed pathwidth with an optimal decomposition (soft limit: 20 vertices).
ExactDpw exact_dpw(const Digraph& g);

// For a directed path P = v_1..v_l with v_l ∈ X_a and v_1 ∈ X_b, a <= b:
// whether every bag X_i with a <= i <= b meets P. Throws std::invalid_argument
// when the precondition fails.
bool check_path_meeting(const Digraph& g, const PathDecomposition& d, std::span<const int> path,
                        int a, int b);

// Drops bags equal to or contained in a neighbouring bag until none is left.
// Throws InvalidDecomposition on invalid input.
PathDecomposition normalize_dpd(const Digraph& g, const PathDecomposition& d);

}  // namespace dwidth
