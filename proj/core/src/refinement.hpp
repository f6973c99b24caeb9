#pragma once

#include <span>
#include <string>
#include <vector>

#include "dwidth/dpd_lean.hpp"

namespace dwidth::detail {

// X^A_i and X^B_i for every position i of `bags`.
struct Copies {
  std::vector<VertexSet> a;
  std::vector<VertexSet> b;
};

Copies split_copies(std::span<const VertexSet> bags, const Separation& separation,
                    const PathSystem& paths);

// Each path starts in X_{t2}, ends in X_{t1}, touches each of these bags
// once, and meets the separator in exactly one vertex.
void check_paths(std::span<const VertexSet> bags, int t1, int t2, const PathSystem& paths,
                 VertexSet separator, std::vector<Discrepancy>& out);

// S ⊆ X^B_{t2} ∩ X^A_{t1}.
void check_junction(const Copies& copies, int t1, int t2, VertexSet separator,
                    std::vector<Discrepancy>& out);

// Twin and size properties of the copies: over all positions, a copy of full
// size forces its twin into S; over `interval`, copies never grow, every bag
// has more than s and at least k vertices, and some bag shrinks in both.
void check_copies(std::span<const VertexSet> bags, const Copies& copies, VertexSet separator,
                  std::span<const int> interval, int k, std::vector<Discrepancy>& out);

// Bags of a decomposition of g restricted to `subset` and renamed into the
// ids of induced_subgraph(g, subset).
std::vector<VertexSet> localize(std::span<const VertexSet> bags, const InducedSubgraph& sub);

void report(std::vector<Discrepancy>& out, const char* check, std::string detail,
            bool fatal = false);

}  // namespace dwidth::detail
