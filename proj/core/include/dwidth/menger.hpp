#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dwidth/digraph.hpp"

namespace dwidth {

// Vertex-disjoint directed paths. A single vertex is a path of length zero.
struct PathSystem {
  std::vector<std::vector<int>> paths;

  int size() const { return static_cast<int>(paths.size()); }
  VertexSet vertices() const;
  // q: number of vertices used by all paths together.
  int total_vertices() const { return vertices().size(); }
  // For each path, the unique vertex it shares with `separator`, or -1 when
  // it meets the separator zero or several times.
  std::vector<int> crossing_vertices(VertexSet separator) const;
  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

// True when every path is a directed path of g starting in `from` and ending
// in `to`, and the paths are pairwise vertex-disjoint.
bool is_valid_path_system(const Digraph& g, const PathSystem& system, VertexSet from,
                          VertexSet to);

// Maximum number of vertex-disjoint directed paths from X to Y.
int count_disjoint_paths(const Digraph& g, VertexSet from, VertexSet to);

// A maximum family of vertex-disjoint X→Y paths. Vertices of X ∩ Y yield
// zero-length paths. Paths are ordered by their first vertex.
PathSystem max_disjoint_paths(const Digraph& g, VertexSet from, VertexSet to);

// A separation (A, B) with X ⊆ A and Y ⊆ B of minimum order. A is the set
// of vertices whose entry is reachable in the residual network of a maximum
// flow, so A∖B is as small as possible.
Separation min_separator(const Digraph& g, VertexSet from, VertexSet to);

// Among all `count`-path disjoint X→Y systems, one minimising the total
// number of vertices used. Throws std::invalid_argument when fewer than
// `count` disjoint paths exist.
PathSystem min_vertex_path_system(const Digraph& g, VertexSet from, VertexSet to, int count);

// Among all minimum-order separations of (X, Y), one minimising the summed
// weight of the separator. weight.size() must equal g.n(); weights are
// non-negative.
Separation min_separator_weighted(const Digraph& g, VertexSet from, VertexSet to,
                                  std::span<const std::int64_t> weight);

// Every separator S of minimum order for (X, Y), i.e. every S of that size
// such that G∖S has no path from X∖S to Y∖S, in lexicographic order; at most
// `limit` of them.
std::vector<VertexSet> min_order_separators(const Digraph& g, VertexSet from, VertexSet to,
                                            int limit);

// The separation with separator S that puts as much of `prefer_from` as
// possible on the X side: A∖B is everything reachable in G∖S from
// (X∖S) ∪ (prefer_from∖C), where C is the set of vertices that reach Y∖S in
// G∖S. Throws std::invalid_argument when S does not separate X from Y.
Separation orient_separation(const Digraph& g, VertexSet separator, VertexSet from, VertexSet to,
                             VertexSet prefer_from);

}  // namespace dwidth
