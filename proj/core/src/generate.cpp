#include "dwidth/generate.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace dwidth {

const char* to_string(Model m) {
  switch (m) {
    case Model::kGnp: return "gnp";
    case Model::kRandomDag: return "random-dag";
    case Model::kTournament: return "tournament";
    case Model::kBidirectGnp: return "bidirect-gnp";
    case Model::kBidirectFamily: return "bidirect-family";
  }
  return "?";
}

Model model_from_string(std::string_view name) {
  for (Model m : {Model::kGnp, Model::kRandomDag, Model::kTournament, Model::kBidirectGnp,
                  Model::kBidirectFamily}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown model \"" + std::string(name) +
                              "\" (gnp, random-dag, tournament, bidirect-gnp, bidirect-family)");
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: bound must be positive");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

UndirectedGraph family_graph(std::string_view family, int n) {
  if (n < 0) throw std::invalid_argument("family_graph: n must be non-negative");
  std::vector<Edge> edges;
  int vertices = n;
  if (family == "path") {
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  } else if (family == "cycle") {
    if (n < 3) throw std::invalid_argument("family_graph: a cycle needs n >= 3");
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  } else if (family == "clique") {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
  } else if (family == "star") {
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
  } else if (family == "grid") {
    vertices = n * n;
    if (vertices > VertexSet::kMaxVertices) {
      throw std::invalid_argument("family_graph: grid side too large");
    }
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c + 1 < n) edges.push_back({r * n + c, r * n + c + 1});
        if (r + 1 < n) edges.push_back({r * n + c, (r + 1) * n + c});
      }
    }
  } else {
    throw std::invalid_argument("unknown family \"" + std::string(family) +
                                "\" (path, cycle, clique, star, grid)");
  }
  return UndirectedGraph(vertices, edges);
}

Digraph generate(const GeneratorSpec& spec) {
  const int n = spec.n;
  if (n < 0 || n > VertexSet::kMaxVertices) {
    throw std::invalid_argument("generate: n must lie in [0, " +
                                std::to_string(VertexSet::kMaxVertices) + "]");
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw std::invalid_argument("generate: p must lie in [0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Arc> arcs;
  switch (spec.model) {
    case Model::kGnp:
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u != v && unit(rng) < spec.p) arcs.push_back({u, v});
        }
      }
      break;
    case Model::kRandomDag: {
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      for (int i = n - 1; i > 0; --i) std::swap(order[i], order[below(rng, i + 1)]);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (unit(rng) < spec.p) arcs.push_back({order[i], order[j]});
        }
      }
      break;
    }
    case Model::kTournament:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng() >> 63) {
            arcs.push_back({u, v});
          } else {
            arcs.push_back({v, u});
          }
        }
      }
      break;
    case Model::kBidirectGnp: {
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (unit(rng) < spec.p) edges.push_back({u, v});
        }
      }
      return bidirect(UndirectedGraph(n, edges));
    }
    case Model::kBidirectFamily:
      return bidirect(family_graph(spec.family, n));
  }
  return Digraph(n, arcs);
}

}  // namespace dwidth
