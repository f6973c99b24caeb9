#include <algorithm>
#include <map>
#include <unordered_map>

#include "dwidth/dag_decomposition.hpp"
#include "dwidth/limits.hpp"

namespace dwidth {
namespace {

// Sets of `sets` not strictly contained in another one.
std::vector<VertexSet> maximal(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  for (VertexSet r : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [r](VertexSet other) {
      return other != r && r.subset_of(other);
    });
    if (!dominated) out.push_back(r);
  }
  return out;
}

struct Move {
  VertexSet cops;    // C'
  VertexSet region;  // U: where the robber may still be after the move
};

// Monotone cops against a visible robber. A state (C, R) has the cops on C
// and the robber somewhere in R, a set closed under reachability in G∖C.
class CopGame {
 public:
  CopGame(const Digraph& g, int cops) : g_(g), k_(cops) {}

  bool wins(VertexSet c, VertexSet r) { return best_move(c, r).has_value(); }

  std::optional<Move> best_move(VertexSet c, VertexSet r) {
    const Key key{c.bits(), r.bits()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<Move> found = search(c, r);
    memo_.emplace(key, found);
    return found;
  }

  std::vector<VertexSet> components(VertexSet cops, VertexSet region) const {
    std::vector<VertexSet> out;
    for (int v : region) {
      const VertexSet part = g_.reachable_from(VertexSet{v}, cops);
      if (std::find(out.begin(), out.end(), part) == out.end()) out.push_back(part);
    }
    return out;
  }

 private:
  struct Key {
    std::uint64_t c;
    std::uint64_t r;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.c * 0x9e3779b97f4a7c15ULL ^ k.r);
    }
  };

  std::optional<Move> search(VertexSet c, VertexSet r) {
    for (int placed = 1; placed <= std::min(k_, r.size()); ++placed) {
      std::optional<Move> found;
      for_each_subset_of_size(r, placed, [&](VertexSet n) {
        const int keep_max = std::min(k_ - placed, c.size());
        for (int kept = keep_max; kept >= 0 && !found; --kept) {
          for_each_subset_of_size(c, kept, [&](VertexSet k) {
            const VertexSet next = k | n;
            const VertexSet u = g_.reachable_from(r, k) - next;
            if (!u.subset_of(r)) return true;
            for (VertexSet part : components(next, u)) {
              if (!wins(next, part)) return true;
            }
            found = Move{next, u};
            return false;
          });
        }
        return !found;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  const Digraph& g_;
  int k_;
  std::unordered_map<Key, std::optional<Move>, KeyHash> memo_;
};

// One T-node per chosen move, keyed by (C', U); children are the moves
// answering each robber component of U.
class Extractor {
 public:
  explicit Extractor(CopGame& game) : game_(game) {}

  int node_for(VertexSet c, VertexSet r) {
    const Move move = *game_.best_move(c, r);
    const auto key = std::make_pair(move.cops.bits(), move.region.bits());
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const int id = static_cast<int>(bags_.size());
    ids_.emplace(key, id);
    bags_.push_back(move.cops);
    for (VertexSet part : maximal(game_.components(move.cops, move.region))) {
      const int child = node_for(move.cops, part);
      arcs_.push_back({id, child});
    }
    return id;
  }

  DagDecomposition finish() {
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    return DagDecomposition{Dag(static_cast<int>(bags_.size()), arcs_), bags_};
  }

 private:
  CopGame& game_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> ids_;
  std::vector<VertexSet> bags_;
  std::vector<Arc> arcs_;
};

// Distinct initial robber regions Reach(v) that no other one contains.
std::vector<VertexSet> maximal_regions(const Digraph& g) {
  std::vector<VertexSet> regions;
  for (int v = 0; v < g.n(); ++v) {
    const VertexSet r = g.reachable_from(VertexSet{v});
    if (std::find(regions.begin(), regions.end(), r) == regions.end()) regions.push_back(r);
  }
  return maximal(regions);
}

}  // namespace

ExactDgw exact_dgw_tiny(const Digraph& g, int k_max) {
  require_size("exact_dgw_tiny", g.n(), 8);
  ExactDgw result;
  if (g.n() == 0) {
    result.status = DgwStatus::kFound;
    result.width = 0;
    result.decomposition = DagDecomposition{Dag(1, {}), {VertexSet{}}};
    return result;
  }
  const std::vector<VertexSet> regions = maximal_regions(g);
  for (int k = 1; k <= k_max; ++k) {
    CopGame game(g, k);
    const bool all_win = std::all_of(regions.begin(), regions.end(),
                                     [&](VertexSet r) { return game.wins(VertexSet{}, r); });
    if (!all_win) continue;
    Extractor extractor(game);
    for (VertexSet r : regions) extractor.node_for(VertexSet{}, r);
    result.width = k;
    result.decomposition = extractor.finish();
    const DagReport report = validate_dagdec(g, result.decomposition);
    if (report.valid) {
      result.status = DgwStatus::kFound;
    } else {
      result.status = DgwStatus::kUnknown;
      result.message = std::string("strategy for ") + std::to_string(k) +
                       " cops gave an invalid decomposition: " + to_string(report.failed) + ": " +
                       report.message;
    }
    return result;
  }
  result.status = DgwStatus::kAboveKMax;
  result.width = k_max;
  result.message = "more than " + std::to_string(k_max) + " cops needed";
  return result;
}

}  // namespace dwidth
