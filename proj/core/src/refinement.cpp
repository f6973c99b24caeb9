#include "refinement.hpp"

namespace dwidth::detail {

void report(std::vector<Discrepancy>& out, const char* check, std::string detail, bool fatal) {
  out.push_back(Discrepancy{check, std::move(detail), fatal});
}

Copies split_copies(std::span<const VertexSet> bags, const Separation& separation,
                    const PathSystem& paths) {
  const VertexSet separator = separation.separator();
  const std::vector<int> crossing = paths.crossing_vertices(separator);
  std::vector<VertexSet> on_path;
  for (const auto& p : paths.paths) on_path.push_back(VertexSet::of(p));

  Copies copies;
  for (VertexSet bag : bags) {
    VertexSet a = bag & separation.a;
    VertexSet b = bag & separation.b;
    for (std::size_t j = 0; j < on_path.size(); ++j) {
      if (crossing[j] < 0) continue;
      if (bag.intersects(separation.a & on_path[j])) b.insert(crossing[j]);
      if (bag.intersects(separation.b & on_path[j])) a.insert(crossing[j]);
    }
    copies.a.push_back(a);
    copies.b.push_back(b);
  }
  return copies;
}

void check_paths(std::span<const VertexSet> bags, int t1, int t2, const PathSystem& paths,
                 VertexSet separator, std::vector<Discrepancy>& out) {
  const std::vector<int> crossing = paths.crossing_vertices(separator);
  for (std::size_t j = 0; j < paths.paths.size(); ++j) {
    const auto& p = paths.paths[j];
    const std::string name = "path " + std::to_string(j);
    if (crossing[j] < 0) {
      report(out, checks::kSingleCrossing,
             name + " meets the separator " + separator.to_string() + " " +
                 std::to_string((VertexSet::of(p) & separator).size()) + " times");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      const bool first = i == 0;
      const bool last = i + 1 == p.size();
      // With t1 = t2 both ends sit in the same bag.
      if (t1 == t2 && (first || last)) {
        if (!bags[t2].contains(p[i])) {
          report(out, checks::kPathEndpoints,
                 name + " has an end vertex " + std::to_string(p[i]) + " outside bag " +
                     std::to_string(t2));
        }
        continue;
      }
      if (bags[t2].contains(p[i]) != first) {
        report(out, checks::kPathEndpoints,
               name + (first ? " starts outside" : " revisits") + " bag " + std::to_string(t2) +
                   " at vertex " + std::to_string(p[i]));
      }
      if (bags[t1].contains(p[i]) != last) {
        report(out, checks::kPathEndpoints,
               name + (last ? " ends outside" : " touches") + " bag " + std::to_string(t1) +
                   " early at vertex " + std::to_string(p[i]));
      }
    }
  }
}

void check_junction(const Copies& copies, int t1, int t2, VertexSet separator,
                    std::vector<Discrepancy>& out) {
  const VertexSet junction = copies.b[t2] & copies.a[t1];
  if (!separator.subset_of(junction)) {
    report(out, checks::kJunction,
           "separator " + separator.to_string() + " not inside X^B_t2 ∩ X^A_t1 = " +
               junction.to_string());
  }
}

void check_copies(std::span<const VertexSet> bags, const Copies& copies, VertexSet separator,
                  std::span<const int> interval, int k, std::vector<Discrepancy>& out) {
  const int s = separator.size();
  for (std::size_t i = 0; i < bags.size(); ++i) {
    const int size = bags[i].size();
    const std::string at = "bag " + std::to_string(i) + " " + bags[i].to_string();
    if (copies.a[i].size() == size && !copies.b[i].subset_of(separator)) {
      report(out, checks::kTwinInSeparator,
             at + ": X^A keeps full size but X^B = " + copies.b[i].to_string() +
                 " is not inside S = " + separator.to_string());
    }
    if (copies.b[i].size() == size && !copies.a[i].subset_of(separator)) {
      report(out, checks::kTwinInSeparator,
             at + ": X^B keeps full size but X^A = " + copies.a[i].to_string() +
                 " is not inside S = " + separator.to_string());
    }
  }
  bool shrinks_twice = false;
  for (int i : interval) {
    const int size = bags[i].size();
    const std::string at = "bag " + std::to_string(i) + " " + bags[i].to_string();
    if (copies.a[i].size() > size || copies.b[i].size() > size) {
      report(out, checks::kCopySize,
             at + " grows to X^A = " + copies.a[i].to_string() + ", X^B = " +
                 copies.b[i].to_string());
    }
    if (size < k || k <= s) {
      report(out, checks::kCopySize,
             at + " has size " + std::to_string(size) + " with k = " + std::to_string(k) +
                 ", s = " + std::to_string(s));
    }
    if (copies.a[i].size() < size && copies.b[i].size() < size) shrinks_twice = true;
  }
  if (!shrinks_twice) {
    report(out, checks::kDoubleShrink, "no bag in the interval shrinks in both copies");
  }
}

std::vector<VertexSet> localize(std::span<const VertexSet> bags, const InducedSubgraph& sub) {
  std::vector<VertexSet> out;
  out.reserve(bags.size());
  for (VertexSet bag : bags) {
    VertexSet local;
    for (int v : bag) {
      if (v < static_cast<int>(sub.to_local.size()) && sub.to_local[v] >= 0) {
        local.insert(sub.to_local[v]);
      }
    }
    out.push_back(local);
  }
  return out;
}

}  // namespace dwidth::detail
