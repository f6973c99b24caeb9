#include "dwidth/dag_lean.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "refinement.hpp"

namespace dwidth {

using detail::report;

DagSplit split_bags_dag(const Digraph& g, const DagDecomposition& d, const DagViolation& witness,
                        const Separation& separation, const PathSystem& paths) {
  const Dag& t = d.dag;
  const int t1 = witness.t1;
  const int t2 = witness.t2;
  if (t1 < 0 || t2 < 0 || t1 >= t.size() || t2 >= t.size() || !t.precedes(t1, t2)) {
    throw std::invalid_argument("split_bags_dag: t1 must precede t2");
  }
  detail::Copies copies = detail::split_copies(d.bags, separation, paths);
  DagSplit split;
  split.t1 = t1;
  split.t2 = t2;
  const VertexSet separator = separation.separator();
  detail::check_paths(d.bags, t1, t2, paths, separator, split.discrepancies);
  detail::check_junction(copies, t1, t2, separator, split.discrepancies);
  const auto check_part = [&](VertexSet part, const std::vector<VertexSet>& bags,
                              const char* name) {
    const InducedSubgraph sub = induced_subgraph(g, part);
    const DagReport r = validate_dagdec(sub.graph, DagDecomposition{t, detail::localize(bags, sub)});
    if (!r.valid) {
      report(split.discrepancies, checks::kSplitValid,
             std::string(name) + " is not a decomposition of its side: " + to_string(r.failed) +
                 ": " + r.message);
    }
  };
  check_part(separation.b, copies.b, "X^B");
  check_part(separation.a, copies.a, "X^A");
  split.b = std::move(copies.b);
  split.a = std::move(copies.a);
  return split;
}

namespace {

DagDecomposition two_copies(const Dag& t, const DagSplit& split) {
  const int n = t.size();
  std::vector<Arc> arcs;
  for (const Arc& a : t.arcs()) {
    arcs.push_back(a);
    arcs.push_back({a.tail + n, a.head + n});
  }
  arcs.push_back({split.t2, split.t1 + n});
  for (int r : t.roots()) {
    if (r != split.t1) arcs.push_back({split.t2, r + n});
  }
  std::vector<VertexSet> bags = split.b;
  bags.insert(bags.end(), split.a.begin(), split.a.end());
  return DagDecomposition{Dag(2 * n, arcs), std::move(bags)};
}

DagDecomposition prune_copy_a(const Dag& t, const DagSplit& split,
                              const DagDecomposition& merged) {
  const int n = t.size();
  std::vector<int> new_id(2 * n, -1);
  std::vector<VertexSet> bags;
  for (int i = 0; i < 2 * n; ++i) {
    const bool drop = i >= n && split.a[i - n].empty() && !t.precedes(split.t1, i - n);
    if (drop) continue;
    new_id[i] = static_cast<int>(bags.size());
    bags.push_back(merged.bags[i]);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : merged.dag.arcs()) {
    if (new_id[a.tail] >= 0 && new_id[a.head] >= 0) arcs.push_back({new_id[a.tail], new_id[a.head]});
  }
  return DagDecomposition{Dag(static_cast<int>(bags.size()), arcs), std::move(bags)};
}

}  // namespace

MergeResult merge_dagdecs(const Digraph& g, const Dag& t, const DagSplit& split) {
  if (static_cast<int>(split.a.size()) != t.size() || static_cast<int>(split.b.size()) != t.size()) {
    throw std::invalid_argument("merge_dagdecs: need one bag per node in both families");
  }
  MergeResult result;
  result.decomposition = two_copies(t, split);
  result.report = validate_dagdec(g, result.decomposition);
  if (result.report.valid) return result;
  result.pruned = true;
  result.decomposition = prune_copy_a(t, split, result.decomposition);
  result.report = validate_dagdec(g, result.decomposition);
  return result;
}

Separation choose_separation_dag(const Digraph& g, const DagDecomposition& d,
                                 const DagViolation& witness) {
  const std::vector<std::int64_t> distance =
      interval_distances(d, g.n(), witness.t1, witness.t2);
  const Separation weighted = min_separator_weighted(g, witness.z2, witness.z1, distance);
  VertexSet elsewhere;
  for (int i = 0; i < d.dag.size(); ++i) {
    if (!d.dag.precedes(witness.t2, i)) elsewhere |= d.bags[i];
  }
  return orient_separation(g, weighted.separator(), witness.z2, witness.z1,
                           g.vertices() - elsewhere);
}

bool DagRefinementStep::fatal() const {
  return std::any_of(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& x) { return x.fatal; });
}

DagRefinementStep refine_with_dag(const Digraph& g, const DagDecomposition& d,
                                  const DagViolation& witness, const Separation& separation) {
  const Dag& t = d.dag;
  DagRefinementStep step;
  step.witness = witness;
  step.separation = separation;
  const VertexSet separator = step.separation.separator();
  const int s = separator.size();
  if (s >= witness.k) {
    throw std::logic_error("refine_with_dag: separator of order " + std::to_string(s) +
                           " for a violation with k = " + std::to_string(witness.k));
  }
  step.paths = min_vertex_path_system(g, witness.z2, witness.z1, s);
  step.crossing = step.paths.crossing_vertices(separator);
  step.split = split_bags_dag(g, d, witness, step.separation, step.paths);
  step.discrepancies = step.split.discrepancies;
  auto& out = step.discrepancies;

  const int t1 = witness.t1;
  const int t2 = witness.t2;
  const detail::Copies copies{step.split.a, step.split.b};
  detail::check_copies(d.bags, copies, separator, interval(t, t1, t2), witness.k, out);
  for (int i = 0; i < t.size(); ++i) {
    // X_t1 keeps Z1 and X_t2 keeps Z2; neither copy holds those nodes whole,
    // so t1 and t2 are left to the size checks.
    if (i == t1 || i == t2) continue;
    const bool strictly_below_t1 = t.precedes(t1, i);
    if (!strictly_below_t1 && copies.b[i] != d.bags[i]) {
      report(out, checks::kOutsideUnchanged,
             "node " + std::to_string(i) + " " + d.bags[i].to_string() +
                 " outside T_{>t1} became X^B = " + copies.b[i].to_string());
    }
    if (t.precedes(t2, i) && copies.a[i] != d.bags[i]) {
      report(out, checks::kOutsideUnchanged,
             "node " + std::to_string(i) + " " + d.bags[i].to_string() +
                 " in T_{>t2} became X^A = " + copies.a[i].to_string());
    }
  }

  const MergeResult merged = merge_dagdecs(g, t, step.split);
  step.pruned = merged.pruned;
  step.result = merged.decomposition;
  step.fatness_before = fatness(g, d);
  step.fatness_after = fatness(g, step.result);
  if (!merged.report.valid) {
    report(out, checks::kResultValid,
           std::string(to_string(merged.report.failed)) + ": " + merged.report.message, true);
  }
  if (!(step.fatness_after < step.fatness_before)) {
    report(out, checks::kFatnessDecrease,
           step.fatness_before.to_string() + " -> " + step.fatness_after.to_string(), true);
  }
  if (step.result.width() > d.width()) {
    report(out, checks::kWidth,
           "width " + std::to_string(d.width()) + " -> " + std::to_string(step.result.width()),
           true);
  }
  return step;
}

std::optional<DagRefinementStep> refine_once_dag(const Digraph& g, const DagDecomposition& d,
                                                 LeanReading reading,
                                                 const RefineOptions& options) {
  const std::vector<DagViolation> witnesses = lean_violations_dag(
      g, d, reading, options.explore ? std::max(1, options.max_witnesses) : 1);
  if (witnesses.empty()) return std::nullopt;
  DagRefinementStep first = refine_with_dag(g, d, witnesses.front(),
                                            choose_separation_dag(g, d, witnesses.front()));
  if (first.discrepancies.empty() || !options.explore) return first;

  std::set<std::tuple<std::size_t, std::uint64_t, std::uint64_t>> seen{
      {0, first.separation.a.bits(), first.separation.b.bits()}};
  std::optional<DagRefinementStep> fallback;
  int tried = 1;
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    const DagViolation& witness = witnesses[w];
    const std::vector<std::int64_t> distance =
        interval_distances(d, g.n(), witness.t1, witness.t2);
    const auto weight = [&](VertexSet s) {
      std::int64_t total = 0;
      for (int v : s) total += distance[v];
      return total;
    };
    std::vector<VertexSet> separators =
        min_order_separators(g, witness.z2, witness.z1, options.max_separators);
    std::stable_sort(separators.begin(), separators.end(),
                     [&](VertexSet x, VertexSet y) { return weight(x) < weight(y); });
    VertexSet elsewhere;
    for (int i = 0; i < d.dag.size(); ++i) {
      if (!d.dag.precedes(witness.t2, i)) elsewhere |= d.bags[i];
    }
    for (VertexSet s : separators) {
      for (VertexSet prefer : {g.vertices() - elsewhere, VertexSet{}, g.vertices()}) {
        const Separation sep = orient_separation(g, s, witness.z2, witness.z1, prefer);
        if (!seen.insert({w, sep.a.bits(), sep.b.bits()}).second) continue;
        DagRefinementStep step = refine_with_dag(g, d, witness, sep);
        step.candidate = tried++;
        if (step.discrepancies.empty()) {
          step.candidates_tried = tried;
          step.first_choice = first.discrepancies;
          return step;
        }
        if (!fallback && !step.fatal() && first.fatal()) fallback = std::move(step);
      }
    }
  }
  DagRefinementStep chosen = fallback ? std::move(*fallback) : std::move(first);
  chosen.candidates_tried = tried;
  if (chosen.candidate != 0) chosen.first_choice = first.discrepancies;
  return chosen;
}

DagLeanifyResult leanify_dagdec(const Digraph& g, const DagDecomposition& d, int max_steps,
                                LeanReading reading, int max_nodes,
                                const RefineOptions& options) {
  const DagReport r = validate_dagdec(g, d);
  if (!r.valid) {
    throw InvalidDecomposition("leanify_dagdec: " + std::string(to_string(r.failed)) + ": " +
                               r.message);
  }
  if (max_steps <= 0) max_steps = std::max(1, 10 * g.n() * d.dag.size());
  DagLeanifyResult result;
  result.decomposition = d;
  for (int round = 0; round < max_steps; ++round) {
    if (2 * result.decomposition.dag.size() > max_nodes &&
        check_lean_dagdec(g, result.decomposition, reading)) {
      result.stopped = "node limit " + std::to_string(max_nodes) + " reached";
      return result;
    }
    std::optional<DagRefinementStep> step =
        refine_once_dag(g, result.decomposition, reading, options);
    if (!step) {
      result.lean = true;
      return result;
    }
    const bool fatal = step->fatal();
    if (step->candidate != 0) ++result.first_choice_failures;
    if (!fatal) result.decomposition = step->result;
    result.trace.push_back(std::move(*step));
    if (fatal) {
      result.stopped = "fatal discrepancy in step " + std::to_string(round);
      return result;
    }
  }
  result.lean = !check_lean_dagdec(g, result.decomposition, reading).has_value();
  if (!result.lean) result.stopped = "step cap " + std::to_string(max_steps) + " reached";
  return result;
}

}  // namespace dwidth
