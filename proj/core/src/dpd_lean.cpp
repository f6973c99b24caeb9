#include "dwidth/dpd_lean.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <stdexcept>

#include "dwidth/dag_decomposition.hpp"
#include "refinement.hpp"

namespace dwidth {

using detail::report;

SplitBags split_bags(const Digraph& g, const PathDecomposition& d, const DpdViolation& witness,
                     const Separation& separation, const PathSystem& paths) {
  const int t1 = witness.t1;
  const int t2 = witness.t2;
  if (t1 < 0 || t1 > t2 || t2 >= d.size()) throw std::invalid_argument("split_bags: bad t1, t2");
  const detail::Copies copies = detail::split_copies(d.bags, separation, paths);
  SplitBags split;
  split.t1 = t1;
  split.t2 = t2;
  split.before.assign(copies.b.begin(), copies.b.begin() + t2 + 1);
  split.after.assign(copies.a.begin() + t1, copies.a.end());

  const VertexSet separator = separation.separator();
  detail::check_paths(d.bags, t1, t2, paths, separator, split.discrepancies);
  detail::check_junction(copies, t1, t2, separator, split.discrepancies);
  const auto check_part = [&](VertexSet part, const std::vector<VertexSet>& bags,
                              const char* name) {
    const InducedSubgraph sub = induced_subgraph(g, part);
    const DpdReport r = validate_dpd(sub.graph, PathDecomposition{detail::localize(bags, sub)});
    if (!r.valid) {
      report(split.discrepancies, checks::kSplitValid,
             std::string(name) + " is not a decomposition of its side: " + to_string(r.failed) +
                 ": " + r.message);
    }
  };
  check_part(separation.b, split.before, "X^B");
  check_part(separation.a, split.after, "X^A");
  return split;
}

PathDecomposition concatenate(const Digraph& g, const SplitBags& split) {
  PathDecomposition out;
  out.bags = split.before;
  out.bags.insert(out.bags.end(), split.after.begin(), split.after.end());
  const DpdReport r = validate_dpd(g, out);
  if (!r.valid) {
    throw InvalidDecomposition("concatenate: " + std::string(to_string(r.failed)) + ": " +
                               r.message);
  }
  return out;
}

Separation choose_separation(const Digraph& g, const PathDecomposition& d,
                             const DpdViolation& witness) {
  const DagDecomposition as_dag = dpd_to_dagdec(g, d);
  const std::vector<std::int64_t> distance =
      interval_distances(as_dag, g.n(), witness.t1, witness.t2);
  const Separation weighted = min_separator_weighted(g, witness.z2, witness.z1, distance);
  VertexSet early;
  for (int i = 0; i < witness.t2; ++i) early |= d.bags[i];
  return orient_separation(g, weighted.separator(), witness.z2, witness.z1,
                           g.vertices() - early);
}

bool RefinementStep::fatal() const {
  return std::any_of(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& x) { return x.fatal; });
}

RefinementStep refine_with(const Digraph& g, const PathDecomposition& d,
                           const DpdViolation& witness, const Separation& separation) {
  RefinementStep step;
  step.witness = witness;
  step.separation = separation;
  const VertexSet separator = separation.separator();
  const int s = separator.size();
  if (s >= witness.k) {
    throw std::logic_error("refine_with: separator of order " + std::to_string(s) +
                           " for a violation with k = " + std::to_string(witness.k));
  }
  step.paths = min_vertex_path_system(g, witness.z2, witness.z1, s);
  step.crossing = step.paths.crossing_vertices(separator);
  step.split = split_bags(g, d, witness, separation, step.paths);
  step.discrepancies = step.split.discrepancies;
  auto& out = step.discrepancies;

  const int t1 = witness.t1;
  const int t2 = witness.t2;
  const detail::Copies copies = detail::split_copies(d.bags, separation, step.paths);
  std::vector<int> interval(t2 - t1 + 1);
  std::iota(interval.begin(), interval.end(), t1);
  detail::check_copies(d.bags, copies, separator, interval, witness.k, out);
  // The endpoint bags generally lose vertices to the other side, so only
  // bags strictly before t1 and strictly after t2 must survive unchanged.
  for (int i = 0; i < t1; ++i) {
    if (copies.b[i] != d.bags[i]) {
      report(out, checks::kOutsideUnchanged,
             "bag " + std::to_string(i) + " " + d.bags[i].to_string() + " before t1 became X^B = " +
                 copies.b[i].to_string());
    }
  }
  for (int i = t2 + 1; i < d.size(); ++i) {
    if (copies.a[i] != d.bags[i]) {
      report(out, checks::kOutsideUnchanged,
             "bag " + std::to_string(i) + " " + d.bags[i].to_string() +
                 " after t2 became X^A = " + copies.a[i].to_string());
    }
  }

  step.result.bags = step.split.before;
  step.result.bags.insert(step.result.bags.end(), step.split.after.begin(),
                          step.split.after.end());
  step.fatness_before = fatness(g, d);
  step.fatness_after = fatness(g, step.result);
  const DpdReport r = validate_dpd(g, step.result);
  if (!r.valid) {
    report(out, checks::kResultValid,
           std::string(to_string(r.failed)) + ": " + r.message, true);
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

std::optional<RefinementStep> refine_once(const Digraph& g, const PathDecomposition& d,
                                         const RefineOptions& options) {
  const std::vector<DpdViolation> witnesses =
      lean_violations(g, d, options.explore ? std::max(1, options.max_witnesses) : 1);
  if (witnesses.empty()) return std::nullopt;
  RefinementStep first = refine_with(g, d, witnesses.front(),
                                     choose_separation(g, d, witnesses.front()));
  if (first.discrepancies.empty() || !options.explore) return first;

  const DagDecomposition as_dag = dpd_to_dagdec(g, d);
  std::set<std::tuple<std::size_t, std::uint64_t, std::uint64_t>> seen{
      {0, first.separation.a.bits(), first.separation.b.bits()}};
  std::optional<RefinementStep> fallback;
  int tried = 1;
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    const DpdViolation& witness = witnesses[w];
    const std::vector<std::int64_t> distance =
        interval_distances(as_dag, g.n(), witness.t1, witness.t2);
    std::vector<VertexSet> separators =
        min_order_separators(g, witness.z2, witness.z1, options.max_separators);
    const auto weight = [&](VertexSet s) {
      std::int64_t total = 0;
      for (int v : s) total += distance[v];
      return total;
    };
    std::stable_sort(separators.begin(), separators.end(),
                     [&](VertexSet x, VertexSet y) { return weight(x) < weight(y); });
    VertexSet early;
    for (int i = 0; i < witness.t2; ++i) early |= d.bags[i];
    for (VertexSet s : separators) {
      for (VertexSet prefer : {g.vertices() - early, VertexSet{}, g.vertices()}) {
        const Separation sep = orient_separation(g, s, witness.z2, witness.z1, prefer);
        if (!seen.insert({w, sep.a.bits(), sep.b.bits()}).second) continue;
        RefinementStep step = refine_with(g, d, witness, sep);
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
  RefinementStep chosen = fallback ? std::move(*fallback) : std::move(first);
  chosen.candidates_tried = tried;
  if (chosen.candidate != 0) chosen.first_choice = first.discrepancies;
  return chosen;
}

LeanifyResult leanify_dpd(const Digraph& g, const PathDecomposition& d, int max_steps,
                          const RefineOptions& options) {
  const DpdReport r = validate_dpd(g, d);
  if (!r.valid) {
    throw InvalidDecomposition("leanify_dpd: " + std::string(to_string(r.failed)) + ": " +
                               r.message);
  }
  if (max_steps <= 0) max_steps = std::max(1, 10 * g.n() * d.size());
  LeanifyResult result;
  result.decomposition = d;
  for (int round = 0; round < max_steps; ++round) {
    std::optional<RefinementStep> step = refine_once(g, result.decomposition, options);
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
  result.lean = !check_lean_dpd(g, result.decomposition).has_value();
  if (!result.lean) result.stopped = "step cap " + std::to_string(max_steps) + " reached";
  return result;
}

}  // namespace dwidth
