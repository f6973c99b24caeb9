#include "dwidth/harness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dwidth/limits.hpp"

namespace dwidth {
namespace {

using io::to_json;

void fail(Outcome& o, const std::string& reason, json detail = json::object()) {
  if (!o.failure) o.failure = json{{"reasons", json::array()}};
  (*o.failure)["reasons"].push_back(reason);
  for (auto& [key, value] : detail.items()) (*o.failure)[key] = value;
}

bool chance(std::mt19937_64& rng, double p) { return unit(rng) < p; }

Outcome skip() {
  Outcome o;
  o.skipped = true;
  return o;
}

std::vector<int> bags_with(std::span<const VertexSet> bags, int v) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(bags.size()); ++i) {
    if (bags[i].contains(v)) out.push_back(i);
  }
  return out;
}

std::vector<VertexSet> subsets_up_to_two(int n) {
  std::vector<VertexSet> out{VertexSet{}};
  for (int u = 0; u < n; ++u) out.push_back(VertexSet{u});
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.push_back(VertexSet{u, v});
  }
  return out;
}

Outcome menger_duality(const Digraph& g, std::uint64_t seed, bool) {
  Outcome o;
  const std::vector<VertexSet> sets = subsets_up_to_two(g.n());
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  if (sets.size() * sets.size() <= 4096) {
    for (VertexSet x : sets) {
      for (VertexSet y : sets) pairs.emplace_back(x, y);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1024; ++i) {
      pairs.emplace_back(sets[below(rng, sets.size())], sets[below(rng, sets.size())]);
    }
  }
  for (auto [x, y] : pairs) {
    ++o.checks;
    const int count = count_disjoint_paths(g, x, y);
    const PathSystem paths = max_disjoint_paths(g, x, y);
    const Separation sep = min_separator(g, x, y);
    const std::vector<VertexSet> all = min_order_separators(g, x, y, 1);
    const bool ok = paths.size() == count && is_valid_path_system(g, paths, x, y) &&
                    sep.separates(x, y) && is_separation(g, sep.a, sep.b).ok &&
                    sep.order() == count && !all.empty() && all.front().size() == count;
    if (!ok) {
      fail(o, "flow, path system and separator disagree",
           {{"x", to_json(x)},
            {"y", to_json(y)},
            {"count", count},
            {"paths", to_json(paths)},
            {"separation", to_json(sep)}});
      return o;
    }
  }
  return o;
}

Outcome path_meeting_dpd(const Digraph& g, std::uint64_t seed, bool) {
  Outcome o;
  if (g.num_arcs() == 0) return skip();
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 10; ++round) {
    const PathDecomposition d = random_dpd(g, rng);
    if (!validate_dpd(g, d).valid) {
      fail(o, "random_dpd produced an invalid decomposition", {{"decomposition", to_json(d)}});
      return o;
    }
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<int> path = random_path(g, rng);
      if (path.size() < 2) {
        ++o.counters["single-vertex-path"];
        continue;
      }
      std::vector<std::pair<int, int>> spans;
      for (int a : bags_with(d.bags, path.back())) {
        for (int b : bags_with(d.bags, path.front())) {
          if (a <= b) spans.emplace_back(a, b);
        }
      }
      if (spans.empty()) {
        ++o.counters["no-span"];
        continue;
      }
      const auto [a, b] = spans[below(rng, spans.size())];
      ++o.checks;
      if (!check_path_meeting(g, d, path, a, b)) {
        fail(o, "a bag between a and b misses the path",
             {{"decomposition", to_json(d)}, {"path", path}, {"a", a}, {"b", b}});
        return o;
      }
    }
  }
  return o;
}

Outcome path_meeting_dag(const Digraph& g, std::uint64_t seed, bool) {
  Outcome o;
  if (g.num_arcs() == 0) return skip();
  std::mt19937_64 rng(seed);
  std::vector<DagDecomposition> pool;
  if (g.n() <= 5) {
    const ExactDgw e = exact_dgw_tiny(g, g.n());
    if (e.status == DgwStatus::kFound) pool.push_back(e.decomposition);
  }
  for (int round = 0; round < 10; ++round) {
    const DagDecomposition d = round < static_cast<int>(pool.size())
                                   ? pool[round]
                                   : dpd_to_dagdec(g, random_dpd(g, rng));
    if (!validate_dagdec(g, d).valid) {
      fail(o, "starting DAG decomposition is invalid", {{"decomposition", to_json(d)}});
      return o;
    }
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<int> path = random_path(g, rng);
      if (path.size() < 2) {
        ++o.counters["single-vertex-path"];
        continue;
      }
      std::vector<std::pair<int, int>> spans;
      for (int a : bags_with(d.bags, path.back())) {
        for (int b : bags_with(d.bags, path.front())) {
          if (d.dag.precedes(a, b)) spans.emplace_back(a, b);
        }
      }
      if (spans.empty()) {
        ++o.counters["no-span"];
        continue;
      }
      const auto [a, b] = spans[below(rng, spans.size())];
      ++o.checks;
      if (!check_path_meeting_dag(g, d, path, a, b)) {
        fail(o, "a node between a and b misses the path",
             {{"decomposition", to_json(d)}, {"path", path}, {"a", a}, {"b", b}});
        return o;
      }
    }
  }
  return o;
}

template <typename Step>
void tally_step(Outcome& o, const Step& step) {
  ++o.counters["steps"];
  if (step.candidate != 0) ++o.counters["first-choice-failures"];
  for (const Discrepancy& d : step.first_choice) ++o.counters["first-choice:" + d.check];
  for (const Discrepancy& d : step.discrepancies) ++o.counters["check:" + d.check];
  if (!step.discrepancies.empty()) ++o.counters["steps-with-discrepancies"];
}

Outcome leanify_dpd_property(const Digraph& g, std::uint64_t, bool) {
  Outcome o;
  const ExactDpw exact = exact_dpw(g);
  const LeanifyResult r = leanify_dpd(g, exact.decomposition);
  json diag{{"start", to_json(exact.decomposition)},
            {"trace", io::trace_to_json(r)},
            {"final", to_json(r.decomposition)}};
  PathDecomposition previous = exact.decomposition;
  for (const RefinementStep& step : r.trace) {
    tally_step(o, step);
    o.checks += 3;
    if (!step.discrepancies.empty()) fail(o, "refinement step failed a check", diag);
    if (step.fatal()) break;
    if (!validate_dpd(g, step.result).valid) fail(o, "intermediate decomposition invalid", diag);
    if (!(fatness(g, step.result) < fatness(g, previous))) fail(o, "fatness did not drop", diag);
    previous = step.result;
  }
  o.checks += 2;
  if (!r.lean || check_lean_dpd(g, r.decomposition)) {
    ++o.counters["not-lean"];
    fail(o, "final decomposition is not lean", diag);
  }
  if (r.decomposition.width() != exact.width) {
    ++o.counters["width-mismatch"];
    fail(o, "final width differs from dpw", diag);
  }
  return o;
}

void leanify_dag_from(Outcome& o, const Digraph& g, const DagDecomposition& start, bool exact,
                      const char* label) {
  const DagLeanifyResult r = leanify_dagdec(g, start);
  json diag{{"start_kind", label},
            {"start", to_json(start)},
            {"trace", io::trace_to_json(r)},
            {"final", to_json(r.decomposition)}};
  DagDecomposition previous = start;
  for (const DagRefinementStep& step : r.trace) {
    tally_step(o, step);
    o.checks += 3;
    if (!step.discrepancies.empty()) fail(o, std::string(label) + ": refinement step failed a check", diag);
    if (step.fatal()) break;
    if (!validate_dagdec(g, step.result).valid) {
      fail(o, std::string(label) + ": intermediate decomposition invalid", diag);
    }
    if (!(fatness(g, step.result) < fatness(g, previous))) {
      fail(o, std::string(label) + ": fatness did not drop", diag);
    }
    previous = step.result;
  }
  o.checks += 2;
  if (!r.lean || check_lean_dagdec(g, r.decomposition)) {
    ++o.counters["not-lean"];
    fail(o, std::string(label) + ": final decomposition is not lean", diag);
  }
  const int w = r.decomposition.width();
  if (exact ? w != start.width() : w > start.width()) {
    ++o.counters["width-mismatch"];
    fail(o, std::string(label) + ": final width " + std::to_string(w) + " against start " +
                std::to_string(start.width()),
         diag);
  }
}

Outcome leanify_dagdec_property(const Digraph& g, std::uint64_t, bool) {
  Outcome o;
  const ExactDgw e = exact_dgw_tiny(g, g.n());
  if (e.status == DgwStatus::kFound) {
    leanify_dag_from(o, g, e.decomposition, true, "exact_dgw_tiny");
  } else {
    ++o.counters["dgw-not-found"];
  }
  leanify_dag_from(o, g, dpd_to_dagdec(g, exact_dpw(g).decomposition), false, "dpd_to_dagdec");
  return o;
}

// Neither implication between lean and linked is assumed; this only counts
// how the two checks relate on leanify outputs and random decompositions.
Outcome lean_vs_linked(const Digraph& g, std::uint64_t seed, bool) {
  Outcome o;
  std::vector<PathDecomposition> pool;
  const LeanifyResult r = leanify_dpd(g, exact_dpw(g).decomposition);
  pool.push_back(r.decomposition);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 5 && g.n() > 0; ++i) pool.push_back(random_dpd(g, rng));
  for (const PathDecomposition& d : pool) {
    ++o.checks;
    const bool lean = !check_lean_dpd(g, d);
    const bool linked = !check_linked_dpd(g, d);
    ++o.counters[lean ? (linked ? "lean-and-linked" : "lean-not-linked")
                      : (linked ? "linked-not-lean" : "neither")];
  }
  return o;
}

bool same_witness(const DpdViolation& p, const DagViolation& q) {
  return p.t1 == q.t1 && p.t2 == q.t2 && p.k == q.k && p.z1 == q.z1 && p.z2 == q.z2;
}

Outcome dgw5_readings(const Digraph& g, std::uint64_t seed, bool) {
  Outcome o;
  if (g.n() == 0) return skip();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 3; ++i) {
    const PathDecomposition d = random_dpd(g, rng);
    const DagDecomposition t = dpd_to_dagdec(g, d);
    const auto path = check_lean_dpd(g, d);
    for (LeanReading reading : {LeanReading::kSomeArc, LeanReading::kEveryPath}) {
      ++o.checks;
      const auto dag = check_lean_dagdec(g, t, reading);
      const bool agree = path.has_value() == dag.has_value() && (!path || same_witness(*path, *dag));
      if (!agree) {
        json detail{{"decomposition", to_json(d)},
                    {"reading", reading == LeanReading::kSomeArc ? "some-arc" : "every-path"}};
        if (path) detail["dpd_witness"] = to_json(*path);
        if (dag) detail["dag_witness"] = to_json(*dag);
        fail(o, "path-shaped DAG reading disagrees with the dpd check", detail);
        return o;
      }
    }
  }
  if (g.n() <= 5) {
    const ExactDgw e = exact_dgw_tiny(g, g.n());
    if (e.status == DgwStatus::kFound) {
      const DagLeanifyResult r = leanify_dagdec(g, e.decomposition);
      for (const DagDecomposition* d : {&e.decomposition, &r.decomposition}) {
        ++o.checks;
        const bool every = !check_lean_dagdec(g, *d, LeanReading::kEveryPath);
        const bool some = !check_lean_dagdec(g, *d, LeanReading::kSomeArc);
        if (every) ++o.counters["lean-every-path"];
        if (some) ++o.counters["lean-some-arc"];
        if (every && !some) {
          fail(o, "lean under every-path but not under some-arc", {{"decomposition", to_json(*d)}});
          return o;
        }
      }
    }
  }
  return o;
}

Outcome relabel_invariance(const Digraph& g, std::uint64_t seed, bool) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[below(rng, i + 1)]);
  const Digraph h = relabel(g, perm);
  const ExactDpw eg = exact_dpw(g);
  const ExactDpw eh = exact_dpw(h);
  json detail{{"perm", perm}};
  ++o.checks;
  if (eg.width != eh.width) {
    fail(o, "dpw changed under relabelling", detail);
    return o;
  }
  const auto relabelled = [&](const std::vector<VertexSet>& bags) {
    std::vector<VertexSet> out;
    for (VertexSet bag : bags) {
      VertexSet image;
      for (int v : bag) image.insert(perm[v]);
      out.push_back(image);
    }
    return out;
  };
  const LeanifyResult r = leanify_dpd(g, eg.decomposition);
  const PathDecomposition image{relabelled(r.decomposition.bags)};
  ++o.checks;
  if (!validate_dpd(h, image).valid) {
    fail(o, "relabelled decomposition invalid", detail);
    return o;
  }
  if (r.lean) {
    ++o.checks;
    if (check_lean_dpd(h, image)) {
      fail(o, "lean decomposition not lean after relabelling", detail);
      return o;
    }
  }
  if (g.n() <= 5) {
    ++o.checks;
    const ExactDgw dg = exact_dgw_tiny(g, g.n());
    const ExactDgw dh = exact_dgw_tiny(h, h.n());
    if (dg.status != dh.status || dg.width != dh.width) {
      fail(o, "dgw changed under relabelling", detail);
    }
  }
  return o;
}

// Direct reading of DPW-1..3 on bag positions.
bool reference_valid_dpd(const Digraph& g, const PathDecomposition& d, bool check_arcs) {
  if (d.bags.empty()) return false;
  std::vector<int> lo(g.n(), -1), hi(g.n(), -1);
  for (int i = 0; i < d.size(); ++i) {
    if (!d.bags[i].subset_of(g.vertices())) return false;
    for (int v : d.bags[i]) {
      if (lo[v] < 0) lo[v] = i;
      hi[v] = i;
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (lo[v] < 0) return false;
    for (int i = lo[v]; i <= hi[v]; ++i) {
      if (!d.bags[i].contains(v)) return false;
    }
  }
  if (check_arcs) {
    for (const Arc& a : g.arcs()) {
      if (lo[a.tail] > hi[a.head]) return false;
    }
  }
  return true;
}

PathDecomposition random_bag_sequence(const Digraph& g, std::mt19937_64& rng) {
  const int r = 1 + static_cast<int>(below(rng, g.n() + 1));
  PathDecomposition d{std::vector<VertexSet>(r)};
  for (int v = 0; v < g.n(); ++v) {
    if (chance(rng, 0.05)) continue;
    int lo = static_cast<int>(below(rng, r));
    int hi = static_cast<int>(below(rng, r));
    if (lo > hi) std::swap(lo, hi);
    for (int i = lo; i <= hi; ++i) d.bags[i].insert(v);
    if (chance(rng, 0.1)) d.bags[below(rng, r)].insert(v);
  }
  return d;
}

Outcome dpd_validator(const Digraph& g, std::uint64_t seed, bool mutate) {
  Outcome o;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    const PathDecomposition d = random_bag_sequence(g, rng);
    const bool expected = reference_valid_dpd(g, d, true);
    // The mutant forgets the arc condition.
    const bool got = mutate ? reference_valid_dpd(g, d, false) : validate_dpd(g, d).valid;
    ++o.checks;
    if (expected) ++o.counters["valid-samples"];
    if (expected != got) {
      fail(o, "validator disagrees with the definition",
           {{"decomposition", to_json(d)}, {"expected", expected}, {"got", got}});
      return o;
    }
  }
  return o;
}

Outcome run_check(const Property& p, const Digraph& g, std::uint64_t seed, bool mutate) {
  try {
    return p.check(g, seed, mutate);
  } catch (const SizeLimitExceeded&) {
    throw;
  } catch (const std::exception& e) {
    Outcome o;
    fail(o, std::string("exception: ") + e.what());
    return o;
  }
}

Digraph without_arc(const Digraph& g, std::size_t index) {
  std::vector<Arc> arcs = g.arcs();
  arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(index));
  return Digraph(g.n(), arcs);
}

Digraph digraph_from_mask(int n, std::uint64_t mask) {
  std::vector<Arc> arcs;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) arcs.push_back({u, v});
      ++bit;
    }
  }
  return Digraph(n, arcs);
}

}  // namespace

PathDecomposition random_dpd(const Digraph& g, std::mt19937_64& rng) {
  const int n = g.n();
  if (n == 0) return PathDecomposition{{VertexSet{}}};
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[below(rng, i + 1)]);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  PathDecomposition d{std::vector<VertexSet>(n)};
  for (int v = 0; v < n; ++v) {
    int lo = pos[v];
    int hi = pos[v];
    for (int u : g.in(v)) hi = std::max(hi, pos[u]);
    if (chance(rng, 0.3)) lo = std::max(0, lo - static_cast<int>(below(rng, 3)));
    if (chance(rng, 0.3)) hi = std::min(n - 1, hi + static_cast<int>(below(rng, 3)));
    for (int i = lo; i <= hi; ++i) d.bags[i].insert(v);
  }
  return d;
}

std::vector<int> random_path(const Digraph& g, std::mt19937_64& rng) {
  const int length = 2 + static_cast<int>(below(rng, std::max(1, g.n() - 1)));
  std::vector<int> starts;
  for (int v = 0; v < g.n(); ++v) {
    if (!g.out(v).empty()) starts.push_back(v);
  }
  std::vector<int> path{starts.empty() ? static_cast<int>(below(rng, g.n()))
                                       : starts[below(rng, starts.size())]};
  VertexSet used{path.front()};
  while (static_cast<int>(path.size()) < length) {
    const std::vector<int> next = (g.out(path.back()) - used).to_vector();
    if (next.empty()) break;
    path.push_back(next[below(rng, next.size())]);
    used.insert(path.back());
  }
  return path;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all{
      {"menger-duality", "max disjoint paths = min separator order, with certificates",
       Model::kGnp, 4, false, menger_duality},
      {"path-meeting-dpd", "a path from X_b back to X_a meets every bag in between",
       Model::kGnp, 6, false, path_meeting_dpd},
      {"path-meeting-dag", "the same on DAG decompositions, over nodes a ⪯ m ⪯ b",
       Model::kGnp, 5, false, path_meeting_dag},
      {"leanify-dpd", "leanify_dpd from an optimal start: clean steps, lean, width dpw",
       Model::kGnp, 6, false, leanify_dpd_property},
      {"leanify-dagdec", "leanify_dagdec from exact_dgw_tiny and dpd_to_dagdec",
       Model::kGnp, 4, false, leanify_dagdec_property},
      {"lean-vs-linked", "counts lean/linked combinations (no implication assumed)", Model::kGnp, 6, false, lean_vs_linked},
      {"dgw5-readings", "DAG lean readings agree on path shapes; every-path lean implies some-arc lean",
       Model::kGnp, 5, false, dgw5_readings},
      {"relabel-invariance", "widths and leanness survive vertex relabelling", Model::kGnp, 5,
       false, relabel_invariance},
      {"dpd-validator", "validate_dpd agrees with the definition on random bag sequences",
       Model::kGnp, 5, true, dpd_validator},
  };
  return all;
}

const Property& find_property(std::string_view id) {
  for (const Property& p : properties()) {
    if (p.id == id) return p;
  }
  std::string known;
  for (const Property& p : properties()) known += (known.empty() ? "" : ", ") + p.id;
  throw std::invalid_argument("unknown property \"" + std::string(id) + "\" (" + known + ")");
}

Digraph shrink(const Property& property, const Digraph& g, std::uint64_t seed, bool mutate) {
  const auto fails = [&](const Digraph& h) {
    return run_check(property, h, seed, mutate).failure.has_value();
  };
  Digraph current = g;
  for (bool progress = true; progress;) {
    progress = false;
    for (int v = 0; v < current.n(); ++v) {
      Digraph smaller = induced_subgraph(current, current.vertices() - VertexSet{v}).graph;
      if (fails(smaller)) {
        current = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < current.arcs().size(); ++i) {
      Digraph smaller = without_arc(current, i);
      if (fails(smaller)) {
        current = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return current;
}

Outcome replay(const Finding& finding) {
  return run_check(find_property(finding.property), finding.shrunk, finding.seed, finding.mutate);
}

PropertyReport run_property(const CorpusSpec& corpus) {
  const Property& property = find_property(corpus.property);
  if (corpus.mutate && !property.supports_mutation) {
    throw std::invalid_argument("property " + property.id + " has no mutation mode");
  }
  PropertyReport report;
  report.corpus = corpus;
  const auto record = [&](const Digraph& g, std::uint64_t seed, json source) {
    const Outcome o = run_check(property, g, seed, corpus.mutate);
    ++report.instances;
    if (o.skipped) ++report.skipped;
    report.checks += o.checks;
    for (const auto& [key, value] : o.counters) report.counters[key] += value;
    if (!o.failure) return;
    ++report.failures;
    if (static_cast<int>(report.findings.size()) >= corpus.max_findings) return;
    Finding f{property.id, std::move(source), seed, corpus.mutate, g, g, *o.failure};
    f.shrunk = shrink(property, g, seed, corpus.mutate);
    const Outcome again = run_check(property, f.shrunk, seed, corpus.mutate);
    if (again.failure) f.diagnostic = *again.failure;
    report.findings.push_back(std::move(f));
  };

  if (corpus.exhaustive) {
    const int n = corpus.generator.n;
    if (n < 0 || n > 5) throw std::invalid_argument("exhaustive sweeps need 0 <= n <= 5");
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1));
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      record(digraph_from_mask(n, mask), corpus.generator.seed,
             json{{"exhaustive", n}, {"index", mask}});
    }
    return report;
  }
  std::mt19937_64 master(corpus.generator.seed);
  for (int trial = 0; trial < corpus.trials; ++trial) {
    GeneratorSpec spec = corpus.generator;
    spec.seed = master();
    record(generate(spec), spec.seed, to_json(spec));
  }
  return report;
}

json to_json(const GeneratorSpec& spec) {
  json out{{"model", to_string(spec.model)}, {"n", spec.n}, {"seed", spec.seed}};
  if (spec.model == Model::kBidirectFamily) {
    out["family"] = spec.family;
  } else {
    out["p"] = spec.p;
  }
  return out;
}

json to_json(const Finding& f) {
  return json{{"property", f.property},     {"source", f.source},
              {"seed", f.seed},             {"mutate", f.mutate},
              {"original", to_json(f.original)}, {"shrunk", to_json(f.shrunk)},
              {"diagnostic", f.diagnostic}};
}

json to_json(const PropertyReport& r) {
  json findings = json::array();
  for (const Finding& f : r.findings) findings.push_back(to_json(f));
  json out{{"property", r.corpus.property},
           {"instances", r.instances},
           {"skipped", r.skipped},
           {"checks", r.checks},
           {"failures", r.failures},
           {"counters", r.counters},
           {"mutate", r.corpus.mutate},
           {"findings", findings}};
  if (r.corpus.exhaustive) {
    out["exhaustive"] = r.corpus.generator.n;
  } else {
    out["generator"] = to_json(r.corpus.generator);
    out["trials"] = r.corpus.trials;
  }
  return out;
}

Finding finding_from_json(const json& j) {
  Finding f;
  f.property = j.at("property").get<std::string>();
  f.source = j.value("source", json::object());
  f.seed = j.at("seed").get<std::uint64_t>();
  f.mutate = j.value("mutate", false);
  f.shrunk = io::digraph_from_json(j.at("shrunk"));
  f.original = j.contains("original") ? io::digraph_from_json(j.at("original")) : f.shrunk;
  f.diagnostic = j.value("diagnostic", json::object());
  return f;
}

}  // namespace dwidth
