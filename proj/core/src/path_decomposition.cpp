#include "dwidth/path_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dwidth/limits.hpp"
#include "dwidth/menger.hpp"
#include "path_counter.hpp"

namespace dwidth {

int PathDecomposition::width() const {
  int widest = 0;
  for (VertexSet bag : bags) widest = std::max(widest, bag.size());
  return widest - 1;
}

Fatness::Fatness(int n, std::span<const VertexSet> bags) : counts_(n + 1, 0) {
  for (VertexSet bag : bags) {
    if (bag.size() > n) {
      throw std::invalid_argument("fatness: bag " + bag.to_string() + " larger than n = " +
                                  std::to_string(n));
    }
    ++counts_[n - bag.size()];
  }
}

std::string Fatness::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

Fatness fatness(const Digraph& g, const PathDecomposition& d) { return Fatness(g.n(), d.bags); }

const char* to_string(DpdCondition c) {
  switch (c) {
    case DpdCondition::kNone: return "none";
    case DpdCondition::kNoBags: return "no-bags";
    case DpdCondition::kVertexOutOfRange: return "vertex-out-of-range";
    case DpdCondition::kCoverage: return "DPW-1";
    case DpdCondition::kConvexity: return "DPW-2";
    case DpdCondition::kArc: return "DPW-3";
  }
  return "unknown";
}

namespace {

struct Span {
  int first = std::numeric_limits<int>::max();
  int last = -1;
};

std::vector<Span> vertex_spans(int n, const PathDecomposition& d) {
  std::vector<Span> spans(n);
  for (int i = 0; i < d.size(); ++i) {
    for (int v : d.bags[i]) {
      spans[v].first = std::min(spans[v].first, i);
      spans[v].last = std::max(spans[v].last, i);
    }
  }
  return spans;
}

// DPW-2 read literally: X_i ∩ X_k ⊆ X_j for all i <= j <= k.
std::optional<std::array<int, 3>> convexity_triple(const PathDecomposition& d) {
  const int r = d.size();
  for (int i = 0; i < r; ++i) {
    for (int k = i + 2; k < r; ++k) {
      const VertexSet common = d.bags[i] & d.bags[k];
      if (common.empty()) continue;
      for (int j = i + 1; j < k; ++j) {
        if (!common.subset_of(d.bags[j])) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

// DPW-2': the positions holding each vertex form an interval.
std::optional<int> non_interval_vertex(int n, const PathDecomposition& d) {
  const std::vector<Span> spans = vertex_spans(n, d);
  for (int v = 0; v < n; ++v) {
    if (spans[v].last < 0) continue;
    for (int i = spans[v].first; i <= spans[v].last; ++i) {
      if (!d.bags[i].contains(v)) return v;
    }
  }
  return std::nullopt;
}

// DPW-3': for 0 < i < r-1 no arc of G ∖ X_i runs from the bags after i into
// the bags before i.
std::optional<Arc> cut_form_arc(const Digraph& g, const PathDecomposition& d) {
  const int r = d.size();
  std::vector<VertexSet> prefix(r + 1), suffix(r + 1);
  for (int i = 0; i < r; ++i) prefix[i + 1] = prefix[i] | d.bags[i];
  for (int i = r - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | d.bags[i];
  for (int i = 1; i + 1 < r; ++i) {
    const VertexSet left = prefix[i] - d.bags[i];
    const VertexSet right = suffix[i + 1] - d.bags[i];
    for (int u : right) {
      const VertexSet hit = g.out(u) & left;
      if (!hit.empty()) return Arc{u, hit.front()};
    }
  }
  return std::nullopt;
}

}  // namespace

DpdReport validate_dpd(const Digraph& g, const PathDecomposition& d) {
  DpdReport report;
  auto fail = [&report](DpdCondition c, std::string message) {
    report.valid = false;
    report.failed = c;
    report.message = std::move(message);
    return report;
  };
  if (d.bags.empty()) return fail(DpdCondition::kNoBags, "decomposition has no bags");
  const VertexSet all = g.vertices();
  for (int i = 0; i < d.size(); ++i) {
    const VertexSet stray = d.bags[i] - all;
    if (!stray.empty()) {
      report.vertex = stray.front();
      return fail(DpdCondition::kVertexOutOfRange,
                  "bag " + std::to_string(i) + " holds vertex " +
                      std::to_string(stray.front()) + " outside 0.." +
                      std::to_string(g.n() - 1));
    }
  }

  VertexSet covered;
  for (VertexSet bag : d.bags) covered |= bag;
  if (covered != all) {
    report.vertex = (all - covered).front();
    return fail(DpdCondition::kCoverage,
                "vertex " + std::to_string(*report.vertex) + " is in no bag");
  }

  const auto triple = convexity_triple(d);
  const auto gap_vertex = non_interval_vertex(g.n(), d);
  if (triple.has_value() != gap_vertex.has_value()) {
    report.equivalence_alarm = true;
    report.alarm = "convexity and interval forms disagree";
  }
  if (triple) {
    report.triple = triple;
    const VertexSet lost = (d.bags[(*triple)[0]] & d.bags[(*triple)[2]]) - d.bags[(*triple)[1]];
    report.vertex = lost.front();
    return fail(DpdCondition::kConvexity,
                "vertex " + std::to_string(lost.front()) + " is in bags " +
                    std::to_string((*triple)[0]) + " and " + std::to_string((*triple)[2]) +
                    " but not in bag " + std::to_string((*triple)[1]));
  }

  const std::vector<Span> spans = vertex_spans(g.n(), d);
  std::optional<Arc> backward;
  for (const Arc& a : g.arcs()) {
    if (spans[a.tail].first > spans[a.head].last) {
      backward = a;
      break;
    }
  }
  const auto cut_arc = cut_form_arc(g, d);
  if (backward.has_value() != cut_arc.has_value()) {
    report.equivalence_alarm = true;
    if (!report.alarm.empty()) report.alarm += "; ";
    report.alarm += backward ? "cut form misses arc (" + std::to_string(backward->tail) + "," +
                                   std::to_string(backward->head) + ")"
                             : "cut form rejects a decomposition the arc form accepts";
  }
  if (backward) {
    report.arc = backward;
    return fail(DpdCondition::kArc,
                "arc (" + std::to_string(backward->tail) + "," + std::to_string(backward->head) +
                    "): tail first appears in bag " + std::to_string(spans[backward->tail].first) +
                    ", head last appears in bag " + std::to_string(spans[backward->head].last));
  }
  report.valid = true;
  return report;
}

namespace {

void require_valid(const Digraph& g, const PathDecomposition& d, const char* routine) {
  const DpdReport report = validate_dpd(g, d);
  if (!report.valid) {
    throw InvalidDecomposition(std::string(routine) + ": " + to_string(report.failed) + ": " +
                               report.message);
  }
}

}  // namespace

std::vector<DpdViolation> lean_violations(const Digraph& g, const PathDecomposition& d,
                                          int limit) {
  require_valid(g, d, "lean_violations");
  detail::PathCounter counter(g);
  std::vector<DpdViolation> found;
  const int r = d.size();
  for (int gap = 0; gap < r && found.empty(); ++gap) {
    for (int t1 = 0; t1 + gap < r; ++t1) {
      const int t2 = t1 + gap;
      // Only k up to the smallest consecutive intersection in [t1, t2-1] can
      // violate the condition.
      int k_max = std::min(d.bags[t1].size(), d.bags[t2].size());
      for (int i = t1; i < t2; ++i) k_max = std::min(k_max, (d.bags[i] & d.bags[i + 1]).size());
      for (int k = k_max; k >= 1; --k) {
        for_each_subset_of_size(d.bags[t1], k, [&](VertexSet z1) {
          return for_each_subset_of_size(d.bags[t2], k, [&](VertexSet z2) {
            if (counter.count(z2, z1) >= k) return true;
            found.push_back(DpdViolation{t1, t2, k, z1, z2, min_separator(g, z2, z1)});
            return static_cast<int>(found.size()) < limit;
          });
        });
        if (static_cast<int>(found.size()) >= limit) return found;
      }
    }
  }
  return found;
}

std::optional<DpdViolation> check_lean_dpd(const Digraph& g, const PathDecomposition& d) {
  std::vector<DpdViolation> found = lean_violations(g, d, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<LinkedViolation> check_linked_dpd(const Digraph& g, const PathDecomposition& d) {
  require_valid(g, d, "check_linked_dpd");
  const int r = d.size();
  for (int gap = 0; gap < r; ++gap) {
    for (int t1 = 0; t1 + gap < r; ++t1) {
      const int t2 = t1 + gap;
      int smallest = std::numeric_limits<int>::max();
      for (int i = t1; i <= t2; ++i) smallest = std::min(smallest, d.bags[i].size());
      const int paths = count_disjoint_paths(g, d.bags[t2], d.bags[t1]);
      if (paths < smallest) {
        return LinkedViolation{t1, t2, paths + 1, min_separator(g, d.bags[t2], d.bags[t1])};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Vertex-separation search. With I the set of vertices introduced so far, a
// vertex must stay in the bag while one of its in-neighbours is still
// missing from I (the forget rule), and may be dropped as soon as all of
// them are in. Forgetting early never hurts, so the state is just I and the
// bag created by introducing u is pending(I) ∪ {u}.
class DpwSearch {
 public:
  explicit DpwSearch(const Digraph& g) : g_(g), full_(g.vertices().bits()) {}

  std::optional<std::vector<int>> order_within(int bag_limit) {
    bag_limit_ = bag_limit;
    failed_.assign(std::size_t{1} << g_.n(), 0);
    std::vector<int> order;
    if (!search(0, order)) return std::nullopt;
    return order;
  }

  VertexSet pending(std::uint64_t introduced) const {
    const VertexSet in_set = VertexSet::from_bits(introduced);
    VertexSet open;
    for (int v : in_set) {
      if (!g_.in(v).subset_of(in_set)) open.insert(v);
    }
    return open;
  }

 private:
  bool search(std::uint64_t introduced, std::vector<int>& order) {
    if (introduced == full_) return true;
    if (failed_[introduced]) return false;
    const int open = pending(introduced).size();
    if (open + 1 <= bag_limit_) {
      for (int u : VertexSet::from_bits(full_ & ~introduced)) {
        order.push_back(u);
        if (search(introduced | (std::uint64_t{1} << u), order)) return true;
        order.pop_back();
      }
    }
    failed_[introduced] = 1;
    return false;
  }

  const Digraph& g_;
  std::uint64_t full_;
  int bag_limit_ = 0;
  std::vector<char> failed_;
};

}  // namespace

ExactDpw exact_dpw(const Digraph& g) {
  require_size("exact_dpw", g.n(), 20);
  if (g.n() > 30) throw SizeLimitExceeded("exact_dpw: state table needs n <= 30");
  ExactDpw result;
  if (g.n() == 0) {
    result.decomposition.bags = {VertexSet{}};
    return result;
  }
  DpwSearch search(g);
  for (int w = 0; w < g.n(); ++w) {
    const auto order = search.order_within(w + 1);
    if (!order) continue;
    std::uint64_t introduced = 0;
    for (int u : *order) {
      VertexSet bag = search.pending(introduced);
      bag.insert(u);
      result.decomposition.bags.push_back(bag);
      introduced |= std::uint64_t{1} << u;
    }
    result.width = w;
    const DpdReport report = validate_dpd(g, result.decomposition);
    if (!report.valid) {
      throw std::logic_error("exact_dpw produced an invalid decomposition: " + report.message);
    }
    if (result.decomposition.width() != w) {
      throw std::logic_error("exact_dpw: decomposition width does not match the search bound");
    }
    return result;
  }
  throw std::logic_error("exact_dpw: no decomposition of width n-1 found");
}

bool check_path_meeting(const Digraph& g, const PathDecomposition& d, std::span<const int> path,
                        int a, int b) {
  if (path.size() < 2) throw std::invalid_argument("check_path_meeting: path needs two vertices");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_arc(path[i], path[i + 1])) {
      throw std::invalid_argument("check_path_meeting: not a directed path of the digraph");
    }
  }
  if (VertexSet::of(path).size() != static_cast<int>(path.size())) {
    throw std::invalid_argument("check_path_meeting: path repeats a vertex");
  }
  if (a < 0 || b >= d.size() || a > b) {
    throw std::invalid_argument("check_path_meeting: need 0 <= a <= b < r");
  }
  if (!d.bags[a].contains(path.back()) || !d.bags[b].contains(path.front())) {
    throw std::invalid_argument("check_path_meeting: last vertex must be in X_a, first in X_b");
  }
  const VertexSet on_path = VertexSet::of(path);
  for (int i = a; i <= b; ++i) {
    if (!d.bags[i].intersects(on_path)) return false;
  }
  return true;
}

PathDecomposition normalize_dpd(const Digraph& g, const PathDecomposition& d) {
  require_valid(g, d, "normalize_dpd");
  std::vector<VertexSet> bags = d.bags;
  bool changed = true;
  while (changed && bags.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < bags.size(); ++i) {
      const bool absorbed_left = i > 0 && bags[i].subset_of(bags[i - 1]);
      const bool absorbed_right = i + 1 < bags.size() && bags[i].subset_of(bags[i + 1]);
      if (absorbed_left || absorbed_right) {
        bags.erase(bags.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  PathDecomposition out{bags};
  const DpdReport report = validate_dpd(g, out);
  if (!report.valid) {
    throw std::logic_error("normalize_dpd broke validity: " + report.message);
  }
  return out;
}

}  // namespace dwidth
