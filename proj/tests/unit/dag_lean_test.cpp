#include <random>

#include <gtest/gtest.h>

#include "dwidth/dag_lean.hpp"
#include "dwidth/generate.hpp"
#include "dwidth/harness.hpp"
#include "support.hpp"

using namespace dwidth;
using test::bags;
using test::digraph;
using test::dpd;

namespace {

bool has_check(const std::vector<Discrepancy>& list, const std::string& id) {
  for (const Discrepancy& d : list) {
    if (d.check == id) return true;
  }
  return false;
}

DagViolation as_dag(const DpdViolation& w) {
  return {w.t1, w.t2, w.k, w.z1, w.z2, w.t2 - w.t1, w.certificate};
}

oracle::Graph dag_oracle(const Dag& t) {
  oracle::Graph out{t.size(), {}};
  for (const Arc& a : t.arcs()) out.arcs.emplace_back(a.tail, a.head);
  return out;
}

std::vector<oracle::Mask> masks(const std::vector<VertexSet>& list) {
  std::vector<oracle::Mask> out;
  for (VertexSet b : list) out.push_back(static_cast<oracle::Mask>(b.bits()));
  return out;
}

bool oracle_valid(const Digraph& g, const DagDecomposition& d) {
  return oracle::valid_dagdec(test::to_oracle(g), dag_oracle(d.dag), masks(d.bags));
}

}  // namespace

TEST(SplitBagsDag, PathShapeReproducesPathSplit) {
  const Digraph g = test::cycle(3);
  const PathDecomposition p = dpd({{0, 1, 2}, {0, 1, 2}});
  const DpdViolation w{0, 1, 2, VertexSet{1, 2}, VertexSet{0, 1}, {}};
  const Separation sep{VertexSet{0, 1}, VertexSet{1, 2}};
  const PathSystem paths{{{1}}};
  const SplitBags path = split_bags(g, p, w, sep, paths);
  const DagSplit shaped = split_bags_dag(g, dpd_to_dagdec(g, p), as_dag(w), sep, paths);
  EXPECT_EQ(std::vector<VertexSet>(shaped.b.begin(), shaped.b.begin() + 2), path.before);
  EXPECT_EQ(std::vector<VertexSet>(shaped.a.begin(), shaped.a.end()), path.after);
}

TEST(SplitBagsDag, EmptySeparatorIntersectsSides) {
  const Digraph g(2);
  const DagDecomposition d{Dag(1, {}), bags({{0, 1}})};
  const DagViolation w{0, 0, 1, VertexSet{0}, VertexSet{1}, 0, {}};
  const DagSplit s = split_bags_dag(g, d, w, Separation{VertexSet{1}, VertexSet{0}}, PathSystem{});
  EXPECT_EQ(s.b, bags({{0}}));
  EXPECT_EQ(s.a, bags({{1}}));
}

TEST(SplitBagsDag, BagInsideSeparatorIsKept) {
  // 0 → 1 → 2 → 0 on nodes 0 → 2 ← 1; node 1 holds only the separator.
  const Digraph g = test::cycle(3);
  const std::vector<Arc> arcs{{0, 2}, {1, 2}};
  const DagDecomposition d{Dag(3, arcs), bags({{0, 1, 2}, {1}, {0, 1, 2}})};
  ASSERT_TRUE(validate_dagdec(g, d).valid);
  const Separation sep{VertexSet{0, 1}, VertexSet{1, 2}};
  const DagViolation w{0, 2, 2, VertexSet{1, 2}, VertexSet{0, 1}, 1, sep};
  const DagSplit s = split_bags_dag(g, d, w, sep, PathSystem{{{1}}});
  EXPECT_EQ(s.b[1], VertexSet{1});
  EXPECT_EQ(s.a[1], VertexSet{1});
}

TEST(MergeDagdecs, SingleNodeArcless) {
  const Digraph g(2);
  const DagDecomposition d{Dag(1, {}), bags({{0, 1}})};
  const DagViolation w{0, 0, 1, VertexSet{0}, VertexSet{1}, 0, {}};
  const Separation sep{VertexSet{1}, VertexSet{0}};
  const MergeResult m = merge_dagdecs(g, d.dag, split_bags_dag(g, d, w, sep, PathSystem{}));
  EXPECT_TRUE(m.report.valid);
  EXPECT_FALSE(m.pruned);
  EXPECT_EQ(m.decomposition.bags, bags({{0}, {1}}));
  EXPECT_EQ(m.decomposition.dag.arcs(), (std::vector<Arc>{{0, 1}}));
  EXPECT_TRUE(oracle_valid(g, m.decomposition));
  EXPECT_EQ(fatness(g, d).counts(), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(fatness(g, m.decomposition).counts(), (std::vector<int>{0, 2, 0}));
}

TEST(MergeDagdecs, PathShapeMatchesConcatenation) {
  const Digraph g(2);
  const PathDecomposition p = dpd({{0, 1}, {0, 1}});
  const DpdViolation w{0, 1, 1, VertexSet{0}, VertexSet{1}, {}};
  const Separation sep{VertexSet{1}, VertexSet{0}};
  const PathDecomposition cat = concatenate(g, split_bags(g, p, w, sep, PathSystem{}));
  const DagDecomposition d = dpd_to_dagdec(g, p);
  const MergeResult m = merge_dagdecs(g, d.dag, split_bags_dag(g, d, as_dag(w), sep, PathSystem{}));
  EXPECT_TRUE(m.report.valid);
  EXPECT_EQ(m.decomposition, dpd_to_dagdec(g, cat));
}

TEST(RefineOnceDag, LeanGivesNothing) {
  const DagDecomposition d{Dag(2, std::vector<Arc>{{0, 1}}), bags({{0, 1}, {0, 2}})};
  EXPECT_FALSE(refine_once_dag(test::cycle(3), d));
}

TEST(RefineOnceDag, SingleNodeArcless) {
  const Digraph g(2);
  const auto step = refine_once_dag(g, DagDecomposition{Dag(1, {}), bags({{0, 1}})});
  ASSERT_TRUE(step);
  EXPECT_FALSE(step->fatal());
  EXPECT_TRUE(step->discrepancies.empty());
  EXPECT_EQ(step->fatness_before.counts(), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(step->fatness_after.counts(), (std::vector<int>{0, 2, 0}));
}

TEST(LeanifyDagdec, CycleFromSingleNode) {
  const Digraph g = test::cycle(3);
  const DagLeanifyResult r = leanify_dagdec(g, DagDecomposition{Dag(1, {}), {g.vertices()}});
  EXPECT_TRUE(r.lean);
  EXPECT_TRUE(oracle_valid(g, r.decomposition));
  EXPECT_FALSE(oracle::brute_force_lean(test::to_oracle(g), dag_oracle(r.decomposition.dag),
                                        masks(r.decomposition.bags), false));
  for (const DagRefinementStep& s : r.trace) EXPECT_LT(s.fatness_after, s.fatness_before);
}

TEST(LeanifyDagdec, LeanInputIsIdentity) {
  const Digraph g = test::cycle(3);
  const DagDecomposition d{Dag(2, std::vector<Arc>{{0, 1}}), bags({{0, 1}, {0, 2}})};
  const DagLeanifyResult r = leanify_dagdec(g, d);
  EXPECT_TRUE(r.lean);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.decomposition, d);
}

TEST(LeanifyDagdec, OptimalStartsOnSmallFamilies) {
  for (const Digraph& g : {test::cycle(4), bidirect(family_graph("path", 4)),
                           bidirect(family_graph("clique", 3))}) {
    const ExactDgw e = exact_dgw_tiny(g, g.n());
    const DagLeanifyResult r = leanify_dagdec(g, e.decomposition);
    EXPECT_TRUE(r.lean);
    EXPECT_EQ(r.decomposition.width(), e.width);
    EXPECT_TRUE(oracle_valid(g, r.decomposition));
  }
}

// Arcs 0→1, 1→4, 3→4, 4→0. The optimal decomposition has a violation at a
// single node whose separator is empty. Vertex 0 goes to A, but its
// out-neighbour 1 lives only in bags that the copy-A subtree below t1 does
// not contain, so the bridge guard (empty) lets the arc 0→1 escape. No
// alternative choice repairs it and the step is fatal.
TEST(RefinementDiscrepancy, BridgeGuardTooSmall) {
  const Digraph g = digraph(5, {{0, 1}, {1, 4}, {3, 4}, {4, 0}});
  const ExactDgw e = exact_dgw_tiny(g, 5);
  ASSERT_EQ(e.status, DgwStatus::kFound);
  const DagLeanifyResult r = leanify_dagdec(g, e.decomposition);
  EXPECT_FALSE(r.lean);
  ASSERT_FALSE(r.trace.empty());
  const DagRefinementStep& last = r.trace.back();
  EXPECT_TRUE(last.fatal());
  EXPECT_EQ(last.separation.order(), 0);
  EXPECT_TRUE(has_check(last.discrepancies, checks::kResultValid));
  EXPECT_FALSE(oracle_valid(g, last.result));
}

// On path-shaped inputs the DAG engine, fed the same violation and
// separation, keeps the same bags as the path engine on B nodes up to t2 and
// A nodes from t1.
class DagLeanRandom : public ::testing::TestWithParam<int> {};

TEST_P(DagLeanRandom, PathShapeAgreesWithPathEngine) {
  std::mt19937_64 rng(GetParam());
  const Digraph g = generate({Model::kGnp, 5, 0.3, "", rng()});
  for (int trial = 0; trial < 5; ++trial) {
    const PathDecomposition p = random_dpd(g, rng);
    const auto w = check_lean_dpd(g, p);
    if (!w) continue;
    const Separation sep = choose_separation(g, p, *w);
    const RefinementStep path = refine_with(g, p, *w, sep);
    const DagRefinementStep shaped = refine_with_dag(g, dpd_to_dagdec(g, p), as_dag(*w), sep);
    EXPECT_EQ(path.paths, shaped.paths);
    const int r = p.size();
    for (int i = 0; i <= w->t2; ++i) EXPECT_EQ(shaped.split.b[i], path.split.before[i]);
    for (int i = w->t1; i < r; ++i) EXPECT_EQ(shaped.split.a[i], path.split.after[i - w->t1]);
    EXPECT_EQ(shaped.fatal(), !oracle_valid(g, shaped.result) ||
                                  !(fatness(g, shaped.result) < shaped.fatness_before));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DagLeanRandom, ::testing::Range(1, 21));
