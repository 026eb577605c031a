#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "kdense/oracle.hpp"
#include "kdense/reductions.hpp"

namespace kdense {
namespace {

Graph c4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

TEST(CliquePartition, Threshold) {
  EXPECT_EQ(clique_partition_threshold(9, 3), Rational(3));
  EXPECT_EQ(clique_partition_threshold(4, 3), Rational(1, 2));
  EXPECT_EQ(clique_partition_threshold(4, 5), Rational(7, 2));
}

TEST(CliquePartition, Generator) {
  const Graph k333 = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(3));
  auto inst = gen_from_clique_partition(k333, 3);
  EXPECT_EQ(inst.threshold, Rational(3));
  EXPECT_EQ(inst.built.edges(), k333.edges());
  EXPECT_TRUE(inst.added_cliques.empty());

  const Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  inst = gen_from_clique_partition(c5, 3);
  EXPECT_EQ(inst.threshold, Rational(1));
  EXPECT_EQ(oracle_disjoint(inst.built, 3).total, Rational(1));

  inst = gen_from_clique_partition(complete_graph(3), 4);
  EXPECT_EQ(inst.built.n(), 6);
  EXPECT_EQ(inst.built.m(), 6u);
  EXPECT_EQ(inst.threshold, Rational(1));
  EXPECT_EQ(inst.added_cliques, (std::vector<VertexSet>{{3, 4, 5}}));

  EXPECT_THROW(gen_from_clique_partition(complete_graph(3), 2), std::invalid_argument);
  EXPECT_THROW(gen_from_clique_partition(complete_graph(2), 3), std::invalid_argument);
}

TEST(Bisection, Generator) {
  BisectionInstance inst = gen_from_bisection(c4());
  EXPECT_EQ(inst.built.n(), 8);
  EXPECT_EQ(inst.built.m(), 26u);
  EXPECT_EQ(inst.clique_ids, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(inst.base_ids, (VertexSet{4, 5, 6, 7}));

  inst = gen_from_bisection(build_graph(2, {}));
  EXPECT_EQ(inst.built.n(), 4);
  EXPECT_EQ(inst.built.m(), 5u);

  EXPECT_THROW(gen_from_bisection(complete_graph(3)), std::invalid_argument);
}

TEST(Bisection, GeneratorInvariants) {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 50; ++iter) {
    const Vertex nb = 2 * (1 + static_cast<Vertex>(rng() % 4));
    const Graph base = brute::random_graph(nb, 0.5, rng);
    const BisectionInstance inst = gen_from_bisection(base);
    for (Vertex u = 0; u < 2 * nb; ++u) {
      for (Vertex v = u + 1; v < 2 * nb; ++v) {
        const bool expect = u < nb || base.has_edge(u - nb, v - nb);
        EXPECT_EQ(inst.built.has_edge(u, v), expect);
      }
    }
  }
}

TEST(Bisection, Value) {
  EXPECT_EQ(bisection_value(4, 4, 2), Rational(5));
  EXPECT_EQ(bisection_value(4, 4, 4), Rational(14, 3));
  EXPECT_EQ(bisection_value(2, 0, 0), Rational(2));
  EXPECT_THROW(bisection_value(3, 0, 0), std::invalid_argument);
}

TEST(DensityMergeCheck, Examples) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}});
  EXPECT_TRUE(density_merge_check(g, {0, 1, 2}, {3}));
  EXPECT_EQ(density_of(g, {0, 1, 2, 3}), Rational(5, 4));
  EXPECT_FALSE(density_merge_check(build_graph(4, {{0, 1}, {1, 2}, {0, 2}}), {0, 1, 2}, {3}));
  EXPECT_TRUE(density_merge_check(build_graph(2, {{0, 1}}), {0}, {1}));
  EXPECT_THROW(density_merge_check(g, {0, 1}, {1, 3}), GraphError);
  EXPECT_THROW(density_merge_check(g, {}, {1}), GraphError);
}

TEST(DensityMergeCheck, RandomConclusionHolds) {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 500; ++iter) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 7);
    const Graph g = brute::random_graph(n, 0.5, rng);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v) {
      const auto r = rng() % 3;
      if (r == 0) a.push_back(v);
      if (r == 1) b.push_back(v);
    }
    if (a.empty() || b.empty()) continue;
    EXPECT_NO_THROW(density_merge_check(g, VertexSet(a), VertexSet(b)));
  }
}

TEST(Normalize, FixedPoint) {
  const BisectionInstance inst = gen_from_bisection(c4());
  const VertexSet v1{0, 1, 2, 3, 4, 5};
  const VertexSet v2{0, 1, 2, 3, 6, 7};
  const Normalization nz = normalize_overlap_solution(inst, v1, v2);
  EXPECT_EQ(nz.y1, v1);
  EXPECT_EQ(nz.y2, v2);
  EXPECT_FALSE(nz.step2_repaired);
}

TEST(Normalize, RejectsInfeasible) {
  const BisectionInstance inst = gen_from_bisection(c4());
  EXPECT_THROW(normalize_overlap_solution(inst, {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 7}), std::invalid_argument);
  EXPECT_THROW(normalize_overlap_solution(inst, {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 6, 7}),
               std::invalid_argument);
  EXPECT_THROW(normalize_overlap_solution(inst, {}, {0}), std::invalid_argument);
}

TEST(Normalize, RandomFeasiblePairs) {
  std::mt19937_64 rng(53);
  int done = 0;
  const Rational alpha = BisectionInstance::alpha();
  while (done < 300) {
    const Vertex nb = 2 * (1 + static_cast<Vertex>(rng() % 3));
    const BisectionInstance inst = gen_from_bisection(brute::random_graph(nb, 0.5, rng));
    const std::uint64_t full = (std::uint64_t{1} << (2 * nb)) - 1;
    const VertexSet v1 = VertexSet::from_bits(1 + rng() % full);
    const VertexSet v2 = VertexSet::from_bits(1 + rng() % full);
    if (!check_feasible(ProblemKind::overlap(alpha), {v1, v2})) continue;
    ++done;
    const Normalization nz = normalize_overlap_solution(inst, v1, v2);
    const Graph& g = inst.built;
    EXPECT_EQ(set_intersection(nz.y1, nz.y2), inst.clique_ids);
    EXPECT_EQ(set_union(nz.y1, nz.y2), VertexSet::range(2 * nb));
    EXPECT_EQ(nz.y1.size(), static_cast<std::size_t>(3 * nb / 2));
    EXPECT_EQ(nz.y2.size(), static_cast<std::size_t>(3 * nb / 2));
    EXPECT_TRUE(check_feasible(ProblemKind::overlap(alpha), {nz.y1, nz.y2}));
    EXPECT_GE(density_of(g, nz.y1) + density_of(g, nz.y2), density_of(g, v1) + density_of(g, v2));
    EXPECT_LT(density_of(g, nz.y1), Rational(nb));
  }
}

TEST(VerifyBisection, C4) {
  const BisectionInstance inst = gen_from_bisection(c4());
  BisectionCheck c = verify_bisection_equivalence(inst, {0, 1}, {2, 3}, 2);
  EXPECT_EQ(c.cut, 2);
  EXPECT_EQ(c.total, Rational(5));
  EXPECT_TRUE(c.holds);
  c = verify_bisection_equivalence(inst, {0, 2}, {1, 3}, 4);
  EXPECT_EQ(c.cut, 4);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(verify_bisection_equivalence(inst, {0, 1}, {2, 3}, 3).holds);
  EXPECT_THROW(verify_bisection_equivalence(inst, {0}, {1, 2, 3}, 2), std::invalid_argument);
  EXPECT_THROW(verify_bisection_equivalence(inst, {0, 1}, {1, 2}, 2), std::invalid_argument);
}

TEST(VerifyBisection, TotalTracksCut) {
  std::mt19937_64 rng(54);
  for (int iter = 0; iter < 100; ++iter) {
    const Vertex nb = 2 * (1 + static_cast<Vertex>(rng() % 3));
    const Graph base = brute::random_graph(nb, 0.5, rng);
    const BisectionInstance inst = gen_from_bisection(base);
    std::vector<Vertex> perm(static_cast<std::size_t>(nb));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const VertexSet p1(std::vector<Vertex>(perm.begin(), perm.begin() + nb / 2));
    const VertexSet p2(std::vector<Vertex>(perm.begin() + nb / 2, perm.end()));
    const std::int64_t cut = bisection_cut(base, p1);
    EXPECT_TRUE(verify_bisection_equivalence(inst, p1, p2, cut).holds);
  }
}

}  // namespace
}  // namespace kdense
