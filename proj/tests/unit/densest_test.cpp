#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "kdense/densest.hpp"

namespace kdense {
namespace {

Graph k4_pendant() { return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}); }

TEST(DensestSubgraph, Examples) {
  const Graph k4_iso = disjoint_union(complete_graph(4), build_graph(1, {}));
  DensestResult r = densest_subgraph(k4_iso);
  EXPECT_EQ(r.density, Rational(3, 2));
  EXPECT_EQ(r.set, (VertexSet{0, 1, 2, 3}));

  EXPECT_EQ(densest_subgraph(build_graph(3, {{0, 1}, {1, 2}})).density, Rational(2, 3));

  VertexWeights w(1);
  w.set(0, 7);
  EXPECT_EQ(densest_subgraph(build_graph(1, {}), w).density, Rational(7));
  EXPECT_THROW(densest_subgraph(build_graph(0, {})), GraphError);
}

TEST(DensestSubgraph, EdgelessIsZero) {
  const DensestResult r = densest_subgraph(build_graph(4, {}));
  EXPECT_EQ(r.density, Rational(0));
  EXPECT_FALSE(r.set.empty());
}

TEST(DensestSubgraph, MatchesBruteForceWeighted) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 500; ++iter) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 8);
    const Graph g = brute::random_graph(n, 0.45, rng);
    const VertexWeights w = brute::random_weights(n, 2, rng);
    const DensestResult r = densest_subgraph(g, w);
    ASSERT_EQ(r.density, brute::densest(g, w));
    EXPECT_EQ(density_of(g, r.set, w), r.density);
  }
}

TEST(DensestWithVertex, Examples) {
  const Graph tri_iso = build_graph(4, {{0, 1}, {1, 2}, {0, 2}});
  DensestResult r = densest_with_vertex(tri_iso, 3);
  EXPECT_EQ(r.set, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(r.density, Rational(3, 4));

  r = densest_with_vertex(complete_graph(3), 0);
  EXPECT_EQ(r.set, (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.density, Rational(1));

  const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  r = densest_with_vertex(star, 1);
  EXPECT_EQ(r.set, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(r.density, Rational(3, 4));

  EXPECT_THROW(densest_with_vertex(star, 4), GraphError);
}

TEST(DensestWithVertex, MatchesBruteForce) {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 8);
    const Graph g = brute::random_graph(n, 0.4, rng);
    const Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const DensestResult r = densest_with_vertex(g, v);
    EXPECT_TRUE(r.set.contains(v));
    ASSERT_EQ(r.density, brute::densest_containing(g, std::uint64_t{1} << v));
  }
}

TEST(DensestContaining, RespectsAllowedMask) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 7);
    const Graph g = brute::random_graph(n, 0.5, rng);
    std::vector<char> allowed(static_cast<std::size_t>(n));
    for (auto& a : allowed) a = static_cast<char>(rng() % 4 != 0);
    allowed[0] = 1;
    const VertexSet forced = rng() % 2 ? VertexSet{0} : VertexSet{};
    const DensestResult r = densest_containing(g, forced, allowed);
    // Brute force over allowed supersets of forced.
    Density best(-1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      bool ok = forced.empty() || (mask & 1);
      for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v & 1) && !allowed[static_cast<std::size_t>(v)]) ok = false;
      }
      if (ok) best = std::max(best, density_of(g, VertexSet::from_bits(mask)));
    }
    ASSERT_EQ(r.density, best);
    for (Vertex v : r.set) EXPECT_TRUE(allowed[static_cast<std::size_t>(v)]);
  }
}

TEST(DensestContaining, ForcedMustBeAllowed) {
  std::vector<char> allowed{1, 0, 1};
  EXPECT_THROW(densest_containing(complete_graph(3), {1}, allowed), GraphError);
}

TEST(StrictSupergraph, Examples) {
  SupergraphResult r = densest_strict_supergraph(k4_pendant(), {0, 1, 2, 3});
  EXPECT_EQ(r.best.set, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.best.density, Rational(7, 5));

  const Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {0, 4}});
  r = densest_strict_supergraph(g, {0, 1, 2});
  EXPECT_EQ(r.best.set, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(r.best.density, Rational(5, 4));

  r = densest_strict_supergraph(build_graph(2, {{0, 1}}), {0});
  EXPECT_EQ(r.best.set, (VertexSet{0, 1}));
  EXPECT_EQ(r.best.density, Rational(1, 2));
}

TEST(StrictSupergraph, Errors) {
  EXPECT_THROW(densest_strict_supergraph(complete_graph(3), {0, 1, 2}), GraphError);
  EXPECT_THROW(densest_strict_supergraph(complete_graph(3), {}), GraphError);
}

TEST(StrictSupergraph, MatchesBruteForceAndFlags) {
  std::mt19937_64 rng(4);
  int hypothesis = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 7);
    const Graph g = brute::random_graph(n, 0.5, rng);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t v0 = 1 + rng() % (full - 1);
    const VertexSet s0 = VertexSet::from_bits(v0);
    const SupergraphResult r = densest_strict_supergraph(g, s0, Execution::kSerial);
    ASSERT_EQ(r.best.density, *brute::strict_supergraph(g, v0));
    EXPECT_TRUE(s0.is_subset_of(r.best.set) && s0 != r.best.set);
    EXPECT_TRUE(s0.is_subset_of(r.weighted_construction.set) && s0 != r.weighted_construction.set);
    EXPECT_EQ(r.hypothesis_held, r.weighted_construction.density <= density_of(g, s0));
    EXPECT_EQ(r.construction_optimal, r.weighted_construction.density == r.best.density);
    hypothesis += r.hypothesis_held;

    const SupergraphResult p = densest_strict_supergraph(g, s0, Execution::kParallel);
    EXPECT_EQ(p.best.set, r.best.set);
    EXPECT_EQ(p.weighted_construction.set, r.weighted_construction.set);
  }
  EXPECT_GT(hypothesis, 50);
}

TEST(StrictSupergraphAvoiding, MatchesBruteForce) {
  std::mt19937_64 rng(6);
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 6);
    const Graph g = brute::random_graph(n, 0.5, rng);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t v0 = 1 + rng() % (full - 1);
    std::vector<VertexSet> avoid;
    std::vector<std::uint64_t> avoid_masks;
    const int count = static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      const std::uint64_t m = (v0 | (rng() & full));
      avoid.push_back(VertexSet::from_bits(m));
      avoid_masks.push_back(m);
    }
    // Also avoid the unconstrained optimum to force a split.
    const auto first = densest_strict_supergraph(g, VertexSet::from_bits(v0)).best.set;
    avoid.push_back(first);
    avoid_masks.push_back(brute::to_mask(first));

    std::optional<Density> expect;
    for (std::uint64_t m = 1; m <= full; ++m) {
      if ((m & v0) != v0 || m == v0) continue;
      if (std::find(avoid_masks.begin(), avoid_masks.end(), m) != avoid_masks.end()) continue;
      const Density d = density_of(g, VertexSet::from_bits(m));
      if (!expect || d > *expect) expect = d;
    }
    const auto got = densest_strict_supergraph_avoiding(g, VertexSet::from_bits(v0), avoid);
    ASSERT_EQ(got.has_value(), expect.has_value());
    if (got) {
      EXPECT_EQ(got->density, *expect);
      EXPECT_EQ(std::find(avoid.begin(), avoid.end(), got->set), avoid.end());
    }
  }
}

TEST(PeelHalfApprox, Examples) {
  EXPECT_EQ(peel_half_approx(complete_graph(4)).density, Rational(3, 2));
  const Graph k3p = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  const DensestResult r = peel_half_approx(k3p);
  EXPECT_EQ(r.density, Rational(1));
  EXPECT_EQ(r.set, (VertexSet{0, 1, 2}));
  EXPECT_EQ(peel_half_approx(build_graph(3, {})).density, Rational(0));
  EXPECT_THROW(peel_half_approx(build_graph(0, {})), GraphError);
}

TEST(PeelHalfApprox, WithinHalf) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 10);
    const Graph g = brute::random_graph(n, 0.4, rng);
    const DensestResult r = peel_half_approx(g);
    EXPECT_EQ(density_of(g, r.set), r.density);
    EXPECT_GE(r.density * Rational(2), densest_subgraph(g).density);
  }
}

}  // namespace
}  // namespace kdense
