#pragma once

#include <string>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

/// Graph K_{nB} joined completely to a copy of the base graph G_B. Clique
/// vertices are 0..nB-1, base vertex b becomes nB + b.
struct BisectionInstance {
  Graph base;
  Graph built;
  VertexSet clique_ids;
  VertexSet base_ids;

  std::int64_t nb() const { return base.n(); }
  std::int64_t mb() const { return static_cast<std::int64_t>(base.m()); }
  /// Overlap bound used by the reduction.
  static Rational alpha() { return Rational(2, 3); }
};

/// Base graph plus k-3 disjoint cliques, each on |V_base| vertices.
struct CliquePartitionInstance {
  Graph base;
  Graph built;
  int k = 3;
  Density threshold;
  /// Vertex sets of the added cliques, in id order.
  std::vector<VertexSet> added_cliques;
};

/// (k-3)(nV-1)/2 + (nV-3)/2.
Density clique_partition_threshold(std::int64_t nv, std::int64_t k);

CliquePartitionInstance gen_from_clique_partition(const Graph& base, int k);

BisectionInstance gen_from_bisection(const Graph& base);

/// (2 nB^2 - nB + mB - h) / (3 nB / 2).
Density bisection_value(std::int64_t nb, std::int64_t mb, std::int64_t h);

/// d_x = (|E(X)| + |E(X, Vp)|) / |X| >= density(G[Vp]). When true, also
/// checks that G[Vp ∪ X] is at least as dense as G[Vp] (std::logic_error if
/// not).
bool density_merge_check(const Graph& g, const VertexSet& vp, const VertexSet& x);

struct Normalization {
  VertexSet y1;
  VertexSet y2;
  /// Step 2 found the larger side missing clique vertices and added them.
  bool step2_repaired = false;
  /// density(Y_i) >= density(V_i) held for both sides (total never drops).
  bool sides_non_decreasing = false;
  std::vector<std::string> trace;
};

/// Rewrites a feasible alpha = 2/3 pair on a bisection instance into one with
/// Y1 ∩ Y2 = V_c, Y1 ∪ Y2 = V and |Y1| = |Y2| = 3nB/2 without lowering the
/// total density. Throws std::invalid_argument on an infeasible input pair
/// and std::logic_error if a guarantee fails.
Normalization normalize_overlap_solution(const BisectionInstance& inst, const VertexSet& v1, const VertexSet& v2);

/// Number of base edges with one endpoint in each part (base numbering).
std::int64_t bisection_cut(const Graph& base, const VertexSet& part1);

struct BisectionCheck {
  Density total;
  Density expected;
  std::int64_t cut = 0;
  bool holds = false;
};

/// Lifts an equal partition of G_B (base numbering) to the pair
/// (V_c ∪ part1, V_c ∪ part2) and compares its total density with
/// bisection_value(nB, mB, h).
BisectionCheck verify_bisection_equivalence(const BisectionInstance& inst, const VertexSet& part1,
                                            const VertexSet& part2, std::int64_t h);

}  // namespace kdense
