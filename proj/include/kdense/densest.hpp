#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kdense/graph.hpp"
#include "kdense/parallel.hpp"

namespace kdense {

struct DensestResult {
  VertexSet set;
  /// Density of `set` under the weighting the routine documents.
  Density density;
};

/// Exact vertex-weighted densest subgraph: maximizes (|E(S)| + w(S)) / |S|
/// over non-empty S. Throws GraphError(kEmptySet) on the empty graph.
DensestResult densest_subgraph(const Graph& g, const VertexWeights& w = {});

/// Exact densest subgraph of G[allowed] among sets containing `forced`.
/// An empty `allowed` span means every vertex is allowed; `forced` may be
/// empty. The reported density uses `w`.
DensestResult densest_containing(const Graph& g, const VertexSet& forced, std::span<const char> allowed = {},
                                 const VertexWeights& w = {});

/// Densest (unweighted) subgraph among those containing v.
DensestResult densest_with_vertex(const Graph& g, Vertex v);

struct SupergraphResult {
  /// A densest strict supergraph of G[V0] (unweighted density).
  DensestResult best;
  /// G[V0 ∪ V1] where V1 is a densest subgraph of G[V \ V0] weighted by
  /// w(v) = |N(v) ∩ V0|.
  DensestResult weighted_construction;
  /// density(weighted_construction) <= density(G[V0]).
  bool hypothesis_held = false;
  /// weighted_construction is itself a densest strict supergraph.
  bool construction_optimal = false;
};

/// Densest strict supergraph of G[V0]. Runs the complement-weighting
/// construction (checking its density identity on every call) and the exact
/// route "max over x outside V0 of the densest set containing V0 ∪ {x}";
/// `best` is the construction whenever it ties the exact optimum.
SupergraphResult densest_strict_supergraph(const Graph& g, const VertexSet& v0,
                                           Execution exec = Execution::kParallel);

/// Densest strict supergraph of G[V0] whose vertex set differs from every
/// set in `avoid`; nullopt when no such set exists. Best-first search over
/// disjoint constrained regions: a region whose optimum is an avoided set is
/// split so that exactly that set is excluded.
std::optional<DensestResult> densest_strict_supergraph_avoiding(const Graph& g, const VertexSet& v0,
                                                                const std::vector<VertexSet>& avoid);

/// Greedy min-degree peeling; returns the densest prefix, the smallest one on
/// ties. Always within a factor 1/2 of the optimum.
DensestResult peel_half_approx(const Graph& g);

}  // namespace kdense
