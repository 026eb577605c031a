#pragma once

#include <optional>
#include <vector>

#include "kdense/densest.hpp"
#include "kdense/solution.hpp"

namespace kdense {

/// A non-empty family of prior vertex sets and their union.
struct CoverFamily {
  std::vector<std::size_t> members;  // indices into the prior list
  VertexSet vertices;
};

/// All 2^l - 1 cover families of `prior`, in increasing bitmask order.
std::vector<CoverFamily> cover_families(const std::vector<VertexSet>& prior);

/// Best subgraph containing at least one vertex outside the union of `prior`:
/// the densest of densest_with_vertex(v) over those v. nullopt when the union
/// is the whole vertex set.
std::optional<DensestResult> case_outside(const Graph& g, const std::vector<VertexSet>& prior,
                                          Execution exec = Execution::kParallel);

/// Best subgraph distinct from `prior` found inside some cover union V_C:
/// either V_C itself or, for every ordered pair v_in != v_out of V_C, the
/// densest subgraph of G[V_C \ {v_out}] containing v_in.
std::optional<DensestResult> case_covered(const Graph& g, const std::vector<VertexSet>& prior,
                                          Execution exec = Execution::kParallel);

/// Densest subgraph distinct from every prior set. With no prior sets this
/// is the densest subgraph. Ties between the two cases go to case_outside.
DensestResult next_densest_distinct(const Graph& g, const std::vector<VertexSet>& prior,
                                    Execution exec = Execution::kParallel);

/// Exact k densest distinct subgraphs in O(2^k poly(n)).
SolutionSet fpt_topk(const Graph& g, std::int64_t k, Execution exec = Execution::kParallel);

}  // namespace kdense
