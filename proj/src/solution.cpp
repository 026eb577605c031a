#include "kdense/solution.hpp"

namespace kdense {

SolutionSet make_solution(const Graph& g, std::vector<VertexSet> sets) {
  SolutionSet s;
  s.densities.reserve(sets.size());
  for (const auto& set : sets) {
    s.densities.push_back(density_of(g, set));
    s.total += s.densities.back();
  }
  s.subgraphs = std::move(sets);
  return s;
}

bool enough_subsets(Vertex n, std::int64_t k) {
  if (k < 1) return false;
  if (n >= 63) return true;
  return ((std::int64_t{1} << n) - 1) >= k;
}

void require_enough_subsets(const Graph& g, std::int64_t k) {
  if (k < 1) throw InfeasibleError("k must be at least 1");
  if (!enough_subsets(g.n(), k)) {
    throw InfeasibleError("k=" + std::to_string(k) + " exceeds the " + std::to_string((1LL << g.n()) - 1) +
                          " non-empty vertex subsets of a graph with n=" + std::to_string(g.n()));
  }
}

}  // namespace kdense
