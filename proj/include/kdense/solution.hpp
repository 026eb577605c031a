#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

/// k subgraphs in computation order with their exact densities and sum.
struct SolutionSet {
  std::vector<VertexSet> subgraphs;
  std::vector<Density> densities;
  Density total;
};

SolutionSet make_solution(const Graph& g, std::vector<VertexSet> sets);

/// Raised when an exhaustive routine is asked to enumerate beyond its guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when k exceeds the number of non-empty vertex subsets.
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 2^n - 1 >= k, overflow-safe (n >= 63 is always feasible).
bool enough_subsets(Vertex n, std::int64_t k);
void require_enough_subsets(const Graph& g, std::int64_t k);

}  // namespace kdense
