#include "kdense/fpt.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdense {

namespace {

bool is_prior(const std::vector<VertexSet>& prior, const VertexSet& s) {
  return std::find(prior.begin(), prior.end(), s) != prior.end();
}

// First strictly densest entry, so reductions are order-deterministic.
std::optional<DensestResult> pick_best(std::vector<std::optional<DensestResult>>& results) {
  std::optional<DensestResult> best;
  for (auto& r : results) {
    if (r && (!best || r->density > best->density)) best = std::move(r);
  }
  return best;
}

struct CoveredTask {
  std::size_t family;  // index into the distinct unions
  Vertex v_in = -1;    // -1: the union itself
  Vertex v_out = -1;
};

}  // namespace

std::vector<CoverFamily> cover_families(const std::vector<VertexSet>& prior) {
  if (prior.size() >= 63) throw std::invalid_argument("too many prior subgraphs for cover enumeration");
  std::vector<CoverFamily> out;
  const std::uint64_t count = std::uint64_t{1} << prior.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    CoverFamily c;
    for (std::size_t i = 0; i < prior.size(); ++i) {
      if ((mask >> i) & 1U) {
        c.members.push_back(i);
        c.vertices = set_union(c.vertices, prior[i]);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<DensestResult> case_outside(const Graph& g, const std::vector<VertexSet>& prior, Execution exec) {
  VertexSet covered;
  for (const auto& p : prior) covered = set_union(covered, p);
  const VertexSet outside = set_difference(VertexSet::range(g.n()), covered);
  if (outside.empty()) return std::nullopt;

  std::vector<std::optional<DensestResult>> results(outside.size());
  const auto count = static_cast<std::int64_t>(outside.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::int64_t i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = densest_with_vertex(g, outside.vertices()[static_cast<std::size_t>(i)]);
  }
  return pick_best(results);
}

std::optional<DensestResult> case_covered(const Graph& g, const std::vector<VertexSet>& prior, Execution exec) {
  if (prior.empty()) return std::nullopt;
  // Different families often share a union; each union is searched once.
  std::vector<VertexSet> unions;
  for (auto& c : cover_families(prior)) {
    if (std::find(unions.begin(), unions.end(), c.vertices) == unions.end()) unions.push_back(std::move(c.vertices));
  }

  std::vector<CoveredTask> tasks;
  for (std::size_t f = 0; f < unions.size(); ++f) {
    tasks.push_back({f});
    for (Vertex vin : unions[f]) {
      for (Vertex vout : unions[f]) {
        if (vin != vout) tasks.push_back({f, vin, vout});
      }
    }
  }

  std::vector<std::optional<DensestResult>> results(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::int64_t t = 0; t < count; ++t) {
    const CoveredTask& task = tasks[static_cast<std::size_t>(t)];
    const VertexSet& cover = unions[task.family];
    std::optional<DensestResult> r;
    if (task.v_in < 0) {
      r = DensestResult{cover, density_of(g, cover)};
    } else {
      auto allowed = membership(g, cover);
      allowed[static_cast<std::size_t>(task.v_out)] = 0;
      r = densest_containing(g, VertexSet{task.v_in}, allowed);
    }
    if (!is_prior(prior, r->set)) results[static_cast<std::size_t>(t)] = std::move(r);
  }
  return pick_best(results);
}

DensestResult next_densest_distinct(const Graph& g, const std::vector<VertexSet>& prior, Execution exec) {
  if (prior.empty()) return densest_subgraph(g);
  auto outside = case_outside(g, prior, exec);
  auto covered = case_covered(g, prior, exec);
  if (outside && (!covered || outside->density >= covered->density)) return std::move(*outside);
  if (covered) return std::move(*covered);
  throw InfeasibleError("no subgraph distinct from the prior ones remains");
}

SolutionSet fpt_topk(const Graph& g, std::int64_t k, Execution exec) {
  require_enough_subsets(g, k);
  std::vector<VertexSet> sets;
  while (static_cast<std::int64_t>(sets.size()) < k) sets.push_back(next_densest_distinct(g, sets, exec).set);
  return make_solution(g, std::move(sets));
}

}  // namespace kdense
