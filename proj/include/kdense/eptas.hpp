#pragma once

#include <vector>

#include "kdense/densest.hpp"
#include "kdense/oracle.hpp"
#include "kdense/solution.hpp"

namespace kdense {

/// k >= 1, eps > 1. Guarantees total >= (1 - 1/eps) * OPT.
struct EptasConfig {
  std::int64_t k = 1;
  Rational eps{2};

  void validate() const;
};

enum class SizeClass { kSmall, kBig, kHuge };

const char* to_string(SizeClass c);

/// ((n - 2k)/n)^k >= 1 - 1/eps in exact arithmetic; false when n <= 2k.
bool eq1_holds(std::int64_t n, std::int64_t k, const Rational& eps);

/// Small: size <= eps - 1. Big: otherwise size <= n - k - i. Huge: the rest.
/// `i` is the 1-based position of the subgraph in the solution.
SizeClass classify(std::size_t size, std::int64_t n, std::int64_t k, std::int64_t i, const Rational& eps);

/// How a strict-supergraph candidate that coincides with an earlier subgraph
/// is handled: replaced by the densest strict supergraph distinct from all
/// earlier subgraphs (default), or dropped outright.
enum class SupergraphRule { kNextDistinct, kDropColliding };

enum class CandidateKind { kRemoveTuple, kStrictSupergraph };

struct Candidate {
  DensestResult result;
  CandidateKind kind;
  /// Mixed-radix index of the removed-vertex tuple, or the index j of the
  /// prior set being extended.
  std::size_t source;
};

/// Candidates for the next subgraph while every prior set is small: the
/// densest subgraph of G minus one chosen vertex from each prior set (every
/// choice tuple), and the densest strict supergraph of each prior set.
/// No candidate equals a prior set.
std::vector<Candidate> small_step_candidates(const Graph& g, const std::vector<VertexSet>& prior,
                                             const EptasConfig& cfg, Execution exec = Execution::kParallel,
                                             SupergraphRule rule = SupergraphRule::kNextDistinct);

/// Vi ∪ {v} for the k - i smallest-id vertices v outside Vi.
std::vector<VertexSet> big_completion(const Graph& g, const VertexSet& vi, std::int64_t i, std::int64_t k);

/// Successive min-degree peels S1 ⊃ S2 ⊃ ... of Vi, `count` sets.
std::vector<VertexSet> huge_completion(const Graph& g, const VertexSet& vi, std::int64_t count);

struct EptasOptions {
  /// When eq1 fails the instance is solved by the distinct oracle (or
  /// rejected above the oracle guard). Tests disable this to exercise the
  /// approximation path on small graphs.
  bool oracle_fallback = true;
  SupergraphRule supergraph_rule = SupergraphRule::kNextDistinct;
  Execution exec = Execution::kParallel;
  OracleLimits limits = OracleLimits::from_env();
};

struct EptasReport {
  SolutionSet solution;
  bool used_oracle = false;
  /// Size class of each computed subgraph (empty when the oracle ran).
  std::vector<SizeClass> classes;
};

EptasReport eptas_topk(const Graph& g, const EptasConfig& cfg, const EptasOptions& opts = {});

}  // namespace kdense
