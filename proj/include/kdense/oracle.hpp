#pragma once

#include "kdense/parallel.hpp"
#include "kdense/solution.hpp"

namespace kdense {

/// Distinct: vertex sets pairwise different. Disjoint: pairwise empty
/// intersections. Overlap(alpha): distinct and |Vi ∩ Vj| <= alpha * |Vi|
/// for every ordered pair.
class ProblemKind {
 public:
  enum class Kind { kDistinct, kDisjoint, kOverlap };

  static ProblemKind distinct() { return ProblemKind(Kind::kDistinct, Rational(1)); }
  static ProblemKind disjoint() { return ProblemKind(Kind::kDisjoint, Rational(0)); }
  static ProblemKind overlap(Rational alpha);

  Kind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }

 private:
  ProblemKind(Kind k, Rational a) : kind_(k), alpha_(a) {}
  Kind kind_;
  Rational alpha_;
};

bool check_feasible(const ProblemKind& kind, const std::vector<VertexSet>& sets);

/// Largest n each exhaustive routine accepts. KDENSE_ORACLE_LIMIT replaces
/// the distinct limit and shifts the other two by the same amount.
struct OracleLimits {
  int distinct = 24;
  int disjoint = 14;
  int overlap = 12;

  static OracleLimits from_env();
};

/// The k non-empty subsets of largest density, ties broken by canonical set
/// order; subgraphs are listed best first.
SolutionSet oracle_topk_distinct(const Graph& g, std::int64_t k, Execution exec = Execution::kParallel,
                                 const OracleLimits& limits = OracleLimits::from_env());

/// Exact best k pairwise disjoint subgraphs (k <= 3). Output sorted by
/// canonical set order.
SolutionSet oracle_disjoint(const Graph& g, int k, Execution exec = Execution::kParallel,
                            const OracleLimits& limits = OracleLimits::from_env());

/// Exact best alpha-overlapping pair (k = 2). Output sorted by canonical set
/// order.
SolutionSet oracle_overlap(const Graph& g, int k, const Rational& alpha, Execution exec = Execution::kParallel,
                           const OracleLimits& limits = OracleLimits::from_env());

/// Repeatedly takes a densest subgraph of what remains and deletes it. A pick
/// that would leave fewer vertices than picks still owed is shrunk by
/// min-degree peeling first. Feasible, not optimal.
SolutionSet greedy_disjoint(const Graph& g, int k);

}  // namespace kdense
