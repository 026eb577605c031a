#include "kdense/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>

#include "kdense/densest.hpp"

namespace kdense {

namespace {

using Mask = std::uint64_t;

// Lexicographic order of the sorted vertex lists encoded by two masks.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  if ((a >> d) & 1U) {
    // `a` has d next; `b` continues with something larger or stops.
    return (b >> d) != 0;
  }
  return (a >> d) == 0;
}

// Every subset density scaled by lcm(1..n) is an integer, which keeps the
// enumeration kernels in plain integer arithmetic.
std::int64_t lcm_upto(int n) {
  std::int64_t l = 1;
  for (int i = 2; i <= n; ++i) l = std::lcm(l, static_cast<std::int64_t>(i));
  return l;
}

struct Scored {
  std::int64_t value;
  Mask mask;
};

// Strict "better than" used for every oracle tie-break.
bool better(const Scored& a, const Scored& b) {
  if (a.value != b.value) return a.value > b.value;
  return lex_less(a.mask, b.mask);
}

struct WorseOnTop {
  bool operator()(const Scored& a, const Scored& b) const { return better(a, b); }
};

class SubsetScorer {
 public:
  explicit SubsetScorer(const Graph& g) : adj_(g.adjacency_bits()), lcm_(lcm_upto(g.n())) {}

  std::int64_t edges(Mask s) const {
    std::int64_t twice = 0;
    for (Mask r = s; r != 0; r &= r - 1) twice += std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(r))] & s);
    return twice / 2;
  }
  std::int64_t value(Mask s) const { return edges(s) * (lcm_ / std::popcount(s)); }

 private:
  std::vector<Mask> adj_;
  std::int64_t lcm_;
};

void guard(const Graph& g, int limit, const char* what) {
  if (g.n() > limit) {
    throw GuardError(std::string(what) + " enumerates subsets of at most " + std::to_string(limit) +
                     " vertices; this graph has " + std::to_string(g.n()) + " (see KDENSE_ORACLE_LIMIT)");
  }
}

std::vector<std::int64_t> value_table(const Graph& g) {
  const SubsetScorer scorer(g);
  const Mask full = (Mask{1} << g.n());
  std::vector<std::int64_t> val(full, 0);
  for (Mask s = 1; s < full; ++s) val[s] = scorer.value(s);
  return val;
}

std::vector<VertexSet> sorted_sets(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), lex_less);
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(VertexSet::from_bits(m));
  return out;
}

}  // namespace

ProblemKind ProblemKind::overlap(Rational alpha) {
  if (alpha < Rational(0) || alpha > Rational(1)) throw std::invalid_argument("alpha must lie in [0,1]");
  return ProblemKind(Kind::kOverlap, alpha);
}

bool check_feasible(const ProblemKind& kind, const std::vector<VertexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const auto& a = sets[i];
      const auto& b = sets[j];
      switch (kind.kind()) {
        case ProblemKind::Kind::kDistinct:
          if (a == b) return false;
          break;
        case ProblemKind::Kind::kDisjoint:
          if (!set_intersection(a, b).empty()) return false;
          break;
        case ProblemKind::Kind::kOverlap: {
          if (a == b) return false;
          const Rational common(static_cast<std::int64_t>(set_intersection(a, b).size()));
          if (common > kind.alpha() * Rational(static_cast<std::int64_t>(a.size()))) return false;
          if (common > kind.alpha() * Rational(static_cast<std::int64_t>(b.size()))) return false;
          break;
        }
      }
    }
  }
  return true;
}

OracleLimits OracleLimits::from_env() {
  OracleLimits l;
  if (const char* env = std::getenv("KDENSE_ORACLE_LIMIT")) {
    const int v = std::clamp(std::atoi(env), 1, 30);
    const int delta = v - l.distinct;
    l.distinct = v;
    l.disjoint = std::clamp(l.disjoint + delta, 1, 30);
    l.overlap = std::clamp(l.overlap + delta, 1, 30);
  }
  return l;
}

SolutionSet oracle_topk_distinct(const Graph& g, std::int64_t k, Execution exec, const OracleLimits& limits) {
  guard(g, limits.distinct, "oracle_topk_distinct");
  require_enough_subsets(g, k);
  const SubsetScorer scorer(g);
  const auto full = static_cast<std::int64_t>(Mask{1} << g.n());
  const auto keep = static_cast<std::size_t>(k);

  using Heap = std::priority_queue<Scored, std::vector<Scored>, WorseOnTop>;
  auto offer = [keep](Heap& heap, const Scored& s) {
    if (heap.size() < keep) {
      heap.push(s);
    } else if (better(s, heap.top())) {
      heap.pop();
      heap.push(s);
    }
  };

  std::vector<Scored> merged;
#pragma omp parallel if (exec == Execution::kParallel)
  {
    Heap local;
#pragma omp for schedule(static)
    for (std::int64_t s = 1; s < full; ++s) offer(local, {scorer.value(static_cast<Mask>(s)), static_cast<Mask>(s)});
#pragma omp critical
    {
      while (!local.empty()) {
        merged.push_back(local.top());
        local.pop();
      }
    }
  }
  std::sort(merged.begin(), merged.end(), better);
  merged.resize(keep);

  std::vector<VertexSet> sets;
  sets.reserve(keep);
  for (const auto& s : merged) sets.push_back(VertexSet::from_bits(s.mask));
  return make_solution(g, std::move(sets));
}

SolutionSet oracle_disjoint(const Graph& g, int k, Execution exec, const OracleLimits& limits) {
  guard(g, limits.disjoint, "oracle_disjoint");
  if (k < 1 || k > 3) throw GuardError("oracle_disjoint supports 1 <= k <= 3");
  if (g.n() < k) throw InfeasibleError("k disjoint non-empty subgraphs need n >= k");

  const Mask full = (Mask{1} << g.n()) - 1;
  const auto val = value_table(g);
  // best[s]: best single non-empty subset of s.
  std::vector<std::int64_t> best(full + 1, -1);
  std::vector<Mask> arg(full + 1, 0);
  for (Mask s = 1; s <= full; ++s) {
    best[s] = val[s];
    arg[s] = s;
    for (Mask r = s; r != 0; r &= r - 1) {
      const Mask sub = s & ~(r & -r);
      if (sub != 0 && (best[sub] > best[s] || (best[sub] == best[s] && lex_less(arg[sub], arg[s])))) {
        best[s] = best[sub];
        arg[s] = arg[sub];
      }
    }
  }

  if (k == 1) return make_solution(g, {VertexSet::from_bits(arg[full])});

  // Per first-set candidate: the best completion. Reduced afterwards in
  // increasing mask order so serial and parallel agree.
  struct Pick {
    std::int64_t value = -1;
    Mask second = 0;
    Mask third = 0;
  };
  std::vector<Pick> picks(full + 1);
  const auto last = static_cast<std::int64_t>(full);
#pragma omp parallel for schedule(dynamic, 64) if (exec == Execution::kParallel)
  for (std::int64_t si = 1; si <= last; ++si) {
    const auto s1 = static_cast<Mask>(si);
    const Mask rest = full & ~s1;
    if (rest == 0) continue;
    Pick p;
    if (k == 2) {
      p = {val[s1] + best[rest], arg[rest], 0};
    } else {
      for (Mask s2 = rest; s2 != 0; s2 = (s2 - 1) & rest) {
        const Mask rem = rest & ~s2;
        if (rem == 0) continue;
        const std::int64_t v = val[s1] + val[s2] + best[rem];
        if (v > p.value) p = {v, s2, arg[rem]};
      }
    }
    picks[s1] = p;
  }
  Mask s1 = 0;
  for (Mask s = 1; s <= full; ++s) {
    if (picks[s].value > (s1 ? picks[s1].value : -1)) s1 = s;
  }
  std::vector<Mask> masks{s1, picks[s1].second};
  if (k == 3) masks.push_back(picks[s1].third);
  return make_solution(g, sorted_sets(std::move(masks)));
}

SolutionSet oracle_overlap(const Graph& g, int k, const Rational& alpha, Execution exec, const OracleLimits& limits) {
  guard(g, limits.overlap, "oracle_overlap");
  if (k != 2) throw GuardError("oracle_overlap supports k = 2 only");
  const auto kind = ProblemKind::overlap(alpha);
  if (g.n() < 1) throw InfeasibleError("empty graph");

  const Mask full = (Mask{1} << g.n()) - 1;
  if (full < 2) throw InfeasibleError("two distinct non-empty subgraphs need n >= 2");
  const auto val = value_table(g);
  const std::int64_t an = alpha.num();
  const std::int64_t ad = alpha.den();

  struct Pick {
    std::int64_t value = -1;
    Mask other = 0;
  };
  std::vector<Pick> picks(full + 1);
  const auto last = static_cast<std::int64_t>(full);
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::kParallel)
  for (std::int64_t ai = 1; ai <= last; ++ai) {
    const auto a = static_cast<Mask>(ai);
    const std::int64_t size_a = std::popcount(a);
    Pick p;
    for (Mask b = a + 1; b <= full; ++b) {
      const std::int64_t common = std::popcount(a & b);
      if (common * ad > an * size_a || common * ad > an * std::popcount(b)) continue;
      const std::int64_t v = val[a] + val[b];
      if (v > p.value) p = {v, b};
    }
    picks[a] = p;
  }
  Mask a = 0;
  for (Mask s = 1; s <= full; ++s) {
    if (picks[s].value > (a ? picks[a].value : -1)) a = s;
  }
  if (a == 0 || picks[a].value < 0) throw InfeasibleError("no feasible overlapping pair exists");
  auto sol = make_solution(g, sorted_sets({a, picks[a].other}));
  if (!check_feasible(kind, sol.subgraphs)) throw std::logic_error("oracle_overlap produced an infeasible pair");
  return sol;
}

SolutionSet greedy_disjoint(const Graph& g, int k) {
  if (k < 1) throw InfeasibleError("k must be at least 1");
  if (g.n() < k) throw InfeasibleError("k disjoint non-empty subgraphs need n >= k");
  std::vector<char> remaining(static_cast<std::size_t>(g.n()), 1);
  auto left = static_cast<std::size_t>(g.n());
  std::vector<VertexSet> picks;
  for (int j = 0; j < k; ++j) {
    const auto owed = static_cast<std::size_t>(k - j - 1);
    VertexSet pick = densest_containing(g, {}, remaining).set;
    while (left - pick.size() < owed) {
      const Vertex drop = min_degree_vertex(g, pick);
      pick = set_difference(pick, VertexSet{drop});
    }
    for (Vertex v : pick) remaining[static_cast<std::size_t>(v)] = 0;
    left -= pick.size();
    picks.push_back(std::move(pick));
  }
  return make_solution(g, std::move(picks));
}

}  // namespace kdense
