#include "kdense/eptas.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>

namespace kdense {

using boost::multiprecision::cpp_int;

void EptasConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (eps <= Rational(1)) throw std::invalid_argument("eps must be greater than 1");
}

const char* to_string(SizeClass c) {
  switch (c) {
    case SizeClass::kSmall:
      return "small";
    case SizeClass::kBig:
      return "big";
    case SizeClass::kHuge:
      return "huge";
  }
  return "?";
}

bool eq1_holds(std::int64_t n, std::int64_t k, const Rational& eps) {
  if (n <= 2 * k) return false;
  // (n-2k)^k * p >= n^k * (p - q) for eps = p/q.
  const cpp_int lhs = boost::multiprecision::pow(cpp_int(n - 2 * k), static_cast<unsigned>(k)) * eps.num();
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(k)) * (eps.num() - eps.den());
  return lhs >= rhs;
}

SizeClass classify(std::size_t size, std::int64_t n, std::int64_t k, std::int64_t i, const Rational& eps) {
  const auto s = static_cast<std::int64_t>(size);
  if (Rational(s) <= eps - Rational(1)) return SizeClass::kSmall;
  if (s <= n - k - i) return SizeClass::kBig;
  return SizeClass::kHuge;
}

std::vector<Candidate> small_step_candidates(const Graph& g, const std::vector<VertexSet>& prior,
                                             const EptasConfig& cfg, Execution exec, SupergraphRule rule) {
  if (prior.empty()) throw std::invalid_argument("small_step_candidates needs at least one prior subgraph");
  for (const auto& p : prior) {
    if (p.empty()) throw std::invalid_argument("prior subgraph is empty");
    check_subset(g, p);
    if (Rational(static_cast<std::int64_t>(p.size())) > cfg.eps - Rational(1)) {
      throw std::invalid_argument("prior subgraph " + p.to_string() + " is not small");
    }
  }

  std::size_t tuples = 1;
  for (const auto& p : prior) tuples *= p.size();

  std::vector<std::optional<Candidate>> type1(tuples);
  const auto count = static_cast<std::int64_t>(tuples);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::int64_t t = 0; t < count; ++t) {
    std::vector<char> allowed(static_cast<std::size_t>(g.n()), 1);
    auto rem = static_cast<std::size_t>(t);
    for (const auto& p : prior) {
      allowed[static_cast<std::size_t>(p.vertices()[rem % p.size()])] = 0;
      rem /= p.size();
    }
    if (std::find(allowed.begin(), allowed.end(), char{1}) == allowed.end()) continue;
    type1[static_cast<std::size_t>(t)] =
        Candidate{densest_containing(g, {}, allowed), CandidateKind::kRemoveTuple, static_cast<std::size_t>(t)};
  }

  std::vector<Candidate> out;
  for (auto& c : type1) {
    if (!c) continue;
    // Each such set misses a vertex of every prior set.
    for (const auto& p : prior) {
      if (p.is_subset_of(c->result.set)) throw std::logic_error("remove-tuple candidate contains a prior set");
    }
    out.push_back(std::move(*c));
  }
  for (std::size_t j = 0; j < prior.size(); ++j) {
    if (prior[j].size() == static_cast<std::size_t>(g.n())) continue;
    auto sup = densest_strict_supergraph(g, prior[j], exec).best;
    if (std::find(prior.begin(), prior.end(), sup.set) != prior.end()) {
      if (rule == SupergraphRule::kDropColliding) continue;
      auto next = densest_strict_supergraph_avoiding(g, prior[j], prior);
      if (!next) continue;
      sup = std::move(*next);
    }
    out.push_back({std::move(sup), CandidateKind::kStrictSupergraph, j});
  }
  return out;
}

std::vector<VertexSet> big_completion(const Graph& g, const VertexSet& vi, std::int64_t i, std::int64_t k) {
  check_subset(g, vi);
  std::vector<VertexSet> out;
  if (i >= k) return out;
  const auto need = static_cast<std::size_t>(k - i);
  for (Vertex v = 0; v < g.n() && out.size() < need; ++v) {
    if (vi.contains(v)) continue;
    std::vector<Vertex> s(vi.begin(), vi.end());
    s.push_back(v);
    out.emplace_back(std::move(s));
  }
  if (out.size() < need) {
    throw std::invalid_argument("big completion needs " + std::to_string(need) + " vertices outside V_i, only " +
                                std::to_string(out.size()) + " exist");
  }
  return out;
}

std::vector<VertexSet> huge_completion(const Graph& g, const VertexSet& vi, std::int64_t count) {
  check_subset(g, vi);
  if (count < 0 || static_cast<std::size_t>(count) >= vi.size()) {
    throw std::invalid_argument("huge completion needs count < |V_i|");
  }
  std::vector<VertexSet> out;
  VertexSet cur = vi;
  for (std::int64_t j = 0; j < count; ++j) {
    cur = set_difference(cur, VertexSet{min_degree_vertex(g, cur)});
    out.push_back(cur);
  }
  return out;
}

EptasReport eptas_topk(const Graph& g, const EptasConfig& cfg, const EptasOptions& opts) {
  cfg.validate();
  require_enough_subsets(g, cfg.k);
  EptasReport report;
  const std::int64_t n = g.n();

  if (opts.oracle_fallback && !eq1_holds(n, cfg.k, cfg.eps)) {
    if (n > opts.limits.distinct) {
      throw GuardError("n=" + std::to_string(n) + " is too small for the approximation bound at k=" +
                       std::to_string(cfg.k) + ", eps=" + cfg.eps.to_string() +
                       " and too large for exhaustive search");
    }
    report.solution = oracle_topk_distinct(g, cfg.k, opts.exec, opts.limits);
    report.used_oracle = true;
    return report;
  }

  std::vector<VertexSet> sets{densest_subgraph(g).set};
  while (static_cast<std::int64_t>(sets.size()) < cfg.k) {
    const auto i = static_cast<std::int64_t>(sets.size());
    const SizeClass cls = classify(sets.back().size(), n, cfg.k, i, cfg.eps);
    report.classes.push_back(cls);
    if (cls == SizeClass::kBig) {
      for (auto& s : big_completion(g, sets.back(), i, cfg.k)) sets.push_back(std::move(s));
      break;
    }
    if (cls == SizeClass::kHuge) {
      // Under eq1 the peeled sets are larger than every earlier (small) set.
      // Without it they can collide; keep peeling past the collisions.
      const auto chain = huge_completion(g, sets.back(), static_cast<std::int64_t>(sets.back().size()) - 1);
      for (const auto& s : chain) {
        if (static_cast<std::int64_t>(sets.size()) == cfg.k) break;
        if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
      }
      if (static_cast<std::int64_t>(sets.size()) < cfg.k) {
        throw std::runtime_error("peeling ran out of subgraphs distinct from the earlier ones");
      }
      break;
    }
    const auto cands = small_step_candidates(g, sets, cfg, opts.exec, opts.supergraph_rule);
    if (cands.empty()) throw std::runtime_error("no candidate subgraph distinct from the ones chosen so far");
    std::size_t arg = 0;
    for (std::size_t c = 1; c < cands.size(); ++c) {
      if (cands[c].result.density > cands[arg].result.density) arg = c;
    }
    sets.push_back(cands[arg].result.set);
  }
  while (report.classes.size() < sets.size()) {
    const auto i = static_cast<std::int64_t>(report.classes.size()) + 1;
    report.classes.push_back(classify(sets[static_cast<std::size_t>(i - 1)].size(), n, cfg.k, i, cfg.eps));
  }

  if (!check_feasible(ProblemKind::distinct(), sets)) {
    throw std::logic_error("approximation produced two equal subgraphs");
  }
  report.solution = make_solution(g, std::move(sets));
  return report;
}

}  // namespace kdense
