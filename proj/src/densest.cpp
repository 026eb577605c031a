#include "kdense/densest.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "kdense/maxflow.hpp"

namespace kdense {

namespace {

Capacity checked_mul(Capacity a, Capacity b) {
  Capacity r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("density test capacity overflow");
  return r;
}

Capacity checked_add(Capacity a, Capacity b) {
  Capacity r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("density test capacity overflow");
  return r;
}

// Goldberg-style search over the closure network. For a guess g = p/q the
// surplus of S is q*|E(S)| + sum_{v in S} (q*w(v) - p); the densest set is
// found by Dinkelbach iteration: test g = density(S_best) and replace S_best
// while some set has positive surplus. Densities strictly increase, so the
// loop ends after finitely many cuts.
//
// Network: one node per optional vertex (profit q*w(v) - p plus q per edge
// into the forced set), one node per edge between optional vertices (profit
// q) with arcs to both endpoints. Forced vertices never appear as nodes;
// their contribution is a constant.
class DensityTester {
 public:
  DensityTester(const Graph& g, const VertexSet& forced, std::span<const char> allowed, const VertexWeights& w)
      : g_(g), w_(w) {
    const auto n = static_cast<std::size_t>(g.n());
    if (!allowed.empty() && allowed.size() != n) {
      throw GraphError(GraphErrorKind::kBadArgument, "allowed mask size differs from vertex count");
    }
    check_subset(g, forced);
    in_forced_ = membership(g, forced);
    forced_ = forced;
    local_.assign(n, -1);
    for (Vertex v = 0; v < g.n(); ++v) {
      const bool ok = allowed.empty() || allowed[static_cast<std::size_t>(v)];
      if (!ok) {
        if (in_forced_[static_cast<std::size_t>(v)]) {
          throw GraphError(GraphErrorKind::kBadArgument, "forced vertex " + std::to_string(v) + " is not allowed");
        }
        continue;
      }
      alive_.push_back(v);
      if (!in_forced_[static_cast<std::size_t>(v)]) {
        local_[static_cast<std::size_t>(v)] = static_cast<int>(optional_.size());
        optional_.push_back(v);
      }
    }
    if (alive_.empty()) throw GraphError(GraphErrorKind::kEmptySet, "densest subgraph of an empty graph");
    forced_to_.assign(optional_.size(), 0);
    for (auto [u, v] : g.edges()) {
      const int lu = local_[static_cast<std::size_t>(u)];
      const int lv = local_[static_cast<std::size_t>(v)];
      const bool fu = in_forced_[static_cast<std::size_t>(u)];
      const bool fv = in_forced_[static_cast<std::size_t>(v)];
      if (fu && fv) {
        ++forced_edges_;
      } else if (lu >= 0 && lv >= 0) {
        inner_edges_.emplace_back(lu, lv);
      } else if (fu && lv >= 0) {
        ++forced_to_[static_cast<std::size_t>(lv)];
      } else if (fv && lu >= 0) {
        ++forced_to_[static_cast<std::size_t>(lu)];
      }
    }
  }

  DensestResult run() {
    VertexSet best(alive_);
    Density d = density_of(g_, best, w_);
    while (true) {
      auto improved = improve(d.num(), d.den());
      if (!improved) break;
      best = std::move(*improved);
      d = density_of(g_, best, w_);
    }
    return {std::move(best), d};
  }

 private:
  // Returns a set with strictly positive surplus at guess p/q, if any.
  std::optional<VertexSet> improve(std::int64_t p, std::int64_t q) {
    const int opt = static_cast<int>(optional_.size());
    FlowNetwork net;
    net.source = 0;
    net.sink = 1;
    net.node_count = 2 + opt + static_cast<int>(inner_edges_.size());

    Capacity constant = checked_mul(q, static_cast<Capacity>(forced_edges_));
    for (Vertex v : forced_) constant = checked_add(constant, checked_mul(q, w_[v]) - p);

    Capacity positive = 0;
    for (int i = 0; i < opt; ++i) {
      const Vertex v = optional_[static_cast<std::size_t>(i)];
      const Capacity gain = checked_add(checked_mul(q, w_[v]), checked_mul(q, forced_to_[static_cast<std::size_t>(i)]));
      const Capacity profit = gain - p;
      if (profit > 0) {
        net.add_arc(0, 2 + i, profit);
        positive = checked_add(positive, profit);
      } else if (profit < 0) {
        net.add_arc(2 + i, 1, -profit);
      }
    }
    for (std::size_t e = 0; e < inner_edges_.size(); ++e) {
      const int node = 2 + opt + static_cast<int>(e);
      net.add_arc(0, node, q);
      positive = checked_add(positive, q);
      // Capacity q suffices: cutting either arc costs exactly the edge's profit.
      net.add_arc(node, 2 + inner_edges_[e].first, q);
      net.add_arc(node, 2 + inner_edges_[e].second, q);
    }

    MinCut cut;
    if (opt > 0) cut = solver_.solve(net);
    const Capacity surplus = positive - cut.flow + constant;
    if (surplus <= 0) return std::nullopt;

    std::vector<Vertex> chosen(forced_.begin(), forced_.end());
    for (int node : cut.source_side) {
      if (node >= 2 && node < 2 + opt) chosen.push_back(optional_[static_cast<std::size_t>(node - 2)]);
    }
    return VertexSet(std::move(chosen));
  }

  const Graph& g_;
  const VertexWeights& w_;
  VertexSet forced_;
  std::vector<char> in_forced_;
  std::vector<int> local_;
  std::vector<Vertex> alive_;
  std::vector<Vertex> optional_;
  std::vector<std::int64_t> forced_to_;
  std::vector<std::pair<int, int>> inner_edges_;
  std::int64_t forced_edges_ = 0;
  MaxFlowSolver solver_;
};

}  // namespace

DensestResult densest_subgraph(const Graph& g, const VertexWeights& w) { return densest_containing(g, {}, {}, w); }

DensestResult densest_containing(const Graph& g, const VertexSet& forced, std::span<const char> allowed,
                                 const VertexWeights& w) {
  DensityTester tester(g, forced, allowed, w);
  return tester.run();
}

DensestResult densest_with_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return densest_containing(g, VertexSet{v});
}

SupergraphResult densest_strict_supergraph(const Graph& g, const VertexSet& v0, Execution exec) {
  if (v0.empty()) throw GraphError(GraphErrorKind::kEmptySet, "strict supergraph of an empty set");
  check_subset(g, v0);
  if (v0.size() == static_cast<std::size_t>(g.n())) {
    throw GraphError(GraphErrorKind::kBadArgument, "V0 is the whole vertex set; no strict supergraph exists");
  }

  SupergraphResult result;
  const auto in_v0 = membership(g, v0);
  std::vector<char> outside(in_v0.size());
  VertexWeights attach(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    outside[static_cast<std::size_t>(v)] = !in_v0[static_cast<std::size_t>(v)];
    if (!outside[static_cast<std::size_t>(v)]) continue;
    std::int64_t c = 0;
    for (Vertex u : g.neighbors(v)) c += in_v0[static_cast<std::size_t>(u)];
    attach.set(v, c);
  }

  // Complement-weighting construction with its density identity:
  // density(H) = (m0 + m1) / (n0 + n1).
  const DensestResult h1 = densest_containing(g, {}, outside, attach);
  const VertexSet h = set_union(v0, h1.set);
  const Density dh = density_of(g, h, {});
  const std::int64_t m0 = induced_edge_count(g, v0);
  const std::int64_t m1 = h1.density.num() * static_cast<std::int64_t>(h1.set.size()) / h1.density.den();
  if (dh != Density(m0 + m1, static_cast<std::int64_t>(v0.size() + h1.set.size()))) {
    throw std::logic_error("supergraph density identity violated");
  }
  result.weighted_construction = {h, dh};
  const Density d0 = density_of(g, v0, {});
  result.hypothesis_held = dh <= d0;

  std::vector<Vertex> extra;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (outside[static_cast<std::size_t>(v)]) extra.push_back(v);
  }
  std::vector<DensestResult> per_vertex(extra.size());
  const auto count = static_cast<std::int64_t>(extra.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::int64_t i = 0; i < count; ++i) {
    std::vector<Vertex> f(v0.begin(), v0.end());
    f.push_back(extra[static_cast<std::size_t>(i)]);
    per_vertex[static_cast<std::size_t>(i)] = densest_containing(g, VertexSet(std::move(f)));
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < per_vertex.size(); ++i) {
    if (per_vertex[i].density > per_vertex[arg].density) arg = i;
  }
  const DensestResult& exact = per_vertex[arg];
  result.construction_optimal = dh >= exact.density;
  result.best = result.construction_optimal ? result.weighted_construction : exact;
  return result;
}

namespace {

struct Region {
  VertexSet forced;
  std::vector<char> allowed;
  DensestResult best;
};

}  // namespace

std::optional<DensestResult> densest_strict_supergraph_avoiding(const Graph& g, const VertexSet& v0,
                                                                const std::vector<VertexSet>& avoid) {
  if (v0.empty()) throw GraphError(GraphErrorKind::kEmptySet, "strict supergraph of an empty set");
  check_subset(g, v0);

  // Regions partition their parent; each holds its own optimum, and the
  // queue always expands the region with the largest one.
  std::vector<Region> open;
  auto push = [&](VertexSet forced, std::vector<char> allowed) {
    DensestResult best = densest_containing(g, forced, allowed);
    open.push_back({std::move(forced), std::move(allowed), std::move(best)});
  };

  // Strict supersets of V0 = disjoint union over outside vertices x_j of
  // "contains V0 ∪ {x_j}, avoids x_1..x_{j-1}".
  std::vector<char> allowed(static_cast<std::size_t>(g.n()), 1);
  for (Vertex x = 0; x < g.n(); ++x) {
    if (v0.contains(x)) continue;
    push(set_union(v0, VertexSet{x}), allowed);
    allowed[static_cast<std::size_t>(x)] = 0;
  }

  while (!open.empty()) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < open.size(); ++i) {
      if (open[i].best.density > open[arg].best.density) arg = i;
    }
    Region r = std::move(open[arg]);
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(arg));
    if (std::find(avoid.begin(), avoid.end(), r.best.set) == avoid.end()) return std::move(r.best);

    // Region minus {D}: sets missing some free vertex of D, or containing D
    // plus some further allowed vertex.
    const VertexSet& d = r.best.set;
    VertexSet forced = r.forced;
    for (Vertex u : set_difference(d, r.forced)) {
      auto a = r.allowed;
      a[static_cast<std::size_t>(u)] = 0;
      push(forced, std::move(a));
      forced = set_union(forced, VertexSet{u});
    }
    auto a = r.allowed;
    for (Vertex x = 0; x < g.n(); ++x) {
      if (!a[static_cast<std::size_t>(x)] || d.contains(x)) continue;
      push(set_union(d, VertexSet{x}), a);
      a[static_cast<std::size_t>(x)] = 0;
    }
  }
  return std::nullopt;
}

DensestResult peel_half_approx(const Graph& g) {
  if (g.n() == 0) throw GraphError(GraphErrorKind::kEmptySet, "peeling an empty graph");
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::int64_t> deg(n);
  std::set<std::pair<std::int64_t, Vertex>> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(g.degree(v));
    queue.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  std::int64_t edges = static_cast<std::int64_t>(g.m());
  auto alive = static_cast<std::int64_t>(n);
  Density best_density(edges, alive);
  std::size_t best_prefix = 0;  // number of removed vertices at the best point

  while (alive > 1) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    edges -= d;
    --alive;
    for (Vertex u : g.neighbors(v)) {
      const auto ui = static_cast<std::size_t>(u);
      if (removed[ui]) continue;
      queue.erase({deg[ui], u});
      --deg[ui];
      queue.emplace(deg[ui], u);
    }
    const Density cur(edges, alive);
    if (cur >= best_density) {
      best_density = cur;
      best_prefix = order.size();
    }
  }

  std::vector<char> keep(n, 1);
  for (std::size_t i = 0; i < best_prefix; ++i) keep[static_cast<std::size_t>(order[i])] = 0;
  return {VertexSet::from_mask(keep), best_density};
}

}  // namespace kdense
