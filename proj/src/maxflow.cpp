#include "kdense/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace kdense {

namespace {

void validate(const FlowNetwork& net) {
  if (net.node_count < 2) throw std::invalid_argument("flow network needs at least two nodes");
  if (net.source == net.sink) throw std::invalid_argument("flow network source equals sink");
  auto in_range = [&](int x) { return x >= 0 && x < net.node_count; };
  if (!in_range(net.source) || !in_range(net.sink)) throw std::invalid_argument("terminal outside network");
  Capacity total = 0;
  for (const Arc& a : net.arcs) {
    if (!in_range(a.from) || !in_range(a.to)) throw std::invalid_argument("arc endpoint outside network");
    if (a.capacity < 0) throw std::invalid_argument("negative arc capacity");
    if (__builtin_add_overflow(total, a.capacity, &total)) {
      throw std::overflow_error("total network capacity exceeds 64-bit range");
    }
  }
}

}  // namespace

bool MaxFlowSolver::build_levels(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[static_cast<std::size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& e : adj_[static_cast<std::size_t>(v)]) {
      if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
        level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(v)] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(t)] >= 0;
}

// Recursion depth is bounded by the level of the sink.
Capacity MaxFlowSolver::augment(int v, int t, Capacity limit) {
  if (v == t) return limit;
  auto& edges = adj_[static_cast<std::size_t>(v)];
  for (auto& i = next_[static_cast<std::size_t>(v)]; i < edges.size(); ++i) {
    ResidualArc& e = edges[i];
    if (e.cap <= 0 || level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(v)] + 1) continue;
    const Capacity pushed = augment(e.to, t, std::min(limit, e.cap));
    if (pushed > 0) {
      e.cap -= pushed;
      adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

MinCut MaxFlowSolver::solve(const FlowNetwork& net) {
  const auto n = static_cast<std::size_t>(net.node_count);
  adj_.assign(n, {});
  level_.assign(n, -1);
  next_.assign(n, 0);
  for (const Arc& a : net.arcs) {
    if (a.from == a.to) continue;
    auto& from = adj_[static_cast<std::size_t>(a.from)];
    auto& to = adj_[static_cast<std::size_t>(a.to)];
    from.push_back({a.to, static_cast<int>(to.size()), a.capacity});
    to.push_back({a.from, static_cast<int>(from.size()) - 1, 0});
  }

  MinCut result;
  while (build_levels(net.source, net.sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (Capacity f = augment(net.source, net.sink, std::numeric_limits<Capacity>::max())) {
      result.flow += f;
    }
  }
  // After the last failed BFS, level_ >= 0 marks exactly the residual-reachable set.
  for (std::size_t v = 0; v < n; ++v) {
    if (level_[v] >= 0) result.source_side.push_back(static_cast<int>(v));
  }
  return result;
}

MinCut max_flow_min_cut(const FlowNetwork& net) {
  validate(net);
  MaxFlowSolver solver;
  return solver.solve(net);
}

Capacity cut_capacity(const FlowNetwork& net, const std::vector<char>& source_side) {
  Capacity total = 0;
  for (const Arc& a : net.arcs) {
    if (source_side[static_cast<std::size_t>(a.from)] && !source_side[static_cast<std::size_t>(a.to)]) {
      total += a.capacity;
    }
  }
  return total;
}

}  // namespace kdense
