#pragma once

#include <cstdint>
#include <vector>

namespace kdense {

using Capacity = std::int64_t;

struct Arc {
  int from;
  int to;
  Capacity capacity;
};

/// Directed network with non-negative integer capacities. Callers model
/// "infinite" arcs with a sentinel larger than the sum of finite capacities.
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 1;
  std::vector<Arc> arcs;

  void add_arc(int from, int to, Capacity capacity) { arcs.push_back({from, to, capacity}); }
};

struct MinCut {
  Capacity flow = 0;
  /// Nodes reachable from the source in the final residual graph (the
  /// inclusion-minimal minimum cut), sorted.
  std::vector<int> source_side;
};

/// Dinic's blocking-flow algorithm. One instance owns its residual graph and
/// may be reused across networks; it is not thread-safe.
class MaxFlowSolver {
 public:
  MinCut solve(const FlowNetwork& net);

 private:
  struct ResidualArc {
    int to;
    int rev;
    Capacity cap;
  };

  bool build_levels(int s, int t);
  Capacity augment(int v, int t, Capacity limit);

  std::vector<std::vector<ResidualArc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

/// Validates the network (s != t, capacities >= 0, node ids in range, total
/// capacity representable) and returns the max-flow value with the minimal
/// source side. Throws std::invalid_argument / std::overflow_error.
MinCut max_flow_min_cut(const FlowNetwork& net);

/// Capacity of the cut (S, V \ S) for a 0/1 source-side mask.
Capacity cut_capacity(const FlowNetwork& net, const std::vector<char>& source_side);

}  // namespace kdense
