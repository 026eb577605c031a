#include "kdense/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace kdense {

VertexSet::VertexSet(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.v_.resize(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) s.v_[static_cast<std::size_t>(i)] = i;
  return s;
}

VertexSet VertexSet::from_mask(std::span<const char> mask) {
  VertexSet s;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s.v_.push_back(static_cast<Vertex>(i));
  }
  return s;
}

VertexSet VertexSet::from_bits(std::uint64_t bits) {
  VertexSet s;
  s.v_.reserve(static_cast<std::size_t>(std::popcount(bits)));
  while (bits != 0) {
    s.v_.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(r.v_));
  return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(r.v_));
  return r;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(r.v_));
  return r;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << '}';
  return os.str();
}

VertexWeights::VertexWeights(std::vector<std::int64_t> w) : w_(std::move(w)) {
  for (auto x : w_) {
    if (x < 0) throw GraphError(GraphErrorKind::kBadArgument, "vertex weights must be non-negative");
  }
}

void VertexWeights::set(Vertex v, std::int64_t w) {
  if (v < 0) throw GraphError(GraphErrorKind::kOutOfRange, "negative vertex id in weights");
  if (w < 0) throw GraphError(GraphErrorKind::kBadArgument, "vertex weights must be non-negative");
  if (static_cast<std::size_t>(v) >= w_.size()) w_.resize(static_cast<std::size_t>(v) + 1, 0);
  w_[static_cast<std::size_t>(v)] = w;
}

bool VertexWeights::all_zero() const {
  return std::all_of(w_.begin(), w_.end(), [](std::int64_t x) { return x == 0; });
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::uint64_t> Graph::adjacency_bits() const {
  if (n_ > 64) throw GraphError(GraphErrorKind::kBadArgument, "adjacency bitmasks need n <= 64");
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    bits[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    bits[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return bits;
}

Graph build_graph(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError(GraphErrorKind::kBadArgument, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrorKind::kOutOfRange,
                       "edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside [0," +
                           std::to_string(n) + ")");
    }
    if (u == v) throw GraphError(GraphErrorKind::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError(GraphErrorKind::kDuplicateEdge, "duplicate edge {" + std::to_string(dup->first) + "," +
                                                          std::to_string(dup->second) + "}");
  }
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : g.edges_) {
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return build_graph(a.n() + b.n(), edges);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.n()) {
    throw GraphError(GraphErrorKind::kOutOfRange,
                     "vertex " + std::to_string(v) + " outside [0," + std::to_string(g.n()) + ")");
  }
}

void check_subset(const Graph& g, const VertexSet& s) {
  if (!s.empty()) {
    check_vertex(g, s.front());
    check_vertex(g, s.vertices().back());
  }
}

std::int64_t induced_edge_count(const Graph& g, const VertexSet& s) {
  check_subset(g, s);
  const auto in = membership(g, s);
  std::int64_t count = 0;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u && in[static_cast<std::size_t>(v)]) ++count;
    }
  }
  return count;
}

Density density_of(const Graph& g, const VertexSet& s, const VertexWeights& w) {
  if (s.empty()) throw GraphError(GraphErrorKind::kEmptySet, "density of an empty vertex set is undefined");
  std::int64_t total = induced_edge_count(g, s);
  for (Vertex v : s) total += w[v];
  return Density(total, static_cast<std::int64_t>(s.size()));
}

std::int64_t degree_in(const Graph& g, const VertexSet& s, Vertex v) {
  std::int64_t d = 0;
  for (Vertex u : g.neighbors(v)) {
    if (s.contains(u)) ++d;
  }
  return d;
}

Vertex min_degree_vertex(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw GraphError(GraphErrorKind::kEmptySet, "min-degree vertex of an empty set");
  check_subset(g, s);
  const auto in = membership(g, s);
  Vertex best = -1;
  std::int64_t best_deg = 0;
  for (Vertex v : s) {
    std::int64_t d = 0;
    for (Vertex u : g.neighbors(v)) d += in[static_cast<std::size_t>(u)];
    if (best < 0 || d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

}  // namespace kdense
