#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kdense/rational.hpp"

namespace kdense {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrorKind { kOutOfRange, kSelfLoop, kDuplicateEdge, kEmptySet, kBadArgument };

/// Validation failure raised by graph construction and subgraph queries.
class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Canonical vertex set: strictly increasing ids, so set equality is list
/// equality and `<` is the lexicographic order used for tie-breaking.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> vertices);
  VertexSet(std::initializer_list<Vertex> vertices) : VertexSet(std::vector<Vertex>(vertices)) {}

  /// Vertices 0..n-1.
  static VertexSet range(Vertex n);
  /// Builds from a 0/1 membership mask.
  static VertexSet from_mask(std::span<const char> mask);
  /// Builds from the set bits of a machine word (graphs with n <= 64).
  static VertexSet from_bits(std::uint64_t bits);

  const std::vector<Vertex>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;
  Vertex front() const { return v_.front(); }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::string to_string() const;

 private:
  std::vector<Vertex> v_;
};

/// Non-negative integer weight per vertex; vertices never assigned weigh 0.
class VertexWeights {
 public:
  VertexWeights() = default;
  explicit VertexWeights(Vertex n) : w_(static_cast<std::size_t>(n), 0) {}
  explicit VertexWeights(std::vector<std::int64_t> w);

  std::int64_t operator[](Vertex v) const {
    return static_cast<std::size_t>(v) < w_.size() ? w_[static_cast<std::size_t>(v)] : 0;
  }
  void set(Vertex v, std::int64_t w);
  bool all_zero() const;
  std::size_t size() const { return w_.size(); }

 private:
  std::vector<std::int64_t> w_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  Vertex n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  /// Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Neighborhood bitmasks; only valid for n <= 64.
  std::vector<std::uint64_t> adjacency_bits() const;

  friend Graph build_graph(Vertex n, std::span<const Edge> edges);

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Validates and builds a simple graph. Throws GraphError with kind
/// kOutOfRange / kSelfLoop / kDuplicateEdge on bad input.
Graph build_graph(Vertex n, std::span<const Edge> edges);
inline Graph build_graph(Vertex n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Disjoint union; vertices of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complete_graph(Vertex n);

void check_vertex(const Graph& g, Vertex v);
void check_subset(const Graph& g, const VertexSet& s);

std::int64_t induced_edge_count(const Graph& g, const VertexSet& s);
/// (|E(S)| + w(S)) / |S|. Throws GraphError(kEmptySet) on empty S.
Density density_of(const Graph& g, const VertexSet& s, const VertexWeights& w = {});
/// Degree of v inside G[S].
std::int64_t degree_in(const Graph& g, const VertexSet& s, Vertex v);
/// Minimum-degree vertex of G[S], smallest id on ties.
Vertex min_degree_vertex(const Graph& g, const VertexSet& s);

/// 0/1 membership mask of size n.
std::vector<char> membership(const Graph& g, const VertexSet& s);

}  // namespace kdense
