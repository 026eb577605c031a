#include "kdense/reductions.hpp"

#include <array>
#include <stdexcept>

#include "kdense/oracle.hpp"

namespace kdense {

Density clique_partition_threshold(std::int64_t nv, std::int64_t k) {
  return Rational((k - 3) * (nv - 1), 2) + Rational(nv - 3, 2);
}

CliquePartitionInstance gen_from_clique_partition(const Graph& base, int k) {
  if (k < 3) throw std::invalid_argument("clique-partition instances need k >= 3");
  if (base.n() < 3) throw std::invalid_argument("clique-partition instances need a base graph with n >= 3");
  CliquePartitionInstance inst;
  inst.base = base;
  inst.k = k;
  inst.threshold = clique_partition_threshold(base.n(), k);
  Graph built = base;
  for (int c = 0; c < k - 3; ++c) {
    inst.added_cliques.push_back(set_difference(VertexSet::range(built.n() + base.n()), VertexSet::range(built.n())));
    built = disjoint_union(built, complete_graph(base.n()));
  }
  inst.built = std::move(built);
  return inst;
}

BisectionInstance gen_from_bisection(const Graph& base) {
  const Vertex nb = base.n();
  if (nb < 2 || nb % 2 != 0) throw std::invalid_argument("bisection instances need an even base graph with n >= 2");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < nb; ++a) {
    for (Vertex b = a + 1; b < nb; ++b) edges.emplace_back(a, b);
    for (Vertex b = 0; b < nb; ++b) edges.emplace_back(a, nb + b);
  }
  for (auto [u, v] : base.edges()) edges.emplace_back(nb + u, nb + v);
  BisectionInstance inst;
  inst.base = base;
  inst.built = build_graph(2 * nb, edges);
  inst.clique_ids = VertexSet::range(nb);
  inst.base_ids = set_difference(VertexSet::range(2 * nb), inst.clique_ids);
  return inst;
}

Density bisection_value(std::int64_t nb, std::int64_t mb, std::int64_t h) {
  if (nb < 2 || nb % 2 != 0) throw std::invalid_argument("bisection value needs an even nB >= 2");
  return Rational(2 * nb * nb - nb + mb - h) / Rational(3 * nb, 2);
}

bool density_merge_check(const Graph& g, const VertexSet& vp, const VertexSet& x) {
  if (vp.empty() || x.empty()) throw GraphError(GraphErrorKind::kEmptySet, "merge check needs non-empty sets");
  check_subset(g, vp);
  check_subset(g, x);
  if (!set_intersection(vp, x).empty()) {
    throw GraphError(GraphErrorKind::kBadArgument, "merge check needs disjoint sets");
  }
  const VertexSet merged = set_union(vp, x);
  const std::int64_t added = induced_edge_count(g, merged) - induced_edge_count(g, vp);
  const Density dx(added, static_cast<std::int64_t>(x.size()));
  const Density d = density_of(g, vp);
  if (dx < d) return false;
  if (density_of(g, merged) < d) throw std::logic_error("merging a set with d_x >= d lowered the density");
  return true;
}

namespace {

class PairState {
 public:
  PairState(const BisectionInstance& inst, const VertexSet& v1, const VertexSet& v2)
      : nb_(static_cast<Vertex>(inst.nb())) {
    for (int i = 0; i < 2; ++i) in_[i].assign(static_cast<std::size_t>(2 * nb_), 0);
    for (Vertex v : v1) in_[0][static_cast<std::size_t>(v)] = 1;
    for (Vertex v : v2) in_[1][static_cast<std::size_t>(v)] = 1;
  }

  bool has(int side, Vertex v) const { return in_[side][static_cast<std::size_t>(v)] != 0; }
  void add(int side, Vertex v) { in_[side][static_cast<std::size_t>(v)] = 1; }
  void remove(int side, Vertex v) { in_[side][static_cast<std::size_t>(v)] = 0; }

  bool holds_clique(int side) const { return missing_clique(side) < 0; }
  Vertex missing_clique(int side) const {
    for (Vertex v = 0; v < nb_; ++v) {
      if (!has(side, v)) return v;
    }
    return -1;
  }
  std::int64_t base_count(int side) const {
    std::int64_t c = 0;
    for (Vertex v = nb_; v < 2 * nb_; ++v) c += has(side, v);
    return c;
  }
  int smaller_side() const { return set(1).size() < set(0).size() ? 1 : 0; }

  VertexSet set(int side) const { return VertexSet::from_mask(in_[side]); }
  Vertex nb() const { return nb_; }

 private:
  Vertex nb_;
  std::array<std::vector<char>, 2> in_;
};

}  // namespace

Normalization normalize_overlap_solution(const BisectionInstance& inst, const VertexSet& v1, const VertexSet& v2) {
  const Graph& g = inst.built;
  if (v1.empty() || v2.empty()) throw std::invalid_argument("normalization needs two non-empty sets");
  check_subset(g, v1);
  check_subset(g, v2);
  if (!check_feasible(ProblemKind::overlap(BisectionInstance::alpha()), {v1, v2})) {
    throw std::invalid_argument("input pair " + v1.to_string() + ", " + v2.to_string() +
                                " is not a feasible 2/3-overlap solution");
  }

  Normalization out;
  PairState st(inst, v1, v2);
  const Vertex nb = st.nb();
  auto note = [&](std::string s) { out.trace.push_back(std::move(s)); };

  // Preliminary step: trade shared base vertices for missing clique vertices.
  while (true) {
    Vertex shared = -1;
    for (Vertex u = nb; u < 2 * nb && shared < 0; ++u) {
      if (st.has(0, u) && st.has(1, u)) shared = u;
    }
    int side = st.holds_clique(0) ? (st.holds_clique(1) ? -1 : 1) : 0;
    if (shared < 0 || side < 0) break;
    const Vertex c = st.missing_clique(side);
    st.remove(side, shared);
    st.add(side, c);
    note("preliminary: side " + std::to_string(side + 1) + " swaps " + std::to_string(shared) + " for " +
         std::to_string(c));
  }

  // Step 1 (and plain absorption once a side holds V_c): cover every base vertex.
  for (Vertex u = nb; u < 2 * nb; ++u) {
    if (st.has(0, u) || st.has(1, u)) continue;
    int side = st.holds_clique(0) ? (st.holds_clique(1) ? -1 : 1) : 0;
    if (side >= 0) {
      const Vertex c = st.missing_clique(side);
      st.add(side, u);
      st.add(side, c);
      note("step 1: side " + std::to_string(side + 1) + " takes " + std::to_string(u) + " and " + std::to_string(c));
    } else {
      side = st.smaller_side();
      st.add(side, u);
      note("absorb: side " + std::to_string(side + 1) + " takes " + std::to_string(u));
    }
  }

  // Step 2: balance the base halves.
  const std::int64_t b0 = st.base_count(0);
  const std::int64_t b1 = st.base_count(1);
  if (b0 != b1) {
    const int small = b0 < b1 ? 0 : 1;
    const int large = 1 - small;
    if (!st.holds_clique(large)) {
      for (Vertex c = 0; c < nb; ++c) st.add(large, c);
      out.step2_repaired = true;
      note("step 2: larger side " + std::to_string(large + 1) + " completed with V_c");
    }
    while (st.base_count(small) < st.base_count(large)) {
      Vertex u = nb;
      while (!st.has(large, u) || st.has(small, u)) ++u;
      st.remove(large, u);
      st.add(small, u);
      const Vertex c = st.missing_clique(small);
      if (c >= 0) st.add(small, c);
      note("step 2: move " + std::to_string(u) + " to side " + std::to_string(small + 1));
    }
  }
  for (int side = 0; side < 2; ++side) {
    for (Vertex c = 0; c < nb; ++c) st.add(side, c);
  }

  out.y1 = st.set(0);
  out.y2 = st.set(1);

  const Density before = density_of(g, v1) + density_of(g, v2);
  const Density d1 = density_of(g, out.y1);
  const Density d2 = density_of(g, out.y2);
  out.sides_non_decreasing = d1 >= density_of(g, v1) && d2 >= density_of(g, v2);

  const auto half = static_cast<std::size_t>(3 * nb / 2);
  if (set_intersection(out.y1, out.y2) != inst.clique_ids || out.y1.size() != half || out.y2.size() != half) {
    throw std::logic_error("normalization did not reach the V_c-overlap shape");
  }
  if (d1 >= Rational(nb) || d2 >= Rational(nb)) throw std::logic_error("normalized side has density >= nB");
  if (d1 + d2 < before) throw std::logic_error("normalization lowered the total density");
  return out;
}

std::int64_t bisection_cut(const Graph& base, const VertexSet& part1) {
  std::int64_t cut = 0;
  for (auto [u, v] : base.edges()) cut += part1.contains(u) != part1.contains(v);
  return cut;
}

BisectionCheck verify_bisection_equivalence(const BisectionInstance& inst, const VertexSet& part1,
                                            const VertexSet& part2, std::int64_t h) {
  check_subset(inst.base, part1);
  check_subset(inst.base, part2);
  if (part1.size() != part2.size()) throw std::invalid_argument("bisection parts must have equal size");
  if (!set_intersection(part1, part2).empty() ||
      set_union(part1, part2) != VertexSet::range(inst.base.n())) {
    throw std::invalid_argument("bisection parts must partition the base vertices");
  }
  auto lift = [&](const VertexSet& part) {
    std::vector<Vertex> v(inst.clique_ids.begin(), inst.clique_ids.end());
    for (Vertex b : part) v.push_back(b + inst.base.n());
    return VertexSet(std::move(v));
  };
  BisectionCheck c;
  c.total = density_of(inst.built, lift(part1)) + density_of(inst.built, lift(part2));
  c.expected = bisection_value(inst.nb(), inst.mb(), h);
  c.cut = bisection_cut(inst.base, part1);
  c.holds = c.total == c.expected;
  return c;
}

}  // namespace kdense
