#pragma once
// Path method for lower bounds on spectral gaps.
//
// Fix a positive weight w on the edges and, for every ordered pair (x,y) of
// distinct vertices, a path gamma(x,y) from x to y.  The w-length of a path
// is |gamma|_w = sum over its edges of 1/w(e).  The congestion of an
// oriented edge e is
//
//   A_e = (1/m(o)) * (1/m(e)) * w(e) * sum_{gamma(x,y) through e} |gamma(x,y)|_w m(x) m(y)
//
// where the sum counts traversals of e in the path's own direction, and
// A(w) = max_e A_e over the 2|E| oriented edges.  Any choice of w and paths
// gives the lower bound 1/A(w) for the spectral gap against every target
// space, so the whole computation stays in exact rationals.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/rational.hpp"

namespace sgt {

// Positive weights aligned with WeightedGraph::edges().  This is the w of
// the bound, a free parameter; it has nothing to do with the graph's m.
struct EdgeWeightW {
  std::vector<Rational> w;
};

inline void validate_edge_weights(const WeightedGraph& g, const EdgeWeightW& ww) {
  if (ww.w.size() != g.edge_count())
    fail(Errc::DomainError, "edge weight vector has " + std::to_string(ww.w.size()) +
                                " entries, graph has " + std::to_string(g.edge_count()) +
                                " edges");
  for (std::size_t i = 0; i < ww.w.size(); ++i)
    if (ww.w[i] <= 0)
      fail(Errc::RejectNonpositiveWeight,
           "w is nonpositive on edge {" + std::to_string(g.edges()[i].u) + "," +
               std::to_string(g.edges()[i].v) + "}");
}

inline EdgeWeightW uniform_edge_weights(const WeightedGraph& g) {
  return EdgeWeightW{std::vector<Rational>(g.edge_count(), Rational(1))};
}

// w(e) = (d-1)^k on edges between levels k-1 and k of a tree ball.  Shifts
// congestion off the few central edges onto the many peripheral ones.
inline EdgeWeightW tree_exponential_weights(const WeightedGraph& g) {
  if (!g.tree_meta)
    fail(Errc::MissingLevelMetadata,
         "exponential tree weights need level metadata (generate the graph "
         "with the tree family, or keep its metadata comment in the file)");
  const auto& meta = *g.tree_meta;
  EdgeWeightW ww;
  ww.w.reserve(g.edge_count());
  Rational base(meta.degree - 1);
  for (const Edge& e : g.edges()) {
    std::uint32_t k = std::max(meta.level[e.u], meta.level[e.v]);
    ww.w.push_back(rational_pow(base, k));
  }
  return ww;
}

// One path for every ordered pair of distinct vertices, stored as explicit
// vertex sequences.  Builders guarantee each sequence starts at x, ends at
// y, walks along edges, and repeats no vertex.
class PathAssignment {
 public:
  const std::vector<VertexId>& path(VertexId from, VertexId to) const {
    if (from == to) fail(Errc::DomainError, "no path is stored for x == x");
    return paths_[std::size_t{from} * n_ + to];
  }

  std::size_t vertex_count() const { return n_; }

  // Re-checks the stored sequences against a graph; used by tests and when
  // pairing an assignment with a graph it was not built from.
  void validate(const WeightedGraph& g) const {
    if (n_ != g.vertex_count())
      fail(Errc::DomainError, "path assignment is for a different vertex count");
    std::vector<char> seen(n_, 0);
    for (VertexId x = 0; x < n_; ++x)
      for (VertexId y = 0; y < n_; ++y) {
        if (x == y) continue;
        const auto& p = paths_[std::size_t{x} * n_ + y];
        if (p.size() < 2 || p.front() != x || p.back() != y)
          fail(Errc::DomainError, "path for (" + std::to_string(x) + "," +
                                      std::to_string(y) + ") has wrong endpoints");
        for (VertexId v : p) {
          if (v >= n_ || seen[v])
            fail(Errc::DomainError, "path for (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") repeats a vertex");
          seen[v] = 1;
        }
        for (VertexId v : p) seen[v] = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
          if (!g.has_edge(p[i], p[i + 1]))
            fail(Errc::EdgeOutsideSupport,
                 "path for (" + std::to_string(x) + "," + std::to_string(y) +
                     ") uses a non-edge");
      }
  }

  static PathAssignment from_paths(std::size_t n, std::vector<std::vector<VertexId>> paths) {
    PathAssignment pa;
    pa.n_ = n;
    pa.paths_ = std::move(paths);
    return pa;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<VertexId>> paths_;  // index from * n + to
};

// Shortest paths from per-source BFS trees.  Ties are broken by always
// stepping to the smallest-index predecessor, so the result is canonical.
// With reverse_pairs, gamma(y,x) for x < y is gamma(x,y) reversed instead
// of being built from y's own tree; useful for hand-checking symmetric
// examples.
inline PathAssignment bfs_paths(const WeightedGraph& g, bool reverse_pairs = false) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> paths(n * n);
  std::vector<VertexId> pred(n);
  for (VertexId x = 0; x < n; ++x) {
    auto dist = bfs_hop_distances(g, x);
    for (VertexId v = 0; v < n; ++v) {
      if (v == x) continue;
      pred[v] = UINT32_MAX;
      for (const auto& [u, ei] : g.adjacency(v))
        if (dist[u] + 1 == dist[v]) {
          pred[v] = u;
          break;  // adjacency is sorted, first hit is the smallest index
        }
    }
    for (VertexId y = 0; y < n; ++y) {
      if (y == x) continue;
      if (reverse_pairs && y < x) continue;
      auto& p = paths[std::size_t{x} * n + y];
      p.clear();
      for (VertexId v = y; v != x; v = pred[v]) p.push_back(v);
      p.push_back(x);
      std::reverse(p.begin(), p.end());
      if (reverse_pairs) {
        auto& q = paths[std::size_t{y} * n + x];
        q.assign(p.rbegin(), p.rend());
      }
    }
  }
  return PathAssignment::from_paths(n, std::move(paths));
}

// The unique geodesics of a tree.
inline PathAssignment tree_geodesic_paths(const WeightedGraph& g) {
  if (!g.is_tree())
    fail(Errc::NotATree, "graph has " + std::to_string(g.edge_count()) +
                             " edges on " + std::to_string(g.vertex_count()) +
                             " vertices");
  std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  {
    auto dist = bfs_hop_distances(g, 0);
    for (VertexId v = 0; v < n; ++v) {
      depth[v] = dist[v];
      if (v == 0) continue;
      for (const auto& [u, ei] : g.adjacency(v))
        if (dist[u] + 1 == dist[v]) {
          parent[v] = u;
          break;
        }
    }
  }
  std::vector<std::vector<VertexId>> paths(n * n);
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<VertexId> up, down;
      VertexId a = x, b = y;
      while (depth[a] > depth[b]) {
        up.push_back(a);
        a = parent[a];
      }
      while (depth[b] > depth[a]) {
        down.push_back(b);
        b = parent[b];
      }
      while (a != b) {
        up.push_back(a);
        down.push_back(b);
        a = parent[a];
        b = parent[b];
      }
      up.push_back(a);
      up.insert(up.end(), down.rbegin(), down.rend());
      paths[std::size_t{x} * n + y] = std::move(up);
    }
  return PathAssignment::from_paths(n, std::move(paths));
}

// Bit-fixing paths on a Hamming cube: walk from x to y flipping the
// differing bits in increasing position order.  The graph must actually be
// a cube with vertex i adjacent to exactly the single-bit flips of i.
inline PathAssignment hamming_bitfix_paths(const WeightedGraph& g) {
  std::size_t n = g.vertex_count();
  if (n < 2 || (n & (n - 1)) != 0)
    fail(Errc::NotAHammingCube, "vertex count " + std::to_string(n) +
                                    " is not a power of two");
  std::uint32_t dim = 0;
  while ((std::size_t{1} << dim) < n) ++dim;
  for (VertexId x = 0; x < n; ++x) {
    if (g.degree(x) != dim)
      fail(Errc::NotAHammingCube, "vertex " + std::to_string(x) + " has degree " +
                                      std::to_string(g.degree(x)) + ", want " +
                                      std::to_string(dim));
    for (const auto& [y, ei] : g.adjacency(x)) {
      VertexId diff = x ^ y;
      if ((diff & (diff - 1)) != 0)
        fail(Errc::NotAHammingCube, "edge {" + std::to_string(x) + "," +
                                        std::to_string(y) + "} is not a bit flip");
    }
  }
  std::vector<std::vector<VertexId>> paths(n * n);
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      if (x == y) continue;
      auto& p = paths[std::size_t{x} * n + y];
      VertexId cur = x;
      p.push_back(cur);
      for (std::uint32_t i = 0; i < dim; ++i)
        if ((x ^ y) & (VertexId{1} << i)) {
          cur ^= VertexId{1} << i;
          p.push_back(cur);
        }
    }
  return PathAssignment::from_paths(n, std::move(paths));
}

// |gamma|_w of an explicit vertex sequence.
inline Rational gamma_length_w(const WeightedGraph& g, const EdgeWeightW& ww,
                               const std::vector<VertexId>& path) {
  if (path.size() < 2) fail(Errc::DomainError, "path needs at least two vertices");
  Rational len = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    std::size_t ei = g.edge_index(path[i], path[i + 1]);
    if (ei == kNoEdge)
      fail(Errc::EdgeOutsideSupport, "step " + std::to_string(path[i]) + " -> " +
                                         std::to_string(path[i + 1]) +
                                         " is not an edge");
    len += Rational(1) / ww.w[ei];
  }
  return len;
}

struct CongestionResult {
  Rational a_value;       // A(w) = max_e A_e
  OrientedEdge argmax;    // lexicographically smallest maximizer
  // A_e for every oriented edge; entry 2*ei is the (u -> v) orientation of
  // edge ei with u < v, entry 2*ei + 1 the reverse.
  std::vector<Rational> profile;

  Rational lower_bound() const { return Rational(1) / a_value; }
};

inline CongestionResult congestion_A(const WeightedGraph& g, const EdgeWeightW& ww,
                                     const PathAssignment& paths) {
  validate_edge_weights(g, ww);
  if (paths.vertex_count() != g.vertex_count())
    fail(Errc::DomainError, "path assignment is for a different vertex count");

  std::size_t n = g.vertex_count();
  std::vector<Rational> acc(2 * g.edge_count(), Rational(0));
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto& p = paths.path(x, y);
      Rational c = gamma_length_w(g, ww, p) * g.vertex_weight(x) * g.vertex_weight(y);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        std::size_t ei = g.edge_index(p[i], p[i + 1]);
        acc[g.oriented_index(ei, p[i])] += c;
      }
    }

  CongestionResult res;
  res.profile.resize(acc.size());
  bool first = true;
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    Rational scale = ww.w[ei] / (g.total_weight() * g.edge_weight(ei));
    for (int dir = 0; dir < 2; ++dir) {
      OrientedEdge oe = dir == 0 ? OrientedEdge{e.u, e.v} : OrientedEdge{e.v, e.u};
      Rational a = acc[2 * ei + dir] * scale;
      res.profile[2 * ei + dir] = a;
      if (first || a > res.a_value ||
          (a == res.a_value && oe < res.argmax)) {
        res.a_value = a;
        res.argmax = oe;
        first = false;
      }
    }
  }
  if (res.a_value <= 0)
    fail(Errc::DomainError, "congestion vanished; some pair has no path through any edge");
  return res;
}

// The actual bound: every spectral gap of (G, m) against every target is at
// least 1/A(w).
inline Rational path_method_lower_bound(const WeightedGraph& g, const EdgeWeightW& ww,
                                        const PathAssignment& paths) {
  return congestion_A(g, ww, paths).lower_bound();
}

}  // namespace sgt
