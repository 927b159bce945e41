#pragma once
// Weighted graph model.
//
// A graph here is finite, simple, connected, with at least two vertices,
// together with a symmetric weight m: V x V -> [0, oo) supported exactly on
// the edge set (m(x,y) > 0 iff {x,y} is an edge).  Derived quantities:
//
//   m(x)  = sum_y m(x,y)          vertex weight
//   m(o)  = sum_x m(x)            total weight, twice the sum over edges
//
// Weights are exact rationals; callers that want floating point use the
// *_d accessors, which are cached conversions of the exact values.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/prng.hpp"
#include "sgt/rational.hpp"

namespace sgt {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;  // normalized so that u < v
  VertexId v = 0;
};

inline bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
inline bool operator<(Edge a, Edge b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

struct OrientedEdge {
  VertexId from = 0;
  VertexId to = 0;
};

inline bool operator==(OrientedEdge a, OrientedEdge b) {
  return a.from == b.from && a.to == b.to;
}
inline bool operator<(OrientedEdge a, OrientedEdge b) {
  return a.from != b.from ? a.from < b.from : a.to < b.to;
}

struct WeightedEdgeInput {
  VertexId u = 0;
  VertexId v = 0;
  Rational weight = 1;
};

// Extra structure recorded by the tree-ball generator: the branching degree,
// the radius, and the distance of every vertex from the center.  The
// level-dependent edge weights need this.
struct TreeBallMeta {
  std::uint32_t degree = 0;
  std::uint32_t radius = 0;
  std::vector<std::uint32_t> level;
};

inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 20;
inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

class WeightedGraph {
 public:
  // Validates and normalizes an edge list.  Rejects loops, duplicate edges,
  // nonpositive weights, fewer than two vertices, and disconnected inputs.
  static WeightedGraph build(std::size_t n, std::vector<WeightedEdgeInput> input) {
    if (n < 2) fail(Errc::RejectTooSmall, "need at least 2 vertices, got " + std::to_string(n));
    WeightedGraph g;
    g.n_ = n;
    g.edges_.reserve(input.size());
    g.weights_.reserve(input.size());
    for (auto& e : input) {
      if (e.u >= n || e.v >= n)
        fail(Errc::InvalidVertex, "edge endpoint out of range: " +
                                      std::to_string(e.u) + " " + std::to_string(e.v));
      if (e.u == e.v)
        fail(Errc::RejectLoop, "loop at vertex " + std::to_string(e.u));
      if (e.weight <= 0)
        fail(Errc::RejectNonpositiveWeight,
             "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                 "} has weight " + sgt::to_string(e.weight));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::vector<std::size_t> order(input.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return Edge{input[a].u, input[a].v} < Edge{input[b].u, input[b].v};
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& e = input[order[i]];
      if (!g.edges_.empty() && g.edges_.back() == Edge{e.u, e.v})
        fail(Errc::RejectDuplicateEdge, "edge {" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + "} given twice");
      g.edges_.push_back(Edge{e.u, e.v});
      g.weights_.push_back(e.weight);
    }
    g.finalize();
    return g;
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Rational& edge_weight(std::size_t ei) const { return weights_[ei]; }
  double edge_weight_d(std::size_t ei) const { return weights_d_[ei]; }

  const Rational& vertex_weight(VertexId x) const { return vertex_weight_[x]; }
  double vertex_weight_d(VertexId x) const { return vertex_weight_d_[x]; }
  const Rational& total_weight() const { return total_weight_; }
  double total_weight_d() const { return total_weight_d_; }

  // Neighbors of x as (neighbor, edge index), sorted by neighbor id.
  const std::vector<std::pair<VertexId, std::size_t>>& adjacency(VertexId x) const {
    return adj_[x];
  }

  std::size_t degree(VertexId x) const { return adj_[x].size(); }

  // Index into edges() of {u,v}, or kNoEdge when not an edge.
  std::size_t edge_index(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_ || u == v) return kNoEdge;
    const auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const auto& p, VertexId x) { return p.first < x; });
    if (it == row.end() || it->first != v) return kNoEdge;
    return it->second;
  }

  bool has_edge(VertexId u, VertexId v) const { return edge_index(u, v) != kNoEdge; }

  // m(u,v): the weight when {u,v} is an edge, zero otherwise.
  Rational weight_between(VertexId u, VertexId v) const {
    std::size_t ei = edge_index(u, v);
    return ei == kNoEdge ? Rational(0) : weights_[ei];
  }

  // Both orientations of every edge, sorted lexicographically by (from, to).
  std::vector<OrientedEdge> oriented_edges() const {
    std::vector<OrientedEdge> out;
    out.reserve(2 * edges_.size());
    for (VertexId x = 0; x < n_; ++x)
      for (const auto& [y, ei] : adj_[x]) out.push_back(OrientedEdge{x, y});
    return out;
  }

  // Position of orientation (from -> to) of edge ei in a fixed 2|E| layout.
  std::size_t oriented_index(std::size_t ei, VertexId from) const {
    return 2 * ei + (from == edges_[ei].u ? 0 : 1);
  }

  bool is_tree() const { return edges_.size() + 1 == n_; }

  std::optional<TreeBallMeta> tree_meta;

 private:
  void finalize() {
    adj_.assign(n_, {});
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
      adj_[edges_[ei].u].push_back({edges_[ei].v, ei});
      adj_[edges_[ei].v].push_back({edges_[ei].u, ei});
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());

    vertex_weight_.assign(n_, Rational(0));
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
      vertex_weight_[edges_[ei].u] += weights_[ei];
      vertex_weight_[edges_[ei].v] += weights_[ei];
    }
    total_weight_ = 0;
    for (const auto& w : vertex_weight_) total_weight_ += w;

    weights_d_.resize(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i)
      weights_d_[i] = to_double(weights_[i]);
    vertex_weight_d_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      vertex_weight_d_[i] = to_double(vertex_weight_[i]);
    total_weight_d_ = to_double(total_weight_);

    check_connected();
  }

  void check_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t found = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& [y, ei] : adj_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++found;
          stack.push_back(y);
        }
      }
    }
    if (found != n_)
      fail(Errc::RejectDisconnected,
           "graph is disconnected (" + std::to_string(found) + " of " +
               std::to_string(n_) + " vertices reachable from 0)");
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Rational> weights_;
  std::vector<double> weights_d_;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj_;
  std::vector<Rational> vertex_weight_;
  std::vector<double> vertex_weight_d_;
  Rational total_weight_ = 0;
  double total_weight_d_ = 0;
};

// Hop distances from src; all entries finite since graphs are connected.
inline std::vector<std::uint32_t> bfs_hop_distances(const WeightedGraph& g, VertexId src) {
  std::vector<std::uint32_t> dist(g.vertex_count(), UINT32_MAX);
  std::queue<VertexId> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (const auto& [y, ei] : g.adjacency(x)) {
      if (dist[y] == UINT32_MAX) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

namespace detail {

inline void check_size_cap(std::size_t n, std::size_t cap, const std::string& what) {
  if (n > cap)
    fail(Errc::SizeCapExceeded, what + " would have " + std::to_string(n) +
                                    " vertices, cap is " + std::to_string(cap));
}

}  // namespace detail

// ==== GENERATORS ====
// All generator weights are 1; level-dependent weights for tree balls are a
// separate edge-weight assignment, not baked into the graph.

// Hamming cube {0,1}^dim: vertices are bitmasks, edges flip one bit.
inline WeightedGraph gen_hamming(std::uint32_t dim, std::size_t cap = kDefaultSizeCap) {
  if (dim < 1) fail(Errc::RejectTooSmall, "hamming cube needs dim >= 1");
  if (dim >= 63) fail(Errc::SizeCapExceeded, "hamming dim " + std::to_string(dim) + " is absurd");
  std::size_t n = std::size_t{1} << dim;
  detail::check_size_cap(n, cap, "hamming(" + std::to_string(dim) + ")");
  std::vector<WeightedEdgeInput> edges;
  edges.reserve(n / 2 * dim);
  for (std::size_t x = 0; x < n; ++x)
    for (std::uint32_t i = 0; i < dim; ++i)
      if (!(x & (std::size_t{1} << i)))
        edges.push_back({static_cast<VertexId>(x),
                         static_cast<VertexId>(x | (std::size_t{1} << i)), 1});
  return WeightedGraph::build(n, std::move(edges));
}

// Ball of radius r in the d-regular tree: center 0 with d children, every
// other internal vertex with d-1 children, leaves at distance r.
inline WeightedGraph gen_tree_ball(std::uint32_t d, std::uint32_t r,
                                   std::size_t cap = kDefaultSizeCap) {
  if (d < 2) fail(Errc::DomainError, "tree ball needs degree d >= 2");
  if (r < 1) fail(Errc::RejectTooSmall, "tree ball needs radius r >= 1");
  // |V| = 1 + d + d(d-1) + ... + d(d-1)^{r-1}
  const std::string what = "tree(" + std::to_string(d) + "," + std::to_string(r) + ")";
  std::size_t n = 1;
  std::size_t layer = d;
  for (std::uint32_t k = 1; k <= r; ++k) {
    if (layer > cap || n > cap - layer)
      fail(Errc::SizeCapExceeded,
           what + " exceeds the vertex cap " + std::to_string(cap));
    n += layer;
    if (k < r) {
      if (layer > cap / (d - 1) + 1)
        fail(Errc::SizeCapExceeded,
             what + " exceeds the vertex cap " + std::to_string(cap));
      layer *= (d - 1);
    }
  }
  detail::check_size_cap(n, cap, what);

  std::vector<WeightedEdgeInput> edges;
  edges.reserve(n - 1);
  std::vector<std::uint32_t> level(n, 0);
  VertexId next = 1;
  std::vector<VertexId> frontier{0};
  for (std::uint32_t k = 1; k <= r; ++k) {
    std::vector<VertexId> nextfrontier;
    for (VertexId parent : frontier) {
      std::uint32_t children = (parent == 0) ? d : d - 1;
      for (std::uint32_t c = 0; c < children; ++c) {
        edges.push_back({parent, next, 1});
        level[next] = k;
        nextfrontier.push_back(next);
        ++next;
      }
    }
    frontier = std::move(nextfrontier);
  }
  WeightedGraph g = WeightedGraph::build(n, std::move(edges));
  g.tree_meta = TreeBallMeta{d, r, std::move(level)};
  return g;
}

// Path with n edges (n+1 vertices 0..n in chain order).
inline WeightedGraph gen_path(std::uint32_t n, std::size_t cap = kDefaultSizeCap) {
  if (n < 1) fail(Errc::RejectTooSmall, "path needs at least 1 edge");
  detail::check_size_cap(std::size_t{n} + 1, cap, "path(" + std::to_string(n) + ")");
  std::vector<WeightedEdgeInput> edges;
  edges.reserve(n);
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, i + 1, 1});
  return WeightedGraph::build(std::size_t{n} + 1, std::move(edges));
}

inline WeightedGraph gen_cycle(std::uint32_t n, std::size_t cap = kDefaultSizeCap) {
  if (n < 3) fail(Errc::RejectTooSmall, "cycle needs n >= 3");
  detail::check_size_cap(n, cap, "cycle(" + std::to_string(n) + ")");
  std::vector<WeightedEdgeInput> edges;
  edges.reserve(n);
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({0, n - 1, 1});
  return WeightedGraph::build(n, std::move(edges));
}

inline WeightedGraph gen_complete(std::uint32_t n, std::size_t cap = kDefaultSizeCap) {
  if (n < 2) fail(Errc::RejectTooSmall, "complete graph needs n >= 2");
  detail::check_size_cap(n, cap, "complete(" + std::to_string(n) + ")");
  std::vector<WeightedEdgeInput> edges;
  edges.reserve(std::size_t{n} * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return WeightedGraph::build(n, std::move(edges));
}

// Random d-regular simple connected graph via the pairing model: n*d points
// are matched uniformly; a pairing is kept only if the resulting graph has
// no loops, no repeated edges, and is connected.  Each attempt consumes
// randomness from the same stream, so results replay exactly for a seed.
inline WeightedGraph gen_random_regular(std::uint32_t n, std::uint32_t d,
                                        std::uint64_t seed,
                                        std::size_t cap = kDefaultSizeCap,
                                        std::uint32_t retry_budget = 1000) {
  if (n < 2) fail(Errc::RejectTooSmall, "random regular graph needs n >= 2");
  if (d < 1 || d >= n) fail(Errc::DomainError, "need 1 <= d < n");
  if ((std::uint64_t{n} * d) % 2 != 0) fail(Errc::DomainError, "n*d must be even");
  detail::check_size_cap(n, cap, "random-regular(" + std::to_string(n) + ")");

  SplitMix64 rng(mix_seed(seed, 0x7265670ULL));
  std::vector<VertexId> points(std::size_t{n} * d);
  for (std::uint32_t attempt = 0; attempt < retry_budget; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i)
      points[i] = static_cast<VertexId>(i / d);
    // Fisher-Yates with our own draws.
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::size_t j = rng.next_below(i + 1);
      std::swap(points[i], points[j]);
    }
    std::vector<WeightedEdgeInput> edges;
    edges.reserve(points.size() / 2);
    bool simple = true;
    std::vector<std::vector<VertexId>> seen(n);
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      VertexId u = points[i], v = points[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      auto& row = seen[u];
      if (std::find(row.begin(), row.end(), v) != row.end()) {
        simple = false;
        break;
      }
      row.push_back(v);
      edges.push_back({u, v, 1});
    }
    if (!simple) continue;
    try {
      return WeightedGraph::build(n, std::move(edges));
    } catch (const Error& e) {
      if (e.code() == Errc::RejectDisconnected) continue;
      throw;
    }
  }
  fail(Errc::PairingFailed, "no simple connected pairing after " +
                                std::to_string(retry_budget) + " attempts (n=" +
                                std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

}  // namespace sgt
