#pragma once
// Finite metric target spaces and maps into them.
//
// A target is a k x k distance matrix (k >= 2): zero diagonal, symmetric,
// positive off the diagonal, triangle inequality.  A space is either exact
// (entries are rationals, all checks strict) or floating point (triangle
// inequality checked with a small tolerance, since the entries themselves
// were rounded by whoever produced them).
//
// Maps from a vertex set into a target are plain index assignments.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/rational.hpp"

namespace sgt {

inline constexpr double kZeroTol = 1e-9;

class FiniteMetricSpace {
 public:
  static FiniteMetricSpace from_exact(std::size_t k, std::vector<Rational> matrix) {
    FiniteMetricSpace m;
    m.k_ = k;
    m.exact_ = std::move(matrix);
    m.validate_shape();
    m.dist_.resize(m.exact_->size());
    for (std::size_t i = 0; i < m.exact_->size(); ++i)
      m.dist_[i] = to_double((*m.exact_)[i]);
    m.validate_exact();
    return m;
  }

  static FiniteMetricSpace from_double(std::size_t k, std::vector<double> matrix) {
    FiniteMetricSpace m;
    m.k_ = k;
    m.dist_ = std::move(matrix);
    m.validate_shape();
    m.validate_double();
    return m;
  }

  std::size_t size() const { return k_; }
  bool exact() const { return exact_.has_value(); }

  double dist(std::size_t i, std::size_t j) const { return dist_[i * k_ + j]; }

  const Rational& dist_exact(std::size_t i, std::size_t j) const {
    return (*exact_)[i * k_ + j];
  }

  // Same space with all distances multiplied by c > 0.
  FiniteMetricSpace scaled(const Rational& c) const {
    if (c <= 0) fail(Errc::DomainError, "scale factor must be positive");
    if (exact()) {
      std::vector<Rational> m = *exact_;
      for (auto& x : m) x *= c;
      return from_exact(k_, std::move(m));
    }
    std::vector<double> m = dist_;
    double cd = to_double(c);
    for (auto& x : m) x *= cd;
    return from_double(k_, std::move(m));
  }

 private:
  void validate_shape() const {
    if (k_ < 2) fail(Errc::RejectTooSmall, "metric space needs k >= 2 points");
    if (dist_.size() != k_ * k_ && (!exact_ || exact_->size() != k_ * k_))
      fail(Errc::ParseError, "distance matrix is not k x k");
  }

  void validate_exact() const {
    const auto& m = *exact_;
    for (std::size_t i = 0; i < k_; ++i) {
      if (m[i * k_ + i] != 0)
        fail(Errc::NonzeroDiagonal, "d(" + std::to_string(i) + "," + std::to_string(i) +
                                        ") = " + sgt::to_string(m[i * k_ + i]));
      for (std::size_t j = i + 1; j < k_; ++j) {
        if (m[i * k_ + j] != m[j * k_ + i])
          fail(Errc::AsymmetricMatrix,
               "d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" +
                   std::to_string(j) + "," + std::to_string(i) + ")");
        if (m[i * k_ + j] <= 0)
          fail(Errc::NonpositiveOffDiagonal,
               "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                   sgt::to_string(m[i * k_ + j]));
      }
    }
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        for (std::size_t l = 0; l < k_; ++l)
          if (m[i * k_ + j] > m[i * k_ + l] + m[l * k_ + j])
            fail(Errc::TriangleViolation,
                 "d(" + std::to_string(i) + "," + std::to_string(j) + ") > d(" +
                     std::to_string(i) + "," + std::to_string(l) + ") + d(" +
                     std::to_string(l) + "," + std::to_string(j) + ")");
  }

  void validate_double() const {
    for (std::size_t i = 0; i < k_; ++i) {
      if (!std::isfinite(dist_[i * k_ + i]) || dist_[i * k_ + i] != 0.0)
        fail(Errc::NonzeroDiagonal, "d(" + std::to_string(i) + "," + std::to_string(i) +
                                        ") = " + std::to_string(dist_[i * k_ + i]));
      for (std::size_t j = i + 1; j < k_; ++j) {
        double a = dist_[i * k_ + j], b = dist_[j * k_ + i];
        if (!std::isfinite(a) || !std::isfinite(b))
          fail(Errc::ParseError, "non-finite distance entry");
        if (std::fabs(a - b) > kZeroTol)
          fail(Errc::AsymmetricMatrix,
               "d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" +
                   std::to_string(j) + "," + std::to_string(i) + ")");
        if (a <= 0)
          fail(Errc::NonpositiveOffDiagonal,
               "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                   std::to_string(a));
      }
    }
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        for (std::size_t l = 0; l < k_; ++l)
          if (dist_[i * k_ + j] > dist_[i * k_ + l] + dist_[l * k_ + j] + kZeroTol)
            fail(Errc::TriangleViolation,
                 "d(" + std::to_string(i) + "," + std::to_string(j) + ") > d(" +
                     std::to_string(i) + "," + std::to_string(l) + ") + d(" +
                     std::to_string(l) + "," + std::to_string(j) + ")");
  }

  std::size_t k_ = 0;
  std::vector<double> dist_;
  std::optional<std::vector<Rational>> exact_;
};

// Assignment of a point index to every vertex.
struct PointMap {
  std::vector<std::uint32_t> to;

  std::size_t size() const { return to.size(); }
  std::uint32_t operator[](std::size_t i) const { return to[i]; }

  bool is_constant() const {
    for (std::size_t i = 1; i < to.size(); ++i)
      if (to[i] != to[0]) return false;
    return true;
  }
};

inline void validate_point_map(const PointMap& f, std::size_t n, std::size_t k) {
  if (f.size() != n)
    fail(Errc::DomainError, "map assigns " + std::to_string(f.size()) +
                                " vertices, graph has " + std::to_string(n));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.to[i] >= k)
      fail(Errc::DomainError, "map sends vertex " + std::to_string(i) +
                                  " to point " + std::to_string(f.to[i]) +
                                  ", target has " + std::to_string(k));
}

// Two points at distance delta.
inline FiniteMetricSpace two_point_space(const Rational& delta) {
  if (delta <= 0)
    fail(Errc::NonpositiveDelta, "two-point distance must be positive, got " +
                                     sgt::to_string(delta));
  return FiniteMetricSpace::from_exact(2, {Rational(0), delta, delta, Rational(0)});
}

// Distinct reals on the line with the induced |x - y| metric, exact.
inline FiniteMetricSpace real_points_space(const std::vector<Rational>& values) {
  std::size_t k = values.size();
  if (k < 2) fail(Errc::RejectTooSmall, "need at least 2 line points");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (values[i] == values[j])
        fail(Errc::DuplicateValue, "line points " + std::to_string(i) + " and " +
                                       std::to_string(j) + " coincide");
  std::vector<Rational> m(k * k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m[i * k + j] = values[i] >= values[j] ? values[i] - values[j] : values[j] - values[i];
  return FiniteMetricSpace::from_exact(k, std::move(m));
}

inline FiniteMetricSpace real_points_space(const std::vector<double>& values) {
  std::size_t k = values.size();
  if (k < 2) fail(Errc::RejectTooSmall, "need at least 2 line points");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (values[i] == values[j])
        fail(Errc::DuplicateValue, "line points " + std::to_string(i) + " and " +
                                       std::to_string(j) + " coincide");
  std::vector<double> m(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = std::fabs(values[i] - values[j]);
  return FiniteMetricSpace::from_double(k, std::move(m));
}

// Vertex set of a graph with the hop-count metric (edge weights ignored;
// this is the combinatorial distance, which is what the identity-map upper
// bound uses).
inline FiniteMetricSpace graph_metric_space(const WeightedGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<Rational> m(n * n, Rational(0));
  for (VertexId x = 0; x < n; ++x) {
    auto dist = bfs_hop_distances(g, x);
    for (std::size_t y = 0; y < n; ++y) m[x * n + y] = Rational(dist[y]);
  }
  return FiniteMetricSpace::from_exact(n, std::move(m));
}

// Points in R^dim under the Euclidean distance.  Not required to be a
// metric space instance; coincident points are allowed and show up as
// infinite distortion for any map that separates their preimages.
class EuclideanConfig {
 public:
  EuclideanConfig(std::size_t k, std::size_t dim, std::vector<double> coords)
      : k_(k), dim_(dim), coords_(std::move(coords)) {
    if (k_ < 1 || dim_ < 1) fail(Errc::RejectTooSmall, "need k >= 1 points, dim >= 1");
    if (coords_.size() != k_ * dim_)
      fail(Errc::ParseError, "coordinate block is not k x dim");
    for (double c : coords_)
      if (!std::isfinite(c)) fail(Errc::ParseError, "non-finite coordinate");
  }

  std::size_t size() const { return k_; }
  std::size_t dim() const { return dim_; }
  double coord(std::size_t i, std::size_t d) const { return coords_[i * dim_ + d]; }

  double dist(std::size_t i, std::size_t j) const {
    double s = 0;
    for (std::size_t d = 0; d < dim_; ++d) {
      double t = coord(i, d) - coord(j, d);
      s += t * t;
    }
    return std::sqrt(s);
  }

 private:
  std::size_t k_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

namespace detail {

// Distortion = (max expansion) * (max contraction) over distinct pairs of
// points of X; +oo as soon as two distinct points land at distance zero.
template <typename DistFn>
double distortion_impl(const FiniteMetricSpace& x, const PointMap& f, DistFn&& dy) {
  double worst_expand = 0;    // sup d_Y / d_X
  double worst_contract = 0;  // sup d_X / d_Y
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double dxij = x.dist(i, j);
      double dyij = dy(f[i], f[j]);
      if (dyij <= 0) return std::numeric_limits<double>::infinity();
      worst_expand = std::max(worst_expand, dyij / dxij);
      worst_contract = std::max(worst_contract, dxij / dyij);
    }
  return worst_expand * worst_contract;
}

}  // namespace detail

inline double distortion_of_map(const FiniteMetricSpace& x,
                                const FiniteMetricSpace& y, const PointMap& f) {
  validate_point_map(f, x.size(), y.size());
  return detail::distortion_impl(x, f, [&](std::size_t a, std::size_t b) {
    return a == b ? 0.0 : y.dist(a, b);
  });
}

inline double distortion_of_map(const FiniteMetricSpace& x,
                                const EuclideanConfig& y, const PointMap& f) {
  validate_point_map(f, x.size(), y.size());
  return detail::distortion_impl(x, f, [&](std::size_t a, std::size_t b) {
    return a == b ? 0.0 : y.dist(a, b);
  });
}

}  // namespace sgt
