#pragma once
// Closed forms and small analytic devices.
//
// Everything with rational inputs is computed as an exact rational; the
// two transcendental items (mu_1 of a path, the log^2 reference curve)
// return doubles.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/metric.hpp"
#include "sgt/rational.hpp"

namespace sgt {

// Quotient of the identity map on the n-cube: 4 / (n (n+1)).
inline Rational hamming_identity_value(std::uint32_t n) {
  if (n < 1) fail(Errc::DomainError, "cube dimension must be >= 1");
  return Rational(4, BigInt(n) * (BigInt(n) + 1));
}

// Lower bound for the gap of the radius-r ball in the d-regular tree,
// obtained from the path method with geodesics and exponentially growing
// edge weights:
//
//   (d-2)/(d^2 (d-1)) * ((d-1)^r - 1)/(d-1)^r * (d-1)^{-r}
inline Rational prop32_lower(std::uint32_t d, std::uint32_t r) {
  if (d < 3) fail(Errc::DomainError, "need d >= 3");
  if (r < 1) fail(Errc::DomainError, "need r >= 1");
  BigInt p = bigint_pow(BigInt(d - 1), r);  // (d-1)^r
  Rational out(d - 2, BigInt(d) * d * (d - 1));
  out *= Rational(p - 1, p);
  out *= Rational(1, p);
  return out;
}

// Matching upper bound from the cut through a center edge:
//
//   2 / [ d((d-1)^{r-1} - 1)/(d-2) + (d-1)^{r-1}
//         + ((d-1)^{r-1} - 1)(d-1)^r / ((d-1)^r - 1)
//         + (d-2)(d-1)^{2r-1} / (d ((d-1)^r - 1)) ]
inline Rational prop33_upper(std::uint32_t d, std::uint32_t r) {
  if (d < 3) fail(Errc::DomainError, "need d >= 3");
  if (r < 1) fail(Errc::DomainError, "need r >= 1");
  BigInt pr = bigint_pow(BigInt(d - 1), r);        // (d-1)^r
  BigInt pr1 = bigint_pow(BigInt(d - 1), r - 1);   // (d-1)^{r-1}
  BigInt p2r1 = bigint_pow(BigInt(d - 1), 2 * r - 1);
  Rational bracket(BigInt(d) * (pr1 - 1), d - 2);
  bracket += Rational(pr1);
  bracket += Rational((pr1 - 1) * pr, pr - 1);
  bracket += Rational(BigInt(d - 2) * p2r1, BigInt(d) * (pr - 1));
  return Rational(2) / bracket;
}

// mu_1 of the path with n edges: 1 - cos(pi/n).
inline double pn_mu1(std::uint32_t n) {
  if (n < 1) fail(Errc::DomainError, "path needs at least one edge");
  return 1.0 - std::cos(3.14159265358979323846 / n);
}

// Transfer of the linear gap through a bi-Lipschitz copy: any space
// containing the vertex set with distortion c yields the lower bound
// mu_1 / c^2.
inline double izeki_lower_bound(double mu1, double distortion) {
  if (!(mu1 >= 0)) fail(Errc::DomainError, "mu_1 must be nonnegative");
  if (!(distortion >= 1)) fail(Errc::DistortionBelowOne, "distortion is below 1");
  return mu1 / (distortion * distortion);
}

// Reference curve 1/(log n)^2 for the generic Euclidean-embedding route;
// unit constant, shape only.
inline double bourgain_ratio_bound(std::size_t n) {
  if (n < 2) fail(Errc::DomainError, "need n >= 2 vertices");
  double l = std::log(static_cast<double>(n));
  return 1.0 / (l * l);
}

// Rearrangement of a map from a path onto the real line: phi(0) = 0 and
// phi(i) = sum_{l <= i} d(f(v_{l-1}), f(v_l)).  Consecutive increments
// reproduce the original edge distances exactly, while for arbitrary i, j
// the gap |phi(i) - phi(j)| dominates d(f(v_i), f(v_j)) by the triangle
// inequality.  So phi has the same quotient numerator as f and a larger
// denominator: the line is the worst target for a path.
inline std::vector<double> rearrangement_phi(const WeightedGraph& g,
                                             const FiniteMetricSpace& x,
                                             const PointMap& f) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() != n - 1)
    fail(Errc::NotAPathGraph, "graph is not a path");
  for (VertexId i = 0; i + 1 < n; ++i)
    if (!g.has_edge(i, i + 1))
      fail(Errc::NotAPathGraph, "vertices are not in chain order");
  validate_point_map(f, n, x.size());
  std::vector<double> phi(n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    phi[i] = phi[i - 1] + x.dist(f[i - 1], f[i]);
  return phi;
}

}  // namespace sgt
