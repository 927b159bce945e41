#pragma once
// Linear spectral gap.
//
// The weighted Laplacian acts on f: V -> R by
//
//   (Delta f)(x) = f(x) - (1/m(x)) sum_y m(x,y) f(y).
//
// Conjugating by D^{1/2} (D = diag m(x)) gives the symmetric matrix
// N = I - D^{-1/2} M D^{-1/2} with the same spectrum, which lies in [0, 2];
// 0 is simple exactly when the graph is connected, and mu_1 is the smallest
// positive eigenvalue.  We hand N to a dense symmetric eigensolver.

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/metric.hpp"

namespace sgt {

inline constexpr std::size_t kDefaultSolverCap = 4096;

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, length n
  double mu1 = 0;
  // Eigenfunction of Delta for mu1 (already transformed back through
  // D^{-1/2}); kept for diagnostics and cross-checks, not part of any bound.
  std::vector<double> mu1_map;
};

inline Spectrum laplacian_spectrum(const WeightedGraph& g,
                                   std::size_t solver_cap = kDefaultSolverCap) {
  const std::size_t n = g.vertex_count();
  if (n > solver_cap)
    fail(Errc::SizeCapExceeded, "dense eigensolver capped at " +
                                    std::to_string(solver_cap) + " vertices, graph has " +
                                    std::to_string(n));

  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) mat(i, i) = 1.0;
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    double off = -g.edge_weight_d(ei) /
                 std::sqrt(g.vertex_weight_d(e.u) * g.vertex_weight_d(e.v));
    mat(e.u, e.v) = off;
    mat(e.v, e.u) = off;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  if (solver.info() != Eigen::Success)
    fail(Errc::DegenerateSpectrum, "eigensolver did not converge");

  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  if (std::fabs(s.eigenvalues.front()) > kZeroTol)
    fail(Errc::DegenerateSpectrum, "smallest eigenvalue " +
                                       std::to_string(s.eigenvalues.front()) +
                                       " is not zero");
  if (s.eigenvalues.back() > 2.0 + kZeroTol)
    fail(Errc::DegenerateSpectrum, "largest eigenvalue " +
                                       std::to_string(s.eigenvalues.back()) +
                                       " exceeds 2");

  std::size_t idx = 0;
  while (idx < n && s.eigenvalues[idx] <= kZeroTol) ++idx;
  if (idx == n)
    fail(Errc::DegenerateSpectrum, "no positive eigenvalue above tolerance");
  if (idx != 1)
    fail(Errc::DegenerateSpectrum,
         "zero eigenvalue is not simple on a connected graph");
  s.mu1 = s.eigenvalues[idx];

  s.mu1_map.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    s.mu1_map[i] = solver.eigenvectors()(i, idx) / std::sqrt(g.vertex_weight_d(i));
  return s;
}

inline double mu1(const WeightedGraph& g, std::size_t solver_cap = kDefaultSolverCap) {
  return laplacian_spectrum(g, solver_cap).mu1;
}

}  // namespace sgt
