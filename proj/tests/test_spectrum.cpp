#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "sgt/prng.hpp"
#include "sgt/spectrum.hpp"

using namespace sgt;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Real-valued Poincare quotient, written independently of the library code:
// sum over ordered pairs m(x,y)(fx-fy)^2 over (1/m(0)) sum m(x)m(y)(fx-fy)^2.
double real_quotient(const WeightedGraph& g, const std::vector<double>& f) {
  double num = 0;
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    double d = f[e.u] - f[e.v];
    num += 2 * g.edge_weight_d(ei) * d * d;
  }
  double den = 0;
  std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      double d = f[a] - f[b];
      den += 2 * g.vertex_weight_d(a) * g.vertex_weight_d(b) * d * d;
    }
  return num / (den / g.total_weight_d());
}

}  // namespace

TEST_CASE("small closed-form spectra") {
  Spectrum k2 = laplacian_spectrum(test::k2());
  REQUIRE(k2.eigenvalues.size() == 2);
  REQUIRE(k2.eigenvalues[0] == Catch::Approx(0.0).margin(1e-9));
  REQUIRE(k2.eigenvalues[1] == Catch::Approx(2.0).margin(1e-9));
  REQUIRE(k2.mu1 == Catch::Approx(2.0).margin(1e-9));

  Spectrum c4 = laplacian_spectrum(test::c4());
  REQUIRE(c4.eigenvalues[1] == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(c4.eigenvalues[2] == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(c4.eigenvalues[3] == Catch::Approx(2.0).margin(1e-9));
  REQUIRE(c4.mu1 == Catch::Approx(1.0).margin(1e-9));

  // K_n has mu1 = n/(n-1); the star has mu1 = 1.
  REQUIRE(mu1(gen_complete(4)) == Catch::Approx(4.0 / 3.0).margin(1e-9));
  REQUIRE(mu1(gen_complete(7)) == Catch::Approx(7.0 / 6.0).margin(1e-9));
  REQUIRE(mu1(test::star3()) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("hamming cube gap is 2/n") {
  for (std::uint32_t n = 1; n <= 6; ++n)
    REQUIRE(mu1(gen_hamming(n)) == Catch::Approx(2.0 / n).margin(1e-9));
}

TEST_CASE("path gap is 1 - cos(pi/n)") {
  for (std::uint32_t n : {2u, 3u, 5u, 10u, 25u}) {
    double expect = 1.0 - std::cos(kPi / n);
    REQUIRE(mu1(gen_path(n)) == Catch::Approx(expect).margin(1e-9));
  }
}

TEST_CASE("eigenvalue sum equals the vertex count") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WeightedGraph g = test::random_connected_graph(3 + seed % 6, seed);
    Spectrum s = laplacian_spectrum(g);
    double sum = 0;
    for (double ev : s.eigenvalues) sum += ev;
    REQUIRE(sum == Catch::Approx(double(g.vertex_count())).margin(g.vertex_count() * 1e-9));
    REQUIRE(s.eigenvalues.front() == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(s.eigenvalues.back() <= 2.0 + 1e-9);
  }
}

TEST_CASE("mu1 ignores uniform weight scaling") {
  WeightedGraph g = test::random_connected_graph(6, 42);
  std::vector<WeightedEdgeInput> scaled;
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    scaled.push_back({e.u, e.v, g.edge_weight(ei) * Rational(7, 3)});
  }
  WeightedGraph h = WeightedGraph::build(g.vertex_count(), scaled);
  REQUIRE(mu1(h) == Catch::Approx(mu1(g)).margin(1e-9));
}

TEST_CASE("mu1 is the minimum of the real quotient") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    WeightedGraph g = test::random_connected_graph(5, seed * 11);
    Spectrum s = laplacian_spectrum(g);

    // No random map may beat mu1.
    SplitMix64 rng(mix_seed(seed, 0x72617954ULL));
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 10000; ++t) {
      std::vector<double> f(g.vertex_count());
      bool constant = true;
      for (auto& v : f) v = rng.next_unit();
      for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] != f[0]) constant = false;
      if (constant) continue;
      best = std::min(best, real_quotient(g, f));
      REQUIRE(best >= s.mu1 - 1e-9);
    }

    // The eigenfunction attains it.
    REQUIRE(real_quotient(g, s.mu1_map) == Catch::Approx(s.mu1).margin(1e-6));
  }
}

TEST_CASE("solver cap") {
  try {
    laplacian_spectrum(gen_hamming(3), 4);
    FAIL("expected SizeCapExceeded");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::SizeCapExceeded);
    REQUIRE(e.exit_code() == 3);
  }
}
