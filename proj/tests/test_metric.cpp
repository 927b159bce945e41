#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <limits>

#include "helpers.hpp"
#include "sgt/metric.hpp"

using namespace sgt;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::DomainError;
}

// Row-major 3x3 from the upper triangle.
std::vector<Rational> tri3(Rational a, Rational b, Rational c) {
  return {0, a, b, a, 0, c, b, c, 0};
}

}  // namespace

TEST_CASE("metric validation catches each defect") {
  REQUIRE(code_of([] { FiniteMetricSpace::from_exact(1, {Rational(0)}); }) ==
          Errc::RejectTooSmall);
  REQUIRE(code_of([] {
            FiniteMetricSpace::from_exact(2, {Rational(1), Rational(1), Rational(1),
                                              Rational(0)});
          }) == Errc::NonzeroDiagonal);
  REQUIRE(code_of([] {
            FiniteMetricSpace::from_exact(2, {Rational(0), Rational(1), Rational(2),
                                              Rational(0)});
          }) == Errc::AsymmetricMatrix);
  REQUIRE(code_of([] {
            FiniteMetricSpace::from_exact(2, {Rational(0), Rational(0), Rational(0),
                                              Rational(0)});
          }) == Errc::NonpositiveOffDiagonal);
  REQUIRE(code_of([] {
            FiniteMetricSpace::from_exact(2, {Rational(0), Rational(-1), Rational(-1),
                                              Rational(0)});
          }) == Errc::NonpositiveOffDiagonal);
  // d(0,2) = 10 > 1 + 1.
  REQUIRE(code_of([] {
            FiniteMetricSpace::from_exact(3, tri3(Rational(1), Rational(10), Rational(1)));
          }) == Errc::TriangleViolation);

  REQUIRE(code_of([] { FiniteMetricSpace::from_double(2, {0, 1, 1, 0.1}); }) ==
          Errc::NonzeroDiagonal);
  REQUIRE(code_of([] { FiniteMetricSpace::from_double(2, {0, 1, 2, 0}); }) ==
          Errc::AsymmetricMatrix);
  REQUIRE(code_of([] { FiniteMetricSpace::from_double(3, {0, 1, 3, 1, 0, 1, 3, 1, 0}); }) ==
          Errc::TriangleViolation);
  double inf = std::numeric_limits<double>::infinity();
  REQUIRE_THROWS_AS(FiniteMetricSpace::from_double(2, {0, inf, inf, 0}), Error);
}

TEST_CASE("double-mode validation tolerates rounding noise") {
  // Asymmetry and triangle slack below 1e-9 pass.
  double eps = 5e-10;
  FiniteMetricSpace m = FiniteMetricSpace::from_double(3, {0, 1, 2, 1 + eps, 0, 1, 2, 1, 0});
  REQUIRE(m.size() == 3);
  REQUIRE_FALSE(m.exact());
}

TEST_CASE("two-point and line spaces") {
  FiniteMetricSpace two = two_point_space(Rational(7, 2));
  REQUIRE(two.size() == 2);
  REQUIRE(two.exact());
  REQUIRE(two.dist_exact(0, 1) == Rational(7, 2));
  REQUIRE(code_of([] { two_point_space(Rational(0)); }) == Errc::NonpositiveDelta);
  REQUIRE(code_of([] { two_point_space(Rational(-2)); }) == Errc::NonpositiveDelta);

  FiniteMetricSpace line = real_points_space({Rational(0), Rational(2), Rational(-1)});
  REQUIRE(line.size() == 3);
  REQUIRE(line.dist_exact(0, 1) == Rational(2));
  REQUIRE(line.dist_exact(1, 2) == Rational(3));
  REQUIRE(line.dist_exact(2, 0) == Rational(1));
  REQUIRE(code_of([] { real_points_space({Rational(1), Rational(1)}); }) ==
          Errc::DuplicateValue);

  FiniteMetricSpace dline = real_points_space(std::vector<double>{0.0, 0.5});
  REQUIRE(dline.dist(0, 1) == 0.5);
  REQUIRE(code_of([] { real_points_space(std::vector<double>{0.25, 0.25}); }) ==
          Errc::DuplicateValue);
}

TEST_CASE("graph metric space uses hop distances") {
  FiniteMetricSpace m = graph_metric_space(gen_hamming(2));
  REQUIRE(m.size() == 4);
  REQUIRE(m.exact());
  REQUIRE(m.dist_exact(0, 3) == Rational(2));
  REQUIRE(m.dist_exact(0, 1) == Rational(1));
  REQUIRE(m.dist_exact(1, 2) == Rational(2));

  // Weights do not change hop distances.
  WeightedGraph w = WeightedGraph::build(
      3, {WeightedEdgeInput{0, 1, Rational(9)}, WeightedEdgeInput{1, 2, Rational(1, 7)}});
  FiniteMetricSpace wm = graph_metric_space(w);
  REQUIRE(wm.dist_exact(0, 2) == Rational(2));
}

TEST_CASE("scaling a metric space") {
  FiniteMetricSpace m = real_points_space({Rational(0), Rational(1), Rational(3)});
  FiniteMetricSpace s = m.scaled(Rational(5, 2));
  REQUIRE(s.dist_exact(0, 2) == Rational(15, 2));
  REQUIRE(s.exact());
  REQUIRE(code_of([&] { m.scaled(Rational(0)); }) == Errc::DomainError);

  FiniteMetricSpace d = FiniteMetricSpace::from_double(2, {0, 2, 2, 0}).scaled(Rational(3));
  REQUIRE(d.dist(0, 1) == 6.0);
  REQUIRE_FALSE(d.exact());
}

TEST_CASE("point map validation") {
  PointMap f{{0, 1, 1}};
  REQUIRE(f.size() == 3);
  REQUIRE(f[2] == 1);
  REQUIRE_FALSE(f.is_constant());
  REQUIRE(PointMap{{2, 2, 2}}.is_constant());

  REQUIRE_NOTHROW(validate_point_map(f, 3, 2));
  REQUIRE(code_of([&] { validate_point_map(f, 4, 2); }) == Errc::DomainError);
  REQUIRE(code_of([&] { validate_point_map(f, 3, 1); }) == Errc::DomainError);
}

TEST_CASE("euclidean configurations") {
  // Unit square corners.
  EuclideanConfig sq(4, 2, {0, 0, 1, 0, 0, 1, 1, 1});
  REQUIRE(sq.dist(0, 3) == Catch::Approx(std::sqrt(2.0)));
  REQUIRE(sq.dist(0, 1) == 1.0);
  REQUIRE_THROWS_AS(EuclideanConfig(2, 1, {0.0, std::numeric_limits<double>::quiet_NaN()}),
                    Error);
}

TEST_CASE("distortion of maps") {
  FiniteMetricSpace c4 = graph_metric_space(gen_cycle(4));

  // Identity into the same space.
  PointMap id{{0, 1, 2, 3}};
  REQUIRE(distortion_of_map(c4, c4, id) == Catch::Approx(1.0));

  // Cycle metric to unit-square corners: adjacent pairs keep distance 1,
  // opposite pairs shrink from 2 to sqrt(2), distortion sqrt(2).
  EuclideanConfig sq(4, 2, {0, 0, 1, 0, 1, 1, 0, 1});
  REQUIRE(distortion_of_map(c4, sq, id) == Catch::Approx(std::sqrt(2.0)));

  // Collapsing two distinct points explodes the distortion.
  PointMap collapse{{0, 0, 1, 2}};
  REQUIRE(std::isinf(distortion_of_map(c4, c4, collapse)));

  // Scaling the target does not change distortion.
  FiniteMetricSpace scaled = c4.scaled(Rational(17, 3));
  REQUIRE(distortion_of_map(c4, scaled, id) == Catch::Approx(1.0));
}
