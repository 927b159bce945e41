// Acceptance gate for the toolkit: eleven timed criteria, one line each.
// Exit status is the number of failed criteria, so CI can gate on it.
//
// Tolerances are pinned here on purpose; loosening one to make a run pass
// defeats the point of the gate.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <sgt/sgt.hpp>

#include "helpers.hpp"

namespace {

int g_check_failures = 0;

#define CHECK(cond)                                                              \
  do {                                                                           \
    if (!(cond)) {                                                               \
      ++g_check_failures;                                                        \
      std::printf("        check failed: %s (%s:%d)\n", #cond, __FILE__, __LINE__); \
    }                                                                            \
  } while (0)

constexpr double kPi = 3.14159265358979323846;

sgt::PointMap identity_map(std::size_t n) {
  sgt::PointMap f;
  for (std::size_t v = 0; v < n; ++v) f.to.push_back(static_cast<std::uint32_t>(v));
  return f;
}

// ------------------------------------------------------------- criteria --

// 1. Dense eigensolver against the two families with known gaps.
void linear_gap_closed_forms() {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    double got = sgt::mu1(sgt::gen_hamming(n));
    CHECK(std::fabs(got - 2.0 / n) <= 1e-9);
  }
  for (std::uint32_t n = 2; n <= 50; ++n) {
    double got = sgt::mu1(sgt::gen_path(n));
    CHECK(std::fabs(got - (1.0 - std::cos(kPi / n))) <= 1e-9);
  }
}

// 2. Identity quotient on the n-cube is 4/(n(n+1)), exactly.
void cube_identity_quotient() {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    sgt::WeightedGraph g = sgt::gen_hamming(n);
    sgt::QuotientValue q =
        sgt::poincare_quotient(g, sgt::graph_metric_space(g), identity_map(g.vertex_count()));
    CHECK(q.ratio_exact.has_value());
    CHECK(*q.ratio_exact == sgt::Rational(4, n * (n + 1)));
    CHECK(*q.ratio_exact == sgt::hamming_identity_value(n));
  }
}

// 3. The routed-path bound never exceeds the true infimum, on every
//    corpus graph against every corpus target.
void path_bound_below_exhaustive_gap() {
  std::vector<sgt::WeightedGraph> graphs = sgt::test::small_corpus();
  for (const auto& g : graphs) {
    sgt::Rational lower = sgt::path_method_lower_bound(g, sgt::uniform_edge_weights(g),
                                                       sgt::bfs_paths(g, false));
    std::vector<sgt::FiniteMetricSpace> targets;
    targets.push_back(sgt::two_point_space(sgt::Rational(1)));
    targets.push_back(sgt::real_points_space(
        std::vector<sgt::Rational>{sgt::Rational(0), sgt::Rational(1), sgt::Rational(3)}));
    targets.push_back(sgt::graph_metric_space(g));
    for (const auto& x : targets) {
      sgt::GapResult r = sgt::gap_exact(g, x);
      CHECK(sgt::to_double(lower) <= r.value + 1e-9);
      CHECK(r.value_exact.has_value());
      CHECK(lower <= *r.value_exact);
    }
  }
}

// 4. Hand-checked congestion values, exact.
void hand_checked_congestion_values() {
  sgt::WeightedGraph k2 = sgt::gen_complete(2);
  CHECK(sgt::congestion_A(k2, sgt::uniform_edge_weights(k2), sgt::bfs_paths(k2, false))
            .a_value == sgt::Rational(1, 2));

  sgt::WeightedGraph p2 = sgt::gen_path(2);
  CHECK(sgt::congestion_A(p2, sgt::uniform_edge_weights(p2), sgt::bfs_paths(p2, false))
            .a_value == sgt::Rational(1));

  sgt::WeightedGraph star = sgt::gen_tree_ball(3, 1);
  CHECK(sgt::congestion_A(star, sgt::tree_exponential_weights(star),
                          sgt::tree_geodesic_paths(star))
            .a_value == sgt::Rational(7, 6));
}

// 5. On tree balls the center cut reproduces the closed-form ceiling
//    exactly, and the routed bound with level weights clears the floor.
void tree_closed_forms() {
  for (std::uint32_t d = 3; d <= 5; ++d)
    for (std::uint32_t r = 1; r <= 3; ++r) {
      sgt::WeightedGraph g = sgt::gen_tree_ball(d, r);
      sgt::QuotientValue cut =
          sgt::cut_quotient(g, sgt::center_edge_component(g), sgt::Rational(1));
      CHECK(cut.ratio_exact.has_value());
      CHECK(*cut.ratio_exact == sgt::prop33_upper(d, r));

      sgt::Rational routed = sgt::path_method_lower_bound(
          g, sgt::tree_exponential_weights(g), sgt::tree_geodesic_paths(g));
      CHECK(routed >= sgt::prop32_lower(d, r));
    }
}

// 6. Scaled by (d-1)^r, floor and ceiling are flat in r: max/min < 4.
void normalized_tree_bounds_are_flat() {
  for (std::uint32_t d = 3; d <= 4; ++d) {
    sgt::Rational lo_min, lo_max, hi_min, hi_max;
    for (std::uint32_t r = 1; r <= 6; ++r) {
      sgt::Rational scale = sgt::rational_pow(sgt::Rational(d - 1), r);
      sgt::Rational lo = scale * sgt::prop32_lower(d, r);
      sgt::Rational hi = scale * sgt::prop33_upper(d, r);
      if (r == 1) {
        lo_min = lo_max = lo;
        hi_min = hi_max = hi;
      } else {
        if (lo < lo_min) lo_min = lo;
        if (lo > lo_max) lo_max = lo;
        if (hi < hi_min) hi_min = hi;
        if (hi > hi_max) hi_max = hi;
      }
    }
    CHECK(lo_max < 4 * lo_min);
    CHECK(hi_max < 4 * hi_min);
  }
}

// 7. Path graphs never fall below their linear gap: 200 seeded random
//    3-point targets across chains with 1..4 edges.
void path_gap_dominates_linear_gap() {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    sgt::WeightedGraph g = sgt::gen_path(n);
    double base = sgt::mu1(g);
    for (std::uint64_t s = 1; s <= 50; ++s) {
      sgt::FiniteMetricSpace x =
          sgt::test::random_three_point_metric((n - 1) * 50 + s);
      CHECK(sgt::gap_exact(g, x).value >= base - 1e-6);
    }
  }
}

// 8. Against two points the exhaustive gap must agree exactly with an
//    independent brute-force cut minimum computed from the raw edge list.
void two_point_gap_equals_cut_oracle() {
  sgt::FiniteMetricSpace two = sgt::two_point_space(sgt::Rational(1));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>((seed - 1) % 6);
    sgt::WeightedGraph g = sgt::test::random_connected_graph(n, seed);
    sgt::GapResult r = sgt::gap_exact(g, two);
    CHECK(r.value_exact.has_value());
    CHECK(*r.value_exact == sgt::test::min_cut_value_oracle(g));
  }
}

// 9. Finite subsets of the line can only see a gap at least the linear one.
void line_target_dominates_linear_gap() {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>((seed - 1) % 4);
    std::uint32_t k = 2 + static_cast<std::uint32_t>((seed - 1) % 3);
    sgt::WeightedGraph g = sgt::test::random_connected_graph(n, seed);
    sgt::FiniteMetricSpace x = sgt::test::random_line_metric(k, seed);
    CHECK(sgt::gap_exact(g, x).value >= sgt::mu1(g) - 1e-6);
  }
}

// 10. Identity bound on seeded random cubic graphs, normalized by
//     (log n)^2, against a frozen regression band (centers from the
//     implementation's first run, +-50%).
void cubic_identity_regression_band() {
  const std::uint32_t sizes[] = {16, 64, 256};
  const double centers[] = {1.1296989351371716, 0.87628240179500161,
                            0.76464583994422441};
  for (int i = 0; i < 3; ++i) {
    sgt::WeightedGraph g = sgt::gen_random_regular(sizes[i], 3, 1);
    double v = sgt::identity_upper_bound(g).ratio;
    double l = std::log(static_cast<double>(sizes[i]));
    double normalized = v * l * l;
    CHECK(normalized <= centers[i] * 1.5);
    CHECK(normalized >= centers[i] / 1.5);
  }
}

// 11. Every subcommand, run twice with identical flags, byte for byte.
void cli_runs_are_byte_identical() {
  using sgt::test::run_cli;

  std::string tree_file = sgt::test::temp_file("acc_tree");
  std::string cycle_file = sgt::test::temp_file("acc_cycle");
  CHECK(run_cli("gen --family tree --d 3 --r 2 --out " + tree_file).status == 0);
  CHECK(run_cli("gen --family cycle --n 4 --out " + cycle_file).status == 0);

  const std::string commands[] = {
      "gen --family random-regular --n 10 --d 3 --seed 7",
      "mu1 --full --graph " + tree_file,
      "path-bound --profile --paths tree --w tree-exp --graph " + tree_file,
      "gap-exact --graph " + cycle_file + " --metric two:1",
      "gap-search --graph " + cycle_file + " --metric self --seed 5 --restarts 4",
      "quotient --graph " + cycle_file + " --metric two:1 --map 0,1,1,0",
      "formula hamming-identity --params n=4",
      "report --family tree --d 3 --r 1 --target two:1",
      "report --family hamming --n 2 --format csv",
  };
  for (const auto& cmd : commands) {
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.status == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}

// -------------------------------------------------------------- harness --

struct Criterion {
  const char* description;
  double budget_seconds;  // 0 disables the runtime check
  void (*run)();
};

const Criterion kCriteria[] = {
    {"linear gaps match the cube and chain closed forms", 5, linear_gap_closed_forms},
    {"cube identity quotient is 4/(n(n+1)) exactly", 10, cube_identity_quotient},
    {"path-method bound stays below the exhaustive gap on the corpus", 30,
     path_bound_below_exhaustive_gap},
    {"hand-checked congestion values are exact", 0, hand_checked_congestion_values},
    {"tree cut matches the ceiling exactly; routed bound clears the floor", 30,
     tree_closed_forms},
    {"tree bounds normalized by (d-1)^r are flat in r", 0,
     normalized_tree_bounds_are_flat},
    {"chain gaps dominate the linear gap over random 3-point targets", 60,
     path_gap_dominates_linear_gap},
    {"two-point gaps equal the independent min-cut oracle", 0,
     two_point_gap_equals_cut_oracle},
    {"line-target gaps dominate the linear gap", 0, line_target_dominates_linear_gap},
    {"cubic identity bound stays in the frozen regression band", 0,
     cubic_identity_regression_band},
    {"repeated CLI runs are byte-identical", 0, cli_runs_are_byte_identical},
};

}  // namespace

int main() {
  int failed = 0;
  int k = 0;
  for (const Criterion& c : kCriteria) {
    ++k;
    g_check_failures = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const std::exception& e) {
      ++g_check_failures;
      std::printf("        threw: %s\n", e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      ++g_check_failures;
      std::printf("        over budget: %.2fs > %.0fs\n", secs, c.budget_seconds);
    }
    bool ok = g_check_failures == 0;
    if (!ok) ++failed;
    std::printf("[%2d/11] %s %s (%.2fs)\n", k, ok ? "PASS" : "FAIL", c.description, secs);
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("all 11 criteria passed\n");
  else
    std::printf("%d of 11 criteria FAILED\n", failed);
  return failed;
}
