// Bound sandwich on small tree balls: closed-form floor, the routed-path
// bound with level-exponential w, the exhaustive gap against two points,
// and the closed-form ceiling attained by cutting the center edge.  All
// four columns are exact rationals; floor <= routed <= gap <= ceiling on
// every row.

#include <cstdio>

#include <sgt/sgt.hpp>

int main() {
  const unsigned cases[][2] = {{3, 1}, {3, 2}, {4, 1}, {5, 1}};
  std::printf("%3s %3s %14s %14s %14s %14s\n", "d", "r", "floor", "routed",
              "gap(2pt)", "ceiling");
  for (const auto& c : cases) {
    unsigned d = c[0], r = c[1];
    sgt::WeightedGraph g = sgt::gen_tree_ball(d, r);
    sgt::Rational floor = sgt::prop32_lower(d, r);
    sgt::Rational routed = sgt::path_method_lower_bound(
        g, sgt::tree_exponential_weights(g), sgt::tree_geodesic_paths(g));
    sgt::GapResult gap = sgt::gap_exact(g, sgt::two_point_space(sgt::Rational(1)));
    sgt::Rational ceiling = sgt::prop33_upper(d, r);
    std::printf("%3u %3u %14s %14s %14s %14s\n", d, r, sgt::to_string(floor).c_str(),
                sgt::to_string(routed).c_str(),
                sgt::to_string(*gap.value_exact).c_str(),
                sgt::to_string(ceiling).c_str());
  }
  return 0;
}
