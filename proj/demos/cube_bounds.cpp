// Hamming cubes at a glance: the linear gap from the eigensolver, the exact
// identity-map quotient, and the routed lower bound through bit-fixing
// paths.  The identity column shrinks like 4/(n(n+1)) while mu1 is 2/n, so
// the two drift apart as the dimension grows.

#include <cstdio>

#include <sgt/sgt.hpp>

int main() {
  std::printf("%3s %10s %12s %14s\n", "n", "mu1", "identity", "routed bound");
  for (unsigned n = 1; n <= 5; ++n) {
    sgt::WeightedGraph g = sgt::gen_hamming(n);
    double m = sgt::mu1(g);
    sgt::QuotientValue idq = sgt::identity_upper_bound(g);
    sgt::Rational routed = sgt::path_method_lower_bound(g, sgt::uniform_edge_weights(g),
                                                        sgt::hamming_bitfix_paths(g));
    std::printf("%3u %10.6f %12s %14s\n", n, m, sgt::to_string(*idq.ratio_exact).c_str(),
                sgt::to_string(routed).c_str());
  }
  return 0;
}
