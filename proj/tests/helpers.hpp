#pragma once

// Shared fixtures for the test suite: the small graph corpus, seeded random
// inputs, independent oracles, and a subprocess runner for the CLI binary.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "sgt/graph.hpp"
#include "sgt/metric.hpp"
#include "sgt/prng.hpp"
#include "sgt/rational.hpp"

namespace sgt::test {

// ---------------------------------------------------------------- corpus --

inline WeightedGraph k2() { return gen_complete(2); }
inline WeightedGraph p2() { return gen_path(2); }
inline WeightedGraph p3() { return gen_path(3); }
inline WeightedGraph c4() { return gen_cycle(4); }
inline WeightedGraph star3() { return gen_tree_ball(3, 1); }

inline std::vector<WeightedGraph> small_corpus() {
  std::vector<WeightedGraph> out;
  out.push_back(k2());
  out.push_back(p2());
  out.push_back(p3());
  out.push_back(c4());
  out.push_back(star3());
  return out;
}

// --------------------------------------------------------- random inputs --

// Connected graph on n vertices: a random spanning tree (each vertex i >= 1
// attaches to a random earlier vertex) plus a few random extra edges.
// Weights are small positive integers so everything stays rational.
inline WeightedGraph random_connected_graph(std::uint32_t n, std::uint64_t seed,
                                            bool unit_weights = false) {
  SplitMix64 rng(mix_seed(seed, 0x67726170680aULL));
  std::vector<WeightedEdgeInput> edges;
  for (std::uint32_t v = 1; v < n; ++v) {
    std::uint32_t u = static_cast<std::uint32_t>(rng.next_below(v));
    Rational w = unit_weights ? Rational(1) : Rational(1 + rng.next_below(3));
    edges.push_back({u, v, w});
  }
  std::uint64_t extra = rng.next_below(n);
  for (std::uint64_t t = 0; t < extra; ++t) {
    std::uint32_t u = static_cast<std::uint32_t>(rng.next_below(n));
    std::uint32_t v = static_cast<std::uint32_t>(rng.next_below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    bool dup = false;
    for (const auto& in : edges)
      if (Edge(in.u, in.v) == e) dup = true;
    if (dup) continue;
    Rational w = unit_weights ? Rational(1) : Rational(1 + rng.next_below(3));
    edges.push_back({e.u, e.v, w});
  }
  return WeightedGraph::build(n, edges);
}

// Triangle-inequality-safe random 3-point metric: two sides in (0.5, 1.5),
// the third strictly between |a-b| and a+b.
inline FiniteMetricSpace random_three_point_metric(std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x6d65740aULL));
  double a = 0.5 + rng.next_unit();
  double b = 0.5 + rng.next_unit();
  double lo = (a > b ? a - b : b - a) + 1e-3;
  double hi = a + b - 1e-3;
  double c = lo + (hi - lo) * rng.next_unit();
  std::vector<double> d = {0, a, b, a, 0, c, b, c, 0};
  return FiniteMetricSpace::from_double(3, d);
}

// k distinct rational points on the line.
inline FiniteMetricSpace random_line_metric(std::uint32_t k, std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x6c696e650aULL));
  std::vector<Rational> vals;
  while (vals.size() < k) {
    Rational v(static_cast<long>(rng.next_below(200)), 7);
    bool dup = false;
    for (const auto& x : vals)
      if (x == v) dup = true;
    if (!dup) vals.push_back(v);
  }
  return real_points_space(vals);
}

// ---------------------------------------------------------------- oracle --

// Independent two-point-target oracle: brute force over all proper vertex
// subsets S, evaluating  [ordered cross edge mass] / ((2/m(0)) m(S) m(S^c))
// from the raw edge list alone.  Kept deliberately separate from the library
// quotient code so the two can disagree.
inline Rational min_cut_value_oracle(const WeightedGraph& g) {
  std::uint32_t n = g.vertex_count();
  std::vector<Rational> m(n, Rational(0));
  Rational m_total(0);
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    Rational w = g.edge_weight(ei);
    m[e.u] += w;
    m[e.v] += w;
    m_total += 2 * w;
  }
  Rational best(0);
  bool have = false;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    Rational cross(0);
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
      const Edge& e = g.edges()[ei];
      bool iu = (mask >> e.u) & 1u;
      bool iv = (mask >> e.v) & 1u;
      if (iu != iv) cross += 2 * g.edge_weight(ei);
    }
    Rational ms(0), mc(0);
    for (std::uint32_t v = 0; v < n; ++v) ((mask >> v) & 1u ? ms : mc) += m[v];
    Rational val = cross / (Rational(2) * ms * mc / m_total);
    if (!have || val < best) {
      best = val;
      have = true;
    }
  }
  return best;
}

// ------------------------------------------------------------ CLI runner --

#ifndef SGT_CLI_PATH
#define SGT_CLI_PATH "sgt"
#endif

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

inline std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "sgt_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string temp_file(const std::string& stem) {
  static int counter = 0;
  std::ostringstream name;
  name << stem << "_" << ::getpid() << "_" << counter++ << ".txt";
  return (temp_dir() / name.str()).string();
}

inline std::string write_temp_file(const std::string& stem, const std::string& content) {
  std::string path = temp_file(stem);
  std::ofstream out(path);
  out << content;
  return path;
}

inline std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CliResult run_cli(const std::string& args) {
  CliResult res;
  std::string err_path = temp_file("stderr");
  std::string cmd = std::string(SGT_CLI_PATH) + " " + args + " 2>" + err_path;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t got;
  while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int rc = ::pclose(pipe);
  if (WIFEXITED(rc)) res.status = WEXITSTATUS(rc);
  res.err = slurp_file(err_path);
  std::remove(err_path.c_str());
  return res;
}

}  // namespace sgt::test
