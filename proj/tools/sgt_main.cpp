// Command line front-end for the spectral gap toolkit.
//
// Subcommands: gen, mu1, path-bound, gap-exact, gap-search, quotient,
// formula, report.  Everything prints deterministic JSON (reports also CSV)
// so runs can be diffed byte for byte.  Errors come out as a single JSON
// line on stderr with exit code 2 (bad input), 3 (cap exhausted), or 4
// (internal inconsistency).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgt/sgt.hpp"

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) sgt::fail(sgt::Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) sgt::fail(sgt::Errc::InvalidArgument, "cannot open '" + out_path + "' for writing");
  out << bytes;
}

sgt::WeightedGraph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return sgt::read_graph(in);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// self | two:DELTA | line:v1,v2,... | path to a metric file
sgt::FiniteMetricSpace resolve_metric(const std::string& spec,
                                      const sgt::WeightedGraph* g) {
  if (spec == "self") {
    if (!g) sgt::fail(sgt::Errc::InvalidArgument, "metric 'self' needs a graph");
    return sgt::graph_metric_space(*g);
  }
  if (spec.rfind("two:", 0) == 0)
    return sgt::two_point_space(sgt::parse_rational_or_fail(spec.substr(4), "delta"));
  if (spec.rfind("line:", 0) == 0) {
    std::vector<sgt::Rational> values;
    for (const auto& item : split(spec.substr(5), ','))
      values.push_back(sgt::parse_rational_or_fail(item, "line point"));
    return sgt::real_points_space(values);
  }
  std::istringstream in(slurp(spec));
  return sgt::read_metric(in);
}

sgt::PointMap parse_map(const std::string& spec) {
  sgt::PointMap f;
  for (const auto& item : split(spec, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      sgt::fail(sgt::Errc::InvalidArgument, "map entries must be point indices, got '" + item + "'");
    try {
      f.to.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (...) {
      sgt::fail(sgt::Errc::InvalidArgument, "map entry out of range: '" + item + "'");
    }
  }
  return f;
}

std::size_t env_size_cap() {
  const char* v = std::getenv("SGT_SIZE_CAP");
  if (!v) return sgt::kDefaultSizeCap;
  std::string s(v);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    sgt::fail(sgt::Errc::InvalidArgument, "SGT_SIZE_CAP must be a nonnegative integer, got '" + s + "'");
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (...) {
    sgt::fail(sgt::Errc::InvalidArgument, "SGT_SIZE_CAP out of range: '" + s + "'");
  }
}

void print_json(const ordered_json& doc, const std::string& out_path) {
  write_output(out_path, doc.dump(2) + "\n");
}

ordered_json exact_or_null(const std::optional<sgt::Rational>& v) {
  return v ? ordered_json(sgt::to_string(*v)) : ordered_json(nullptr);
}

struct GenOptions {
  std::string family;
  std::uint32_t n = 0, d = 0, r = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenOptions& o) {
  std::size_t cap = env_size_cap();
  std::optional<sgt::WeightedGraph> g;
  if (o.family == "hamming") {
    g = sgt::gen_hamming(o.n, cap);
  } else if (o.family == "tree") {
    g = sgt::gen_tree_ball(o.d, o.r, cap);
  } else if (o.family == "path") {
    g = sgt::gen_path(o.n, cap);
  } else if (o.family == "cycle") {
    g = sgt::gen_cycle(o.n, cap);
  } else if (o.family == "complete") {
    g = sgt::gen_complete(o.n, cap);
  } else if (o.family == "random-regular") {
    g = sgt::gen_random_regular(o.n, o.d, o.seed, cap);
  } else {
    sgt::fail(sgt::Errc::InvalidArgument, "unknown family '" + o.family + "'");
  }
  std::ostringstream ss;
  sgt::write_graph(ss, *g);
  write_output(o.out, ss.str());
  return 0;
}

struct Mu1Options {
  std::string graph;
  bool full = false;
  std::size_t solver_cap = sgt::kDefaultSolverCap;
  std::string out;
};

int run_mu1(const Mu1Options& o) {
  sgt::WeightedGraph g = load_graph(o.graph);
  sgt::Spectrum s = sgt::laplacian_spectrum(g, o.solver_cap);
  ordered_json doc;
  doc["mu1"] = s.mu1;
  if (o.full) doc["eigenvalues"] = s.eigenvalues;
  print_json(doc, o.out);
  return 0;
}

struct PathBoundOptions {
  std::string graph;
  std::string paths = "bfs";
  std::string w = "uniform";
  bool reverse_pairs = false;
  bool profile = false;
  std::string out;
};

int run_path_bound(const PathBoundOptions& o) {
  sgt::WeightedGraph g = load_graph(o.graph);

  sgt::PathAssignment pa = [&] {
    if (o.paths == "bfs") return sgt::bfs_paths(g, o.reverse_pairs);
    if (o.paths == "tree") return sgt::tree_geodesic_paths(g);
    if (o.paths == "bitfix") return sgt::hamming_bitfix_paths(g);
    sgt::fail(sgt::Errc::InvalidArgument, "unknown path strategy '" + o.paths + "'");
  }();
  sgt::EdgeWeightW ww = [&] {
    if (o.w == "uniform") return sgt::uniform_edge_weights(g);
    if (o.w == "tree-exp") return sgt::tree_exponential_weights(g);
    if (o.w.rfind("file:", 0) == 0) {
      std::istringstream in(slurp(o.w.substr(5)));
      return sgt::read_edge_weights(in, g);
    }
    sgt::fail(sgt::Errc::InvalidArgument, "unknown w choice '" + o.w + "'");
  }();

  sgt::CongestionResult res = sgt::congestion_A(g, ww, pa);
  sgt::Rational bound = res.lower_bound();
  ordered_json doc;
  doc["A"] = sgt::to_double(res.a_value);
  doc["A_exact"] = sgt::to_string(res.a_value);
  doc["bound"] = sgt::to_double(bound);
  doc["bound_exact"] = sgt::to_string(bound);
  doc["argmax_edge"] = {res.argmax.from, res.argmax.to};
  doc["paths"] = o.paths;
  doc["w"] = o.w;
  if (o.reverse_pairs) doc["reverse_pairs"] = true;
  if (o.profile) {
    doc["profile"] = ordered_json::array();
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei)
      for (int dir = 0; dir < 2; ++dir) {
        const sgt::Edge& e = g.edges()[ei];
        ordered_json item;
        item["from"] = dir == 0 ? e.u : e.v;
        item["to"] = dir == 0 ? e.v : e.u;
        item["A_e"] = sgt::to_double(res.profile[2 * ei + dir]);
        item["A_e_exact"] = sgt::to_string(res.profile[2 * ei + dir]);
        doc["profile"].push_back(std::move(item));
      }
  }
  print_json(doc, o.out);
  return 0;
}

struct GapOptions {
  std::string graph;
  std::string metric;
  std::uint64_t cap = sgt::kDefaultMapCap;
  std::uint64_t seed = 1;
  std::uint32_t restarts = 8;
  std::uint32_t max_sweeps = 100;
  std::string out;
};

ordered_json gap_result_json(const sgt::WeightedGraph& g,
                             const sgt::FiniteMetricSpace& x, const sgt::GapResult& r) {
  sgt::QuotientValue q = sgt::poincare_quotient(g, x, r.witness);
  ordered_json doc;
  doc["value"] = r.value;
  doc["value_exact"] = exact_or_null(r.value_exact);
  doc["witness"] = r.witness.to;
  doc["method"] = r.method;
  doc["numerator"] = q.numerator;
  doc["denominator"] = q.denominator;
  doc["numerator_exact"] = exact_or_null(q.numerator_exact);
  doc["denominator_exact"] = exact_or_null(q.denominator_exact);
  doc["maps_examined"] = r.maps_examined;
  return doc;
}

int run_gap_exact(const GapOptions& o) {
  sgt::WeightedGraph g = load_graph(o.graph);
  sgt::FiniteMetricSpace x = resolve_metric(o.metric, &g);
  sgt::GapResult r = sgt::gap_exact(g, x, o.cap);
  print_json(gap_result_json(g, x, r), o.out);
  return 0;
}

int run_gap_search(const GapOptions& o) {
  sgt::WeightedGraph g = load_graph(o.graph);
  sgt::FiniteMetricSpace x = resolve_metric(o.metric, &g);
  sgt::GapResult r = sgt::gap_search(g, x, o.seed, o.restarts, o.max_sweeps);
  ordered_json doc = gap_result_json(g, x, r);
  doc["seed"] = r.seed;
  doc["restarts"] = r.restarts;
  print_json(doc, o.out);
  return 0;
}

struct QuotientOptions {
  std::string graph;
  std::string metric;
  std::string map;
  std::string out;
};

int run_quotient(const QuotientOptions& o) {
  sgt::WeightedGraph g = load_graph(o.graph);
  sgt::FiniteMetricSpace x = resolve_metric(o.metric, &g);
  sgt::PointMap f = parse_map(o.map);
  sgt::QuotientValue q = sgt::poincare_quotient(g, x, f);
  ordered_json doc;
  doc["value"] = q.ratio;
  doc["value_exact"] = exact_or_null(q.ratio_exact);
  doc["numerator"] = q.numerator;
  doc["denominator"] = q.denominator;
  doc["numerator_exact"] = exact_or_null(q.numerator_exact);
  doc["denominator_exact"] = exact_or_null(q.denominator_exact);
  print_json(doc, o.out);
  return 0;
}

struct FormulaOptions {
  std::string name;
  std::string params;
  std::string out;
};

int run_formula(const FormulaOptions& o) {
  std::uint32_t n = 0, d = 0, r = 0;
  double mu1v = -1, distortion = -1;
  bool have_n = false, have_d = false, have_r = false, have_mu1 = false, have_dist = false;
  if (!o.params.empty())
    for (const auto& item : split(o.params, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        sgt::fail(sgt::Errc::InvalidArgument, "parameter '" + item + "' is not key=value");
      std::string key = item.substr(0, eq), val = item.substr(eq + 1);
      try {
        if (key == "n") { n = static_cast<std::uint32_t>(std::stoul(val)); have_n = true; }
        else if (key == "d") { d = static_cast<std::uint32_t>(std::stoul(val)); have_d = true; }
        else if (key == "r") { r = static_cast<std::uint32_t>(std::stoul(val)); have_r = true; }
        else if (key == "mu1") { mu1v = std::stod(val); have_mu1 = true; }
        else if (key == "distortion") { distortion = std::stod(val); have_dist = true; }
        else sgt::fail(sgt::Errc::InvalidArgument, "unknown parameter '" + key + "'");
      } catch (const sgt::Error&) {
        throw;
      } catch (...) {
        sgt::fail(sgt::Errc::InvalidArgument, "cannot parse value in '" + item + "'");
      }
    }

  auto need = [&](bool have, const char* what) {
    if (!have)
      sgt::fail(sgt::Errc::InvalidArgument,
                std::string("formula '") + o.name + "' needs parameter " + what);
  };

  ordered_json doc;
  doc["name"] = o.name;
  doc["parameters"] = o.params;
  if (o.name == "hamming-identity") {
    need(have_n, "n");
    sgt::Rational v = sgt::hamming_identity_value(n);
    doc["value"] = sgt::to_double(v);
    doc["value_exact"] = sgt::to_string(v);
  } else if (o.name == "prop32-lower") {
    need(have_d, "d"); need(have_r, "r");
    sgt::Rational v = sgt::prop32_lower(d, r);
    doc["value"] = sgt::to_double(v);
    doc["value_exact"] = sgt::to_string(v);
  } else if (o.name == "prop33-upper") {
    need(have_d, "d"); need(have_r, "r");
    sgt::Rational v = sgt::prop33_upper(d, r);
    doc["value"] = sgt::to_double(v);
    doc["value_exact"] = sgt::to_string(v);
  } else if (o.name == "pn-mu1") {
    need(have_n, "n");
    doc["value"] = sgt::pn_mu1(n);
    doc["value_exact"] = nullptr;
  } else if (o.name == "izeki-lower") {
    need(have_mu1, "mu1"); need(have_dist, "distortion");
    doc["value"] = sgt::izeki_lower_bound(mu1v, distortion);
    doc["value_exact"] = nullptr;
  } else if (o.name == "bourgain-ratio") {
    need(have_n, "n");
    doc["value"] = sgt::bourgain_ratio_bound(n);
    doc["value_exact"] = nullptr;
  } else {
    sgt::fail(sgt::Errc::InvalidArgument, "unknown formula '" + o.name + "'");
  }
  print_json(doc, o.out);
  return 0;
}

struct ReportOptions {
  std::string graph;
  std::string family;
  std::uint32_t n = 0, d = 0, r = 0;
  std::string target = "self";
  std::string bounds = "auto";
  std::string paths;
  std::string w;
  bool reverse_pairs = false;
  std::uint64_t seed = 1;
  std::uint32_t restarts = 8;
  std::uint32_t max_sweeps = 100;
  std::uint64_t cap = sgt::kDefaultMapCap;
  std::string format = "json";
  bool timings = false;
  std::string out;
};

int run_report(const ReportOptions& o) {
  if (o.graph.empty() == o.family.empty())
    sgt::fail(sgt::Errc::InvalidArgument, "give exactly one of --graph and --family");

  sgt::ReportRequest req;
  req.seed = o.seed;
  req.restarts = o.restarts;
  req.max_sweeps = o.max_sweeps;
  req.map_cap = o.cap;
  req.timings = o.timings;
  req.reverse_pairs = o.reverse_pairs;

  std::optional<sgt::WeightedGraph> g;
  std::size_t cap = env_size_cap();
  if (!o.family.empty()) {
    if (o.family == "hamming") {
      g = sgt::gen_hamming(o.n, cap);
      req.family = sgt::GraphFamily::hamming;
      req.graph_desc = "hamming(n=" + std::to_string(o.n) + ")";
    } else if (o.family == "tree") {
      g = sgt::gen_tree_ball(o.d, o.r, cap);
      req.family = sgt::GraphFamily::tree;
      req.graph_desc = "tree(d=" + std::to_string(o.d) + ",r=" + std::to_string(o.r) + ")";
    } else if (o.family == "path") {
      g = sgt::gen_path(o.n, cap);
      req.family = sgt::GraphFamily::path;
      req.graph_desc = "path(n=" + std::to_string(o.n) + ")";
    } else if (o.family == "cycle") {
      g = sgt::gen_cycle(o.n, cap);
      req.family = sgt::GraphFamily::cycle;
      req.graph_desc = "cycle(n=" + std::to_string(o.n) + ")";
    } else if (o.family == "complete") {
      g = sgt::gen_complete(o.n, cap);
      req.family = sgt::GraphFamily::complete;
      req.graph_desc = "complete(n=" + std::to_string(o.n) + ")";
    } else if (o.family == "random-regular") {
      g = sgt::gen_random_regular(o.n, o.d, o.seed, cap);
      req.family = sgt::GraphFamily::random_regular;
      req.graph_desc = "random-regular(n=" + std::to_string(o.n) +
                       ",d=" + std::to_string(o.d) + ",seed=" + std::to_string(o.seed) + ")";
    } else {
      sgt::fail(sgt::Errc::InvalidArgument, "unknown family '" + o.family + "'");
    }
    req.family_n = o.n;
    req.family_d = o.d;
    req.family_r = o.r;
  } else {
    std::string content = slurp(o.graph);
    std::istringstream in(content);
    g = sgt::read_graph(in);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(sgt::fnv1a64(content)));
    req.graph_desc = "file:" + o.graph + "#" + buf;
  }

  req.target_is_self = (o.target == "self");
  sgt::FiniteMetricSpace target = resolve_metric(o.target, &*g);
  req.target_desc = o.target;

  if (o.bounds != "auto") {
    req.auto_bounds = false;
    if (o.bounds != "all") {
      req.want_mu1 = req.want_closed_forms = req.want_path_bound = req.want_gap_exact =
          req.want_gap_search = req.want_identity = req.want_cut =
              req.want_reference_curve = false;
      for (const auto& item : split(o.bounds, ',')) {
        if (item == "mu1") req.want_mu1 = true;
        else if (item == "closed-forms") req.want_closed_forms = true;
        else if (item == "path") req.want_path_bound = true;
        else if (item == "gap-exact") req.want_gap_exact = true;
        else if (item == "gap-search") req.want_gap_search = true;
        else if (item == "identity") req.want_identity = true;
        else if (item == "cut") req.want_cut = true;
        else if (item == "curve") req.want_reference_curve = true;
        else sgt::fail(sgt::Errc::InvalidArgument, "unknown bound '" + item + "'");
      }
    }
  }

  if (!o.paths.empty()) {
    if (o.paths == "bfs") req.paths = sgt::PathStrategy::bfs;
    else if (o.paths == "tree") req.paths = sgt::PathStrategy::tree;
    else if (o.paths == "bitfix") req.paths = sgt::PathStrategy::bitfix;
    else sgt::fail(sgt::Errc::InvalidArgument, "unknown path strategy '" + o.paths + "'");
  }
  if (!o.w.empty()) {
    if (o.w == "uniform") req.w = sgt::WStrategy::uniform;
    else if (o.w == "tree-exp") req.w = sgt::WStrategy::tree_exp;
    else if (o.w.rfind("file:", 0) == 0) {
      std::istringstream in(slurp(o.w.substr(5)));
      req.w_from_file = sgt::read_edge_weights(in, *g);
      req.w = sgt::WStrategy::file;
    } else {
      sgt::fail(sgt::Errc::InvalidArgument, "unknown w choice '" + o.w + "'");
    }
  }

  sgt::BoundReport rep = sgt::run_report(*g, target, req);
  sgt::ReportFormat fmt;
  if (o.format == "json") fmt = sgt::ReportFormat::json;
  else if (o.format == "csv") fmt = sgt::ReportFormat::csv;
  else sgt::fail(sgt::Errc::InvalidArgument, "unknown format '" + o.format + "'");
  write_output(o.out, sgt::emit(rep, fmt));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral gap toolkit"};
  app.set_version_flag("--version", std::string(sgt::kVersion));
  app.require_subcommand(1);

  GenOptions gen_o;
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->add_option("--family", gen_o.family,
                  "hamming | tree | path | cycle | complete | random-regular")
      ->required();
  gen->add_option("--n", gen_o.n, "size parameter (dimension / edge count / vertices)");
  gen->add_option("--d", gen_o.d, "degree parameter");
  gen->add_option("--r", gen_o.r, "radius parameter");
  gen->add_option("--seed", gen_o.seed, "seed for random families");
  gen->add_option("--out", gen_o.out, "output file (default stdout)");

  Mu1Options mu1_o;
  auto* mu1c = app.add_subcommand("mu1", "first positive Laplacian eigenvalue");
  mu1c->add_option("--graph", mu1_o.graph, "graph file")->required();
  mu1c->add_flag("--full", mu1_o.full, "also print the full spectrum");
  mu1c->add_option("--solver-cap", mu1_o.solver_cap, "dense solver vertex cap");
  mu1c->add_option("--out", mu1_o.out, "output file (default stdout)");

  PathBoundOptions pb_o;
  auto* pb = app.add_subcommand("path-bound", "congestion lower bound 1/A(w)");
  pb->add_option("--graph", pb_o.graph, "graph file")->required();
  pb->add_option("--paths", pb_o.paths, "bfs | tree | bitfix (default bfs)");
  pb->add_option("--w", pb_o.w, "uniform | tree-exp | file:PATH (default uniform)");
  pb->add_flag("--reverse-pairs", pb_o.reverse_pairs,
               "derive gamma(y,x) by reversing gamma(x,y) (bfs only)");
  pb->add_flag("--profile", pb_o.profile, "include per-oriented-edge congestion");
  pb->add_option("--out", pb_o.out, "output file (default stdout)");

  GapOptions ge_o;
  auto* ge = app.add_subcommand("gap-exact", "exhaustive nonlinear spectral gap");
  ge->add_option("--graph", ge_o.graph, "graph file")->required();
  ge->add_option("--metric", ge_o.metric, "self | two:DELTA | line:v1,v2,... | metric file")
      ->required();
  ge->add_option("--cap", ge_o.cap, "map-count budget (default 10^7)");
  ge->add_option("--out", ge_o.out, "output file (default stdout)");

  GapOptions gs_o;
  auto* gs = app.add_subcommand("gap-search", "seeded local-search upper bound");
  gs->add_option("--graph", gs_o.graph, "graph file")->required();
  gs->add_option("--metric", gs_o.metric, "self | two:DELTA | line:v1,v2,... | metric file")
      ->required();
  gs->add_option("--seed", gs_o.seed, "search seed (default 1)");
  gs->add_option("--restarts", gs_o.restarts, "random restarts (default 8)");
  gs->add_option("--max-sweeps", gs_o.max_sweeps, "sweep budget per restart (default 100)");
  gs->add_option("--out", gs_o.out, "output file (default stdout)");

  QuotientOptions q_o;
  auto* qc = app.add_subcommand("quotient", "Poincare quotient of one map");
  qc->add_option("--graph", q_o.graph, "graph file")->required();
  qc->add_option("--metric", q_o.metric, "self | two:DELTA | line:v1,v2,... | metric file")
      ->required();
  qc->add_option("--map", q_o.map, "comma-separated point index per vertex")->required();
  qc->add_option("--out", q_o.out, "output file (default stdout)");

  FormulaOptions f_o;
  auto* fc = app.add_subcommand("formula", "closed-form values");
  fc->add_option("name", f_o.name,
                 "hamming-identity | prop32-lower | prop33-upper | pn-mu1 | "
                 "izeki-lower | bourgain-ratio")
      ->required();
  fc->add_option("--params", f_o.params, "key=value list, e.g. d=3,r=2");
  fc->add_option("--out", f_o.out, "output file (default stdout)");

  ReportOptions r_o;
  auto* rc = app.add_subcommand("report", "bound collection for one graph and target");
  rc->add_option("--graph", r_o.graph, "graph file (alternative to --family)");
  rc->add_option("--family", r_o.family, "generate the graph in-process");
  rc->add_option("--n", r_o.n, "family size parameter");
  rc->add_option("--d", r_o.d, "family degree parameter");
  rc->add_option("--r", r_o.r, "family radius parameter");
  rc->add_option("--target", r_o.target, "self | two:DELTA | line:... | metric file");
  rc->add_option("--bounds", r_o.bounds,
                 "auto | all | list of mu1,closed-forms,path,gap-exact,gap-search,"
                 "identity,cut,curve");
  rc->add_option("--paths", r_o.paths, "path strategy override");
  rc->add_option("--w", r_o.w, "w choice override");
  rc->add_flag("--reverse-pairs", r_o.reverse_pairs, "reverse bfs pair paths");
  rc->add_option("--seed", r_o.seed, "seed for search and random families");
  rc->add_option("--restarts", r_o.restarts, "gap-search restarts");
  rc->add_option("--max-sweeps", r_o.max_sweeps, "gap-search sweep budget");
  rc->add_option("--cap", r_o.cap, "gap-exact map-count budget");
  rc->add_option("--format", r_o.format, "json | csv (default json)");
  rc->add_flag("--timings", r_o.timings, "include runtime_ms per entry");
  rc->add_option("--out", r_o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    ordered_json err;
    err["error"] = "InvalidArgument";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_o);
    if (mu1c->parsed()) return run_mu1(mu1_o);
    if (pb->parsed()) return run_path_bound(pb_o);
    if (ge->parsed()) return run_gap_exact(ge_o);
    if (gs->parsed()) return run_gap_search(gs_o);
    if (qc->parsed()) return run_quotient(q_o);
    if (fc->parsed()) return run_formula(f_o);
    if (rc->parsed()) return run_report(r_o);
  } catch (const sgt::Error& e) {
    ordered_json err;
    err["error"] = sgt::errc_name(e.code());
    err["message"] = e.message();
    std::cerr << err.dump() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 4;
  }
  return 0;
}
