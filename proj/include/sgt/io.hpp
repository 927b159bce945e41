#pragma once
// Plain-text formats.  Lines starting with '#' are comments, blank lines
// are ignored.  Numbers may be integers, fractions "p/q", or decimal
// literals; everything round-trips exactly because decimals parse to the
// exact rational they spell.
//
//   graph <n> <m>      followed by m lines  "u v weight"
//   metric <k>         followed by k rows of k distances
//   points <k> <dim>   followed by k rows of dim coordinates
//   w <m>              followed by m lines  "u v weight"
//
// The tree generator's level structure survives in a comment line
//   # sgt-meta tree d=<d> r=<r> levels=<l0>,<l1>,...
// which the reader picks back up, so level-dependent edge weights keep
// working on graphs that went through a file.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/metric.hpp"
#include "sgt/path_method.hpp"
#include "sgt/rational.hpp"

namespace sgt {

namespace detail {

struct LineReader {
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next content line, skipping blanks and comments; meta comments are
  // stashed on the side.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') {
        static const std::string tag = "# sgt-meta ";
        if (line.compare(i, tag.size(), tag) == 0) meta_lines.push_back(line.substr(i + tag.size()));
        continue;
      }
      out = line;
      return true;
    }
    return false;
  }

  std::vector<std::string> meta_lines;

 private:
  std::istream& in_;
};

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

inline std::uint64_t parse_uint(const std::string& t, const std::string& what) {
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::ParseError, "expected a nonnegative integer for " + what + ", got '" + t + "'");
  try {
    return std::stoull(t);
  } catch (...) {
    fail(Errc::ParseError, what + " out of range: '" + t + "'");
  }
}

inline double parse_double(const std::string& t, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) fail(Errc::ParseError, "trailing junk in " + what + ": '" + t + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::ParseError, "cannot parse " + what + " '" + t + "'");
  }
}

inline void apply_tree_meta(WeightedGraph& g, const std::vector<std::string>& meta_lines) {
  for (const auto& m : meta_lines) {
    auto ts = tokens(m);
    if (ts.empty() || ts[0] != "tree") continue;
    TreeBallMeta meta;
    bool have_d = false, have_r = false, have_levels = false;
    for (std::size_t i = 1; i < ts.size(); ++i) {
      const std::string& t = ts[i];
      if (t.rfind("d=", 0) == 0) {
        meta.degree = static_cast<std::uint32_t>(parse_uint(t.substr(2), "meta d"));
        have_d = true;
      } else if (t.rfind("r=", 0) == 0) {
        meta.radius = static_cast<std::uint32_t>(parse_uint(t.substr(2), "meta r"));
        have_r = true;
      } else if (t.rfind("levels=", 0) == 0) {
        std::string rest = t.substr(7);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
          std::size_t comma = rest.find(',', pos);
          std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
          meta.level.push_back(static_cast<std::uint32_t>(parse_uint(item, "meta level")));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
        have_levels = true;
      }
    }
    if (have_d && have_r && have_levels && meta.level.size() == g.vertex_count() &&
        meta.degree >= 2)
      g.tree_meta = meta;
  }
}

}  // namespace detail

inline WeightedGraph read_graph(std::istream& in) {
  detail::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) fail(Errc::ParseError, "empty graph file");
  auto head = detail::tokens(line);
  if (head.size() != 3 || head[0] != "graph")
    fail(Errc::ParseError, "expected header 'graph <n> <m>', got '" + line + "'");
  std::uint64_t n = detail::parse_uint(head[1], "vertex count");
  std::uint64_t m = detail::parse_uint(head[2], "edge count");
  std::vector<WeightedEdgeInput> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(line))
      fail(Errc::ParseError, "graph file ends after " + std::to_string(i) + " of " +
                                 std::to_string(m) + " edges");
    auto ts = detail::tokens(line);
    if (ts.size() != 3) fail(Errc::ParseError, "expected 'u v weight', got '" + line + "'");
    WeightedEdgeInput e;
    e.u = static_cast<VertexId>(detail::parse_uint(ts[0], "edge endpoint"));
    e.v = static_cast<VertexId>(detail::parse_uint(ts[1], "edge endpoint"));
    e.weight = parse_rational_or_fail(ts[2], "edge weight");
    edges.push_back(std::move(e));
  }
  if (reader.next(line))
    fail(Errc::ParseError, "unexpected extra line after edge list: '" + line + "'");
  WeightedGraph g = WeightedGraph::build(static_cast<std::size_t>(n), std::move(edges));
  detail::apply_tree_meta(g, reader.meta_lines);
  return g;
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
  if (g.tree_meta) {
    const auto& meta = *g.tree_meta;
    out << "# sgt-meta tree d=" << meta.degree << " r=" << meta.radius << " levels=";
    for (std::size_t i = 0; i < meta.level.size(); ++i) {
      if (i) out << ",";
      out << meta.level[i];
    }
    out << "\n";
  }
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    out << e.u << " " << e.v << " " << to_string(g.edge_weight(ei)) << "\n";
  }
}

inline FiniteMetricSpace read_metric(std::istream& in) {
  detail::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) fail(Errc::ParseError, "empty metric file");
  auto head = detail::tokens(line);
  if (head.size() != 2 || head[0] != "metric")
    fail(Errc::ParseError, "expected header 'metric <k>', got '" + line + "'");
  std::size_t k = static_cast<std::size_t>(detail::parse_uint(head[1], "point count"));
  if (k < 2) fail(Errc::RejectTooSmall, "metric space needs k >= 2 points");
  std::vector<Rational> entries;
  entries.reserve(k * k);
  bool saw_decimal = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!reader.next(line))
      fail(Errc::ParseError, "metric file ends after " + std::to_string(i) + " of " +
                                 std::to_string(k) + " rows");
    auto ts = detail::tokens(line);
    if (ts.size() != k)
      fail(Errc::ParseError, "metric row " + std::to_string(i) + " has " +
                                 std::to_string(ts.size()) + " entries, want " +
                                 std::to_string(k));
    for (const auto& t : ts) {
      if (t.find('.') != std::string::npos) saw_decimal = true;
      entries.push_back(parse_rational_or_fail(t, "distance"));
    }
  }
  if (reader.next(line))
    fail(Errc::ParseError, "unexpected extra line after metric rows: '" + line + "'");
  // Fractions and integers mean the author had exact values in mind;
  // decimal points get the floating-point treatment with tolerances.
  if (!saw_decimal) return FiniteMetricSpace::from_exact(k, std::move(entries));
  std::vector<double> d(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) d[i] = to_double(entries[i]);
  return FiniteMetricSpace::from_double(k, std::move(d));
}

inline void write_metric(std::ostream& out, const FiniteMetricSpace& x) {
  out << "metric " << x.size() << "\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) out << " ";
      if (x.exact())
        out << to_string(x.dist_exact(i, j));
      else {
        std::ostringstream ss;
        ss.precision(17);
        ss << x.dist(i, j);
        out << ss.str();
      }
    }
    out << "\n";
  }
}

inline EuclideanConfig read_points(std::istream& in) {
  detail::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) fail(Errc::ParseError, "empty points file");
  auto head = detail::tokens(line);
  if (head.size() != 3 || head[0] != "points")
    fail(Errc::ParseError, "expected header 'points <k> <dim>', got '" + line + "'");
  std::size_t k = static_cast<std::size_t>(detail::parse_uint(head[1], "point count"));
  std::size_t dim = static_cast<std::size_t>(detail::parse_uint(head[2], "dimension"));
  std::vector<double> coords;
  coords.reserve(k * dim);
  for (std::size_t i = 0; i < k; ++i) {
    if (!reader.next(line))
      fail(Errc::ParseError, "points file ends after " + std::to_string(i) + " of " +
                                 std::to_string(k) + " rows");
    auto ts = detail::tokens(line);
    if (ts.size() != dim)
      fail(Errc::ParseError, "points row " + std::to_string(i) + " has " +
                                 std::to_string(ts.size()) + " coordinates, want " +
                                 std::to_string(dim));
    for (const auto& t : ts) coords.push_back(detail::parse_double(t, "coordinate"));
  }
  if (reader.next(line))
    fail(Errc::ParseError, "unexpected extra line after points rows: '" + line + "'");
  return EuclideanConfig(k, dim, std::move(coords));
}

// Edge weights w given edge by edge.  The support must be exactly the edge
// set of g: unknown edges are rejected, and so are repeats and gaps.
inline EdgeWeightW read_edge_weights(std::istream& in, const WeightedGraph& g) {
  detail::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) fail(Errc::ParseError, "empty w file");
  auto head = detail::tokens(line);
  if (head.size() != 2 || head[0] != "w")
    fail(Errc::ParseError, "expected header 'w <m>', got '" + line + "'");
  std::uint64_t m = detail::parse_uint(head[1], "edge count");
  if (m != g.edge_count())
    fail(Errc::EdgeOutsideSupport, "w file lists " + std::to_string(m) +
                                       " edges, graph has " + std::to_string(g.edge_count()));
  EdgeWeightW ww;
  ww.w.assign(g.edge_count(), Rational(0));
  std::vector<char> seen(g.edge_count(), 0);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(line))
      fail(Errc::ParseError, "w file ends after " + std::to_string(i) + " of " +
                                 std::to_string(m) + " lines");
    auto ts = detail::tokens(line);
    if (ts.size() != 3) fail(Errc::ParseError, "expected 'u v weight', got '" + line + "'");
    VertexId u = static_cast<VertexId>(detail::parse_uint(ts[0], "edge endpoint"));
    VertexId v = static_cast<VertexId>(detail::parse_uint(ts[1], "edge endpoint"));
    std::size_t ei = g.edge_index(u, v);
    if (ei == kNoEdge)
      fail(Errc::EdgeOutsideSupport, "w given for non-edge {" + ts[0] + "," + ts[1] + "}");
    if (seen[ei])
      fail(Errc::RejectDuplicateEdge, "w given twice for edge {" + ts[0] + "," + ts[1] + "}");
    seen[ei] = 1;
    Rational w = parse_rational_or_fail(ts[2], "edge weight");
    if (w <= 0)
      fail(Errc::RejectNonpositiveWeight, "w must be positive on edge {" + ts[0] + "," + ts[1] + "}");
    ww.w[ei] = w;
  }
  if (reader.next(line))
    fail(Errc::ParseError, "unexpected extra line after w list: '" + line + "'");
  return ww;
}

inline void write_edge_weights(std::ostream& out, const WeightedGraph& g,
                               const EdgeWeightW& ww) {
  validate_edge_weights(g, ww);
  out << "w " << g.edge_count() << "\n";
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const Edge& e = g.edges()[ei];
    out << e.u << " " << e.v << " " << to_string(ww.w[ei]) << "\n";
  }
}

// Small content fingerprint used in reports to identify input files.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sgt
