#pragma once
// Bound reports: run a selection of estimators against one graph and one
// target, collect named entries, sanity-check that lower bounds stay below
// exact values stay below upper bounds, and serialize.
//
// Entries carry both a decimal value and, when the computation was exact,
// the rational as a string, so downstream comparisons do not have to trust
// floating point.

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/formulas.hpp"
#include "sgt/graph.hpp"
#include "sgt/metric.hpp"
#include "sgt/nonlinear_gap.hpp"
#include "sgt/path_method.hpp"
#include "sgt/rational.hpp"
#include "sgt/spectrum.hpp"
#include "sgt/version.hpp"

namespace sgt {

enum class BoundKind { lower, upper, exact, reference };

inline const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
    case BoundKind::reference: return "reference";
  }
  return "?";
}

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::reference;
  double value = 0;
  std::optional<Rational> value_exact;
  std::string method;
  std::string parameters;
  std::optional<double> runtime_ms;
};

struct BoundReport {
  std::string graph;   // family descriptor or file path + content hash
  std::string target;  // target descriptor
  std::string tool_version = kVersion;
  std::optional<std::uint64_t> seed;
  std::vector<BoundEntry> entries;
};

enum class PathStrategy { bfs, tree, bitfix };
enum class WStrategy { uniform, tree_exp, file };

inline const char* path_strategy_name(PathStrategy s) {
  switch (s) {
    case PathStrategy::bfs: return "bfs";
    case PathStrategy::tree: return "tree";
    case PathStrategy::bitfix: return "bitfix";
  }
  return "?";
}

inline const char* w_strategy_name(WStrategy s) {
  switch (s) {
    case WStrategy::uniform: return "uniform";
    case WStrategy::tree_exp: return "tree-exp";
    case WStrategy::file: return "file";
  }
  return "?";
}

enum class GraphFamily { none, hamming, tree, path, cycle, complete, random_regular };

// Which entries to compute.  `auto_bounds` trims the selection to what is
// cheap and applicable (gap-exact only when the map space fits the cap,
// identity only against the self target, and so on); an explicit selection
// is taken literally and any resulting error propagates.
struct ReportRequest {
  bool want_mu1 = true;
  bool want_closed_forms = true;
  bool want_path_bound = true;
  bool want_gap_exact = true;
  bool want_gap_search = true;
  bool want_identity = true;
  bool want_cut = true;
  bool want_reference_curve = true;
  bool auto_bounds = true;

  std::optional<PathStrategy> paths;  // default: per family
  std::optional<WStrategy> w;
  std::optional<EdgeWeightW> w_from_file;
  bool reverse_pairs = false;

  std::uint64_t seed = 1;
  std::uint32_t restarts = 8;
  std::uint32_t max_sweeps = 100;
  std::uint64_t map_cap = kDefaultMapCap;
  std::size_t solver_cap = kDefaultSolverCap;
  bool timings = false;

  GraphFamily family = GraphFamily::none;
  std::uint32_t family_n = 0;  // hamming dim, path/cycle/complete n, regular n
  std::uint32_t family_d = 0;
  std::uint32_t family_r = 0;

  std::string graph_desc;
  std::string target_desc;
  bool target_is_self = false;
};

namespace detail {

class EntryTimer {
 public:
  explicit EntryTimer(bool enabled) : enabled_(enabled) {
    if (enabled_) start_ = std::chrono::steady_clock::now();
  }
  void stamp(BoundEntry& e) const {
    if (!enabled_) return;
    auto dt = std::chrono::steady_clock::now() - start_;
    e.runtime_ms = std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

template <typename Fn>
void run_entry(std::vector<BoundEntry>& out, const std::string& name, bool timings,
               Fn&& fn) {
  EntryTimer timer(timings);
  BoundEntry e;
  e.name = name;
  try {
    fn(e);
  } catch (const Error& err) {
    throw Error(err.code(), "entry " + name + ": " + err.message());
  }
  timer.stamp(e);
  out.push_back(std::move(e));
}

inline void set_exact(BoundEntry& e, const Rational& v) {
  e.value_exact = v;
  e.value = to_double(v);
}

}  // namespace detail

// The sandwich: no lower bound may exceed an exact value or an upper bound,
// and no exact value may exceed an upper bound.  A violation is a bug in a
// bound, never something to paper over.
inline void check_bound_consistency(const BoundReport& rep) {
  for (const auto& lo : rep.entries)
    for (const auto& hi : rep.entries) {
      bool lower_vs_rest = lo.kind == BoundKind::lower &&
                           (hi.kind == BoundKind::exact || hi.kind == BoundKind::upper);
      bool exact_vs_upper = lo.kind == BoundKind::exact && hi.kind == BoundKind::upper;
      if ((lower_vs_rest || exact_vs_upper) && lo.value > hi.value + 1e-9)
        fail(Errc::InconsistentBounds,
             lo.name + " (" + bound_kind_name(lo.kind) + " " + std::to_string(lo.value) +
                 ") exceeds " + hi.name + " (" + bound_kind_name(hi.kind) + " " +
                 std::to_string(hi.value) + ")");
    }
}

inline BoundReport run_report(const WeightedGraph& g, const FiniteMetricSpace& target,
                              const ReportRequest& req) {
  BoundReport rep;
  rep.graph = req.graph_desc;
  rep.target = req.target_desc;
  rep.seed = req.seed;

  const std::size_t n = g.vertex_count();
  const std::size_t k = target.size();

  PathStrategy paths = req.paths.value_or(
      req.family == GraphFamily::tree     ? PathStrategy::tree
      : req.family == GraphFamily::hamming ? PathStrategy::bitfix
                                            : PathStrategy::bfs);
  WStrategy wkind = req.w.value_or(req.family == GraphFamily::tree
                                       ? WStrategy::tree_exp
                                       : WStrategy::uniform);

  bool gap_exact_fits = bigint_pow(BigInt(k), static_cast<unsigned>(n)) <= req.map_cap;

  if (req.want_mu1)
    detail::run_entry(rep.entries, "mu1", req.timings, [&](BoundEntry& e) {
      e.kind = BoundKind::reference;
      e.method = "dense-eigensolver";
      e.value = mu1(g, req.solver_cap);
    });

  if (req.want_closed_forms) {
    if (req.family == GraphFamily::hamming)
      detail::run_entry(rep.entries, "hamming_identity", req.timings, [&](BoundEntry& e) {
        e.kind = req.target_is_self ? BoundKind::upper : BoundKind::reference;
        e.method = "closed-form";
        e.parameters = "n=" + std::to_string(req.family_n);
        detail::set_exact(e, hamming_identity_value(req.family_n));
      });
    if (req.family == GraphFamily::tree && req.family_d >= 3) {
      detail::run_entry(rep.entries, "tree_lower_closed_form", req.timings,
                        [&](BoundEntry& e) {
                          e.kind = BoundKind::lower;
                          e.method = "closed-form";
                          e.parameters = "d=" + std::to_string(req.family_d) +
                                         ",r=" + std::to_string(req.family_r);
                          detail::set_exact(e, prop32_lower(req.family_d, req.family_r));
                        });
      detail::run_entry(rep.entries, "tree_cut_closed_form", req.timings,
                        [&](BoundEntry& e) {
                          e.kind = BoundKind::upper;
                          e.method = "closed-form";
                          e.parameters = "d=" + std::to_string(req.family_d) +
                                         ",r=" + std::to_string(req.family_r);
                          detail::set_exact(e, prop33_upper(req.family_d, req.family_r));
                        });
    }
    if (req.family == GraphFamily::path)
      detail::run_entry(rep.entries, "path_mu1_closed_form", req.timings,
                        [&](BoundEntry& e) {
                          e.kind = BoundKind::lower;
                          e.method = "closed-form";
                          e.parameters = "n=" + std::to_string(req.family_n);
                          e.value = pn_mu1(req.family_n);
                        });
  }

  if (req.want_path_bound)
    detail::run_entry(rep.entries, "path_congestion", req.timings, [&](BoundEntry& e) {
      e.kind = BoundKind::lower;
      e.method = "path-method";
      e.parameters = std::string("paths=") + path_strategy_name(paths) +
                     ",w=" + w_strategy_name(wkind) +
                     (req.reverse_pairs ? ",reverse-pairs" : "");
      PathAssignment pa = paths == PathStrategy::tree  ? tree_geodesic_paths(g)
                          : paths == PathStrategy::bitfix ? hamming_bitfix_paths(g)
                                                          : bfs_paths(g, req.reverse_pairs);
      EdgeWeightW ww = wkind == WStrategy::file      ? *req.w_from_file
                       : wkind == WStrategy::tree_exp ? tree_exponential_weights(g)
                                                      : uniform_edge_weights(g);
      detail::set_exact(e, path_method_lower_bound(g, ww, pa));
    });

  if (req.want_gap_exact && (!req.auto_bounds || gap_exact_fits))
    detail::run_entry(rep.entries, "gap_exact", req.timings, [&](BoundEntry& e) {
      e.kind = BoundKind::exact;
      e.method = "exhaustive";
      e.parameters = "cap=" + std::to_string(req.map_cap);
      GapResult r = gap_exact(g, target, req.map_cap);
      e.value = r.value;
      e.value_exact = r.value_exact;
    });

  if (req.want_gap_search)
    detail::run_entry(rep.entries, "gap_search", req.timings, [&](BoundEntry& e) {
      e.kind = BoundKind::upper;
      e.method = "local-search";
      e.parameters = "seed=" + std::to_string(req.seed) +
                     ",restarts=" + std::to_string(req.restarts);
      GapResult r = gap_search(g, target, req.seed, req.restarts, req.max_sweeps);
      e.value = r.value;
      e.value_exact = r.value_exact;
    });

  if (req.want_identity && (!req.auto_bounds || req.target_is_self))
    detail::run_entry(rep.entries, "identity_map", req.timings, [&](BoundEntry& e) {
      if (!req.target_is_self)
        fail(Errc::DomainError, "identity bound only applies to the self target");
      e.kind = BoundKind::upper;
      e.method = "identity-map";
      QuotientValue q = identity_upper_bound(g);
      e.value = q.ratio;
      e.value_exact = q.ratio_exact;
    });

  if (req.want_cut && (!req.auto_bounds || g.tree_meta))
    detail::run_entry(rep.entries, "center_cut", req.timings, [&](BoundEntry& e) {
      e.kind = BoundKind::upper;
      e.method = "center-edge-cut";
      e.parameters = "delta=1";
      QuotientValue q = cut_quotient(g, center_edge_component(g), Rational(1));
      e.value = q.ratio;
      e.value_exact = q.ratio_exact;
    });

  if (req.want_reference_curve)
    detail::run_entry(rep.entries, "log_curve", req.timings, [&](BoundEntry& e) {
      e.kind = BoundKind::reference;
      e.method = "closed-form";
      e.parameters = "unit-constant";
      e.value = bourgain_ratio_bound(n);
    });

  check_bound_consistency(rep);

  return rep;
}

enum class ReportFormat { json, csv };

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

inline std::string double_repr(double v) { return nlohmann::json(v).dump(); }

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const BoundReport& rep) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["tool_version"] = rep.tool_version;
  doc["graph"] = rep.graph;
  doc["target"] = rep.target;
  if (rep.seed) doc["seed"] = *rep.seed;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : rep.entries) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["kind"] = bound_kind_name(e.kind);
    j["value"] = e.value;
    j["value_exact"] = e.value_exact ? nlohmann::ordered_json(to_string(*e.value_exact))
                                     : nlohmann::ordered_json(nullptr);
    j["method"] = e.method;
    j["parameters"] = e.parameters;
    if (e.runtime_ms) j["runtime_ms"] = *e.runtime_ms;
    doc["entries"].push_back(std::move(j));
  }
  return doc;
}

inline std::string emit(const BoundReport& rep, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(rep).dump(2) + "\n";

  bool timings = false;
  for (const auto& e : rep.entries) timings = timings || e.runtime_ms.has_value();
  std::ostringstream out;
  out << "name,kind,value,value_exact,method,parameters";
  if (timings) out << ",runtime_ms";
  out << "\n";
  for (const auto& e : rep.entries) {
    out << detail::csv_field(e.name) << "," << bound_kind_name(e.kind) << ","
        << detail::double_repr(e.value) << ","
        << (e.value_exact ? detail::csv_field(to_string(*e.value_exact)) : "") << ","
        << detail::csv_field(e.method) << "," << detail::csv_field(e.parameters);
    if (timings)
      out << "," << (e.runtime_ms ? detail::double_repr(*e.runtime_ms) : "");
    out << "\n";
  }
  return out.str();
}

}  // namespace sgt
