#pragma once

#include <map>
#include <string>
#include <vector>

#include "robustnet/graph.hpp"
#include "robustnet/metrics.hpp"
#include "robustnet/numeric.hpp"
#include "robustnet/reliability.hpp"

#include <nlohmann/json_fwd.hpp>

namespace robustnet {

// One report cell: a finite number (exact rational where available, plus a
// double view), infinity, an undefined measure, or a per-measure failure.
struct MeasureValue {
  ValueState state = ValueState::undefined;
  bool has_exact = false;
  Rational exact;     // valid when has_exact
  double value = 0;   // valid when finite
  std::string note;   // reason when failed

  static MeasureValue from_rational(const Rational& r);
  static MeasureValue from_double(double v);
  static MeasureValue from_int(long long v);
  static MeasureValue infinite();
  static MeasureValue undefined();
  static MeasureValue failed(const std::string& reason);
};

/// All thirteen scalar measures for one graph, with the table conventions
/// for disconnected inputs: kappa_v = kappa_e = 0, diameter and average
/// distance and resistance infinite, betweenness undefined, trees 0.
struct MeasureReport {
  std::string name;
  int n = 0;
  int m = 0;
  bool connected = false;
  int kappa_v = 0;
  int kappa_e = 0;
  MeasureValue diameter;
  MeasureValue avg_distance;
  MeasureValue efficiency;
  MeasureValue max_edge_betweenness;
  MeasureValue avg_vertex_betweenness;
  MeasureValue avg_edge_betweenness;
  EndpointMode bt_mode = EndpointMode::include_full;
  MeasureValue clustering;
  MeasureValue algebraic_connectivity;
  MeasureValue spanning_trees;
  MeasureValue effective_resistance;
};

/// Computes every measure, trapping per-measure capacity/numeric failures
/// so one oversized computation does not sink the rest of the report.
MeasureReport compute_measures(const Graph& g, EndpointMode mode,
                               const std::string& name = "");

nlohmann::json report_to_json(const MeasureReport& r);
std::string report_to_table(const MeasureReport& r);

enum class Verdict { first, second, tie };

struct MeasureComparison {
  std::string measure;
  std::string first_value;
  std::string second_value;
  Verdict more_robust = Verdict::tie;
};

/// Per-measure robustness verdicts (each measure's better direction is
/// fixed), plus the asymptotic reliability orderings near p = 1 and p = 0
/// when both graphs are connected.
std::vector<MeasureComparison> compare_graphs(const Graph& a, const Graph& b,
                                              EndpointMode mode);

struct EdgeSuggestion {
  Edge edge;
  std::map<std::string, double> deltas;  // signed value change per measure
  double before = 0;                     // selected measure on g
  double after = 0;                      // selected measure on g + edge
  double improvement = 0;                // direction-adjusted, > 0 is better
  int rank = 0;
};

/// Ranks every absent edge by the robustness gain of the selected measure
/// (one of the thirteen report names, or "relpoly@P"). Ties break on the
/// lexicographically smallest (u,v). top_k <= 0 keeps all candidates.
std::vector<EdgeSuggestion> suggest_edges(const Graph& g, const std::string& measure,
                                          int top_k, EndpointMode mode);

/// Names accepted by suggest_edges and used as comparison/report keys.
const std::vector<std::string>& measure_names();

}  // namespace robustnet
