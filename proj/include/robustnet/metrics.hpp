#pragma once

#include <string>
#include <vector>

#include "robustnet/graph.hpp"
#include "robustnet/numeric.hpp"

namespace robustnet {

struct DistanceSummary {
  int n = 0;
  bool connected = false;
  std::vector<std::vector<int>> dist;  // hop counts, -1 = unreachable
  ValueState diameter_state = ValueState::undefined;  // undefined when n < 2
  int diameter = 0;                                   // valid when finite
  ValueState avg_state = ValueState::undefined;
  Rational avg_distance;   // valid when finite; exact
  Rational efficiency;     // always finite; reciprocal of unreachable = 0
  BigInt wiener;           // sum of finite pairwise distances
};

/// BFS from every vertex. Averages and diameter report infinity on
/// disconnected graphs and are undefined for n < 2.
DistanceSummary all_pairs_distances(const Graph& g);

/// Whether a source/target pair credits its own endpoints.
enum class EndpointMode { exclude, include_full, include_half };

std::string endpoint_mode_name(EndpointMode mode);
EndpointMode endpoint_mode_from_name(const std::string& name);

struct BetweennessResult {
  EndpointMode mode = EndpointMode::include_full;
  std::vector<Rational> vertex_scores;
  std::vector<Rational> edge_scores;  // parallel to Graph::edges(); mode-independent
  Rational avg_vertex;
  Rational avg_edge;
  Rational max_edge;
  bool exact = true;  // rational-exact for n <= 64, dyadic doubles beyond
};

/// Fractional shortest-path counts accumulated over the per-source BFS
/// predecessor DAG (paths are never enumerated). Throws
/// UndefinedMeasureError on disconnected input.
BetweennessResult betweenness(const Graph& g, EndpointMode mode = EndpointMode::include_full);

struct RelationReport {
  Rational avg_vertex_full;       // measured, include_full
  Rational avg_vertex_predicted;  // (n-1)(avg_distance+1)/2
  Rational avg_edge;              // measured
  Rational avg_edge_predicted;    // n(n-1)/(2m) * avg_distance
  bool vertex_ok = false;
  bool edge_ok = false;
  bool exact = true;
};

/// Verifies the two linear ties between average betweenness and average
/// distance, to 1e-12 relative (exact equality in rational mode).
RelationReport check_betweenness_relations(const Graph& g);

struct ClusteringResult {
  std::vector<Rational> local;  // c_i in [0,1], defined 0 when degree <= 1
  Rational global;              // sum over deg > 1 vertices, divided by n
};

ClusteringResult clustering(const Graph& g);

}  // namespace robustnet
