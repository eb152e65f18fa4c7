#pragma once

#include <optional>
#include <vector>

#include "robustnet/graph.hpp"

namespace robustnet {

struct ConnectivityReport {
  bool connected = false;
  int kappa_v = 0;  // 0 when disconnected; n-1 for complete graphs
  int kappa_e = 0;  // 0 when disconnected
  std::optional<long long> min_cut_count;  // s(G), only when requested
};

/// True iff every pair of vertices is joined by a path. A single vertex
/// counts as connected.
bool is_connected(const Graph& g);

/// Component id per vertex, ids dense from 0 in order of first discovery.
std::vector<int> component_labels(const Graph& g);

int component_count(const Graph& g);

/// Global minimum edge cut via max-flow with unit capacities from a fixed
/// source to every other vertex. 0 iff disconnected. Requires n >= 2.
int edge_connectivity(const Graph& g);

/// Minimum vertex cut via max-flow on the vertex-split network over the
/// Even-Tarjan candidate pairs; n-1 for complete graphs by convention.
/// 0 iff disconnected. Requires n >= 2.
int vertex_connectivity(const Graph& g);

/// s(G): the number of kappa_e-sized edge sets whose removal disconnects.
/// Exhaustive over C(m, kappa_e) subsets; refuses with CapacityError when
/// that count exceeds 10^6. Requires a connected graph with n >= 2.
long long count_min_edge_cuts(const Graph& g);

ConnectivityReport analyze_connectivity(const Graph& g, bool with_min_cut_count = false);

}  // namespace robustnet
