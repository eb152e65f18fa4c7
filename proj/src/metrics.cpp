#include "robustnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "robustnet/connectivity.hpp"
#include "robustnet/errors.hpp"

namespace robustnet {

namespace {

// Above this order, betweenness credits switch from exact rationals to
// doubles (stored as exact dyadic rationals, comparisons at 1e-9).
constexpr int kExactLimit = 64;

struct SourceBfs {
  std::vector<int> dist;
  std::vector<BigInt> sigma;               // shortest-path counts, exact
  std::vector<std::vector<int>> preds;     // DAG predecessors
  std::vector<int> order;                  // BFS discovery order
};

SourceBfs bfs_dag(const Graph& g, int s) {
  const int n = g.vertex_count();
  SourceBfs r;
  r.dist.assign(n, -1);
  r.sigma.assign(n, 0);
  r.preds.assign(n, {});
  r.order.reserve(n);
  r.dist[s] = 0;
  r.sigma[s] = 1;
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    r.order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (r.dist[w] < 0) {
        r.dist[w] = r.dist[v] + 1;
        q.push(w);
      }
      if (r.dist[w] == r.dist[v] + 1) {
        r.sigma[w] += r.sigma[v];
        r.preds[w].push_back(v);
      }
    }
  }
  return r;
}

template <typename Num>
Num ratio(const BigInt& a, const BigInt& b);

template <>
Rational ratio<Rational>(const BigInt& a, const BigInt& b) {
  return Rational(a, b);
}

template <>
double ratio<double>(const BigInt& a, const BigInt& b) {
  return Rational(a, b).convert_to<double>();
}

// One dependency-accumulation pass per source; each unordered pair is seen
// from both endpoints, so totals are halved at the end. Produces
// exclude-mode vertex scores and (mode-independent) edge scores.
template <typename Num>
void accumulate_scores(const Graph& g, std::vector<Num>& vertex_acc,
                       std::vector<Num>& edge_acc) {
  const int n = g.vertex_count();
  vertex_acc.assign(n, Num(0));
  edge_acc.assign(g.edge_count(), Num(0));
  std::vector<Num> delta(n);
  for (int s = 0; s < n; ++s) {
    SourceBfs bfs = bfs_dag(g, s);
    std::fill(delta.begin(), delta.end(), Num(0));
    for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
      const int w = *it;
      for (int v : bfs.preds[w]) {
        Num contrib = ratio<Num>(bfs.sigma[v], bfs.sigma[w]) * (Num(1) + delta[w]);
        edge_acc[g.edge_index(v, w)] += contrib;
        delta[v] += contrib;
      }
      if (w != s) vertex_acc[w] += delta[w];
    }
  }
  for (auto& x : vertex_acc) x /= 2;
  for (auto& x : edge_acc) x /= 2;
}

BetweennessResult finalize(const Graph& g, EndpointMode mode,
                           std::vector<Rational> vertex, std::vector<Rational> edge,
                           bool exact) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Rational endpoint_credit = 0;
  if (mode == EndpointMode::include_full) endpoint_credit = n - 1;
  if (mode == EndpointMode::include_half) endpoint_credit = Rational(n - 1, 2);
  for (auto& b : vertex) b += endpoint_credit;

  BetweennessResult r;
  r.mode = mode;
  r.exact = exact;
  r.vertex_scores = std::move(vertex);
  r.edge_scores = std::move(edge);
  Rational vsum = 0, esum = 0;
  for (const auto& b : r.vertex_scores) vsum += b;
  for (const auto& b : r.edge_scores) esum += b;
  r.avg_vertex = vsum / n;
  r.avg_edge = m > 0 ? esum / m : Rational(0);
  r.max_edge = 0;
  for (const auto& b : r.edge_scores) r.max_edge = std::max(r.max_edge, b);
  return r;
}

}  // namespace

DistanceSummary all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceSummary s;
  s.n = n;
  s.dist.assign(n, std::vector<int>(n, -1));
  s.wiener = 0;
  int max_d = 0;
  bool all_reachable = true;
  Rational inv_sum = 0;
  for (int src = 0; src < n; ++src) {
    SourceBfs bfs = bfs_dag(g, src);
    for (int t = 0; t < n; ++t) {
      s.dist[src][t] = bfs.dist[t];
      if (t <= src) continue;
      if (bfs.dist[t] < 0) {
        all_reachable = false;
      } else {
        s.wiener += bfs.dist[t];
        max_d = std::max(max_d, bfs.dist[t]);
        inv_sum += Rational(1, bfs.dist[t]);
      }
    }
  }
  s.connected = all_reachable;
  const BigInt pairs = BigInt(n) * (n - 1) / 2;
  s.efficiency = n >= 2 ? inv_sum / Rational(pairs) : Rational(0);
  if (n < 2) {
    s.diameter_state = ValueState::undefined;
    s.avg_state = ValueState::undefined;
  } else if (!all_reachable) {
    s.diameter_state = ValueState::infinite;
    s.avg_state = ValueState::infinite;
  } else {
    s.diameter_state = ValueState::finite;
    s.diameter = max_d;
    s.avg_state = ValueState::finite;
    s.avg_distance = Rational(s.wiener) / Rational(pairs);
  }
  return s;
}

std::string endpoint_mode_name(EndpointMode mode) {
  switch (mode) {
    case EndpointMode::exclude: return "exclude";
    case EndpointMode::include_full: return "full";
    case EndpointMode::include_half: return "half";
  }
  return "?";
}

EndpointMode endpoint_mode_from_name(const std::string& name) {
  if (name == "exclude") return EndpointMode::exclude;
  if (name == "full") return EndpointMode::include_full;
  if (name == "half") return EndpointMode::include_half;
  throw std::invalid_argument("unknown betweenness mode '" + name + "'");
}

BetweennessResult betweenness(const Graph& g, EndpointMode mode) {
  if (!is_connected(g))
    throw UndefinedMeasureError("betweenness is undefined on disconnected graphs");
  const int n = g.vertex_count();
  if (n <= kExactLimit) {
    std::vector<Rational> vertex, edge;
    accumulate_scores<Rational>(g, vertex, edge);
    return finalize(g, mode, std::move(vertex), std::move(edge), true);
  }
  std::vector<double> vertex_d, edge_d;
  accumulate_scores<double>(g, vertex_d, edge_d);
  std::vector<Rational> vertex(vertex_d.begin(), vertex_d.end());
  std::vector<Rational> edge(edge_d.begin(), edge_d.end());
  return finalize(g, mode, std::move(vertex), std::move(edge), false);
}

RelationReport check_betweenness_relations(const Graph& g) {
  if (!is_connected(g))
    throw UndefinedMeasureError("betweenness relations are undefined on disconnected graphs");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 2) throw std::domain_error("betweenness relations require n >= 2");
  DistanceSummary d = all_pairs_distances(g);
  BetweennessResult b = betweenness(g, EndpointMode::include_full);

  RelationReport r;
  r.exact = b.exact;
  r.avg_vertex_full = b.avg_vertex;
  r.avg_vertex_predicted = Rational(n - 1, 2) * (d.avg_distance + 1);
  r.avg_edge = b.avg_edge;
  r.avg_edge_predicted = Rational(BigInt(n) * (n - 1), BigInt(2) * m) * d.avg_distance;

  auto close = [&](const Rational& lhs, const Rational& rhs) {
    if (r.exact) return lhs == rhs;
    double a = to_double(lhs), bb = to_double(rhs);
    return std::abs(a - bb) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(bb)});
  };
  r.vertex_ok = close(r.avg_vertex_full, r.avg_vertex_predicted);
  r.edge_ok = close(r.avg_edge, r.avg_edge_predicted);
  return r;
}

ClusteringResult clustering(const Graph& g) {
  const int n = g.vertex_count();
  ClusteringResult r;
  r.local.assign(n, Rational(0));
  Rational sum = 0;
  for (int i = 0; i < n; ++i) {
    const auto& nbrs = g.neighbors(i);
    const int deg = static_cast<int>(nbrs.size());
    if (deg <= 1) continue;
    long long among = 0;  // e_i: edges among the neighbourhood of i
    for (size_t a = 0; a < nbrs.size(); ++a)
      for (size_t b = a + 1; b < nbrs.size(); ++b)
        if (g.has_edge(nbrs[a], nbrs[b])) ++among;
    r.local[i] = Rational(2 * among, static_cast<long long>(deg) * (deg - 1));
    sum += r.local[i];
  }
  r.global = sum / n;
  return r;
}

}  // namespace robustnet
