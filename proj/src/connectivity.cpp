#include "robustnet/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "robustnet/disjoint_set.hpp"
#include "robustnet/errors.hpp"
#include "robustnet/numeric.hpp"

namespace robustnet {

namespace {

// Unit-capacity max-flow with BFS augmentation. Each augmenting path adds
// one unit, so the loop runs at most min(deg(s), deg(t)) times here.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes) {}

  void add_arc(int from, int to, int cap, int reverse_cap) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, reverse_cap});
  }

  // Stops early once the flow reaches `enough` (the running minimum cannot
  // improve past it).
  int max_flow(int s, int t, int enough) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < enough) {
      std::fill(via.begin(), via.end(), -1);
      via[s] = -2;
      std::queue<int> bfs;
      bfs.push(s);
      while (!bfs.empty() && via[t] == -1) {
        int v = bfs.front();
        bfs.pop();
        for (int idx : head_[v]) {
          const Arc& a = arcs_[idx];
          if (a.cap > 0 && via[a.to] == -1) {
            via[a.to] = idx;
            bfs.push(a.to);
          }
        }
      }
      if (via[t] == -1) break;
      int bottleneck = std::numeric_limits<int>::max();
      for (int v = t; v != s;) {
        const Arc& a = arcs_[via[v]];
        bottleneck = std::min(bottleneck, a.cap);
        v = arcs_[via[v] ^ 1].to;
      }
      for (int v = t; v != s;) {
        arcs_[via[v]].cap -= bottleneck;
        arcs_[via[v] ^ 1].cap += bottleneck;
        v = arcs_[via[v] ^ 1].to;
      }
      flow += bottleneck;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs_;  // paired: arc 2k and its reverse 2k+1
  std::vector<std::vector<int>> head_;
};

int edge_flow(const Graph& g, int s, int t, int enough) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) net.add_arc(e.u, e.v, 1, 1);
  return net.max_flow(s, t, enough);
}

// Vertex-split network: vertex x becomes in(x)=2x -> out(x)=2x+1 with unit
// capacity; every edge gets two arcs of effectively unbounded capacity.
int vertex_flow(const Graph& g, int a, int b, int enough) {
  const int n = g.vertex_count();
  FlowNetwork net(2 * n);
  for (int x = 0; x < n; ++x) net.add_arc(2 * x, 2 * x + 1, 1, 0);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, n, 0);
    net.add_arc(2 * e.v + 1, 2 * e.u, n, 0);
  }
  return net.max_flow(2 * a + 1, 2 * b, enough);
}

bool is_complete(const Graph& g) {
  const long long n = g.vertex_count();
  return 2LL * g.edge_count() == n * (n - 1);
}

}  // namespace

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || component_count(g) == 1;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

int edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::domain_error("edge connectivity requires n >= 2");
  if (!is_connected(g)) return 0;
  int best = g.min_degree();
  for (int t = 1; t < n && best > 0; ++t)
    best = std::min(best, edge_flow(g, 0, t, best));
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::domain_error("vertex connectivity requires n >= 2");
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;

  // Even-Tarjan candidates: a minimum vertex cut either avoids a (then some
  // vertex on the far side is a non-neighbor of a) or contains a (then two
  // of a's neighbors end up in different components and are non-adjacent).
  int a = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(a)) a = v;
  int best = g.min_degree();
  for (int b = 0; b < n && best > 0; ++b)
    if (b != a && !g.has_edge(a, b)) best = std::min(best, vertex_flow(g, a, b, best));
  const auto& nbrs = g.neighbors(a);
  for (size_t i = 0; i < nbrs.size() && best > 0; ++i)
    for (size_t j = i + 1; j < nbrs.size() && best > 0; ++j)
      if (!g.has_edge(nbrs[i], nbrs[j]))
        best = std::min(best, vertex_flow(g, nbrs[i], nbrs[j], best));
  return best;
}

long long count_min_edge_cuts(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 2) throw std::domain_error("minimum-cut count requires n >= 2");
  if (!is_connected(g)) throw std::domain_error("minimum-cut count requires a connected graph");
  const int k = edge_connectivity(g);
  if (binomial(m, k) > 1'000'000)
    throw CapacityError("C(" + std::to_string(m) + ", " + std::to_string(k) +
                        ") minimum-cut candidates exceed the enumeration budget");

  const auto& edges = g.edges();
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  long long count = 0;
  while (true) {
    std::vector<char> removed(m, 0);
    for (int idx : pick) removed[idx] = 1;
    DisjointSet ds(n);
    for (int e = 0; e < m; ++e)
      if (!removed[e]) ds.unite(edges[e].u, edges[e].v);
    if (ds.components() > 1) ++count;

    // next k-combination of {0..m-1} in lexicographic order
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return count;
}

ConnectivityReport analyze_connectivity(const Graph& g, bool with_min_cut_count) {
  ConnectivityReport report;
  report.connected = is_connected(g);
  if (report.connected && g.vertex_count() >= 2) {
    report.kappa_v = vertex_connectivity(g);
    report.kappa_e = edge_connectivity(g);
    if (with_min_cut_count) report.min_cut_count = count_min_edge_cuts(g);
  }
  return report;
}

}  // namespace robustnet
