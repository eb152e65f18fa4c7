#include "robustnet/reliability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "robustnet/connectivity.hpp"
#include "robustnet/disjoint_set.hpp"
#include "robustnet/errors.hpp"
#include "robustnet/spectral.hpp"

namespace robustnet {

namespace {

// ---- deletion-contraction on an internal multigraph ----------------------

// Edge bundle: multiplicity parallel unit edges between u and v. Bundles
// exist only here; the public surface stays simple-graph.
struct Bundle {
  int u, v, multiplicity;
};

struct Multigraph {
  int n = 0;
  std::vector<Bundle> bundles;
};

bool multigraph_connected(const Multigraph& g) {
  if (g.n <= 1) return true;
  DisjointSet ds(g.n);
  for (const Bundle& b : g.bundles) ds.unite(b.u, b.v);
  return ds.components() == 1;
}

// Polynomials in q = 1 - p with exact integer coefficients.
using Poly = std::vector<BigInt>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// p * q^k where p is a polynomial: shift by k.
Poly poly_shift(const Poly& a, int k) {
  if (a.empty()) return a;
  Poly out(a.size() + k, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
  return out;
}

// (1 - q^k) * a
Poly poly_survival_times(const Poly& a, int k) {
  Poly shifted = poly_shift(a, k);
  Poly out(std::max(a.size(), shifted.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < shifted.size(); ++i) out[i] -= shifted[i];
  return out;
}

Multigraph contract(const Multigraph& g, size_t bundle_idx) {
  const Bundle target = g.bundles[bundle_idx];
  // Merge the higher label into the lower, then compact labels.
  const int keep = std::min(target.u, target.v);
  const int gone = std::max(target.u, target.v);
  const auto relabel = [&](int x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
  Multigraph out;
  out.n = g.n - 1;
  std::vector<std::pair<std::pair<int, int>, int>> acc;
  for (size_t i = 0; i < g.bundles.size(); ++i) {
    if (i == bundle_idx) continue;
    const int u = relabel(g.bundles[i].u);
    const int v = relabel(g.bundles[i].v);
    if (u == v) continue;  // self-loop after contraction never disconnects; drop
    acc.push_back({{std::min(u, v), std::max(u, v)}, g.bundles[i].multiplicity});
  }
  std::sort(acc.begin(), acc.end());
  for (const auto& [pair, mult] : acc) {
    if (!out.bundles.empty() && out.bundles.back().u == pair.first &&
        out.bundles.back().v == pair.second) {
      out.bundles.back().multiplicity += mult;
    } else {
      out.bundles.push_back({pair.first, pair.second, mult});
    }
  }
  return out;
}

Multigraph remove_bundle(const Multigraph& g, size_t bundle_idx) {
  Multigraph out;
  out.n = g.n;
  out.bundles.reserve(g.bundles.size() - 1);
  for (size_t i = 0; i < g.bundles.size(); ++i)
    if (i != bundle_idx) out.bundles.push_back(g.bundles[i]);
  return out;
}

struct DcContext {
  long long nodes = 0;
  long long budget = 0;
};

// Rel = (1 - q^k) Rel(G/e) + q^k Rel(G - e); a bundle whose removal
// disconnects contributes only the contraction branch.
Poly dc_recurse(const Multigraph& g, DcContext& ctx) {
  if (++ctx.nodes > ctx.budget)
    throw CapacityError("deletion-contraction budget exceeded; use Monte Carlo estimation");
  if (g.n == 1) return Poly{BigInt(1)};
  if (!multigraph_connected(g)) return Poly{};

  // Prefer the fattest bundle; contracting it collapses the most mass.
  size_t pick = 0;
  for (size_t i = 1; i < g.bundles.size(); ++i)
    if (g.bundles[i].multiplicity > g.bundles[pick].multiplicity) pick = i;
  const int k = g.bundles[pick].multiplicity;

  Poly contracted = dc_recurse(contract(g, pick), ctx);
  Poly result = poly_survival_times(contracted, k);
  Multigraph without = remove_bundle(g, pick);
  if (multigraph_connected(without)) {
    Poly deleted = dc_recurse(without, ctx);
    result = poly_add(result, poly_shift(deleted, k));
  }
  return result;
}

// Change basis from Rel(q) = sum r_j q^j to the removal counts F_i via the
// triangular system r_j = sum_{i<=j} (-1)^(j-i) C(m-i, j-i) F_i.
std::vector<BigInt> poly_to_removal_counts(const Poly& r, int m) {
  std::vector<BigInt> f(m + 1, BigInt(0));
  for (int j = 0; j <= m; ++j) {
    BigInt acc = j < static_cast<int>(r.size()) ? r[j] : BigInt(0);
    for (int i = 0; i < j; ++i) {
      const BigInt term = binomial(m - i, j - i) * f[i];
      if ((j - i) % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    f[j] = acc;
  }
  return f;
}

ReliabilityPolynomial coefficients_enumeration(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > kEnumerationEdgeLimit)
    throw CapacityError("subset enumeration limited to m <= " +
                        std::to_string(kEnumerationEdgeLimit) + " edges");
  ReliabilityPolynomial poly;
  poly.m = m;
  poly.coeffs.assign(m + 1, BigInt(0));
  const auto& edges = g.edges();
  const std::uint32_t states = 1u << m;
  for (std::uint32_t kept = 0;; ++kept) {
    const int kept_count = std::popcount(kept);
    if (kept_count >= n - 1) {  // fewer edges can never span n vertices
      DisjointSet ds(n);
      for (int e = 0; e < m; ++e)
        if (kept & (1u << e)) ds.unite(edges[e].u, edges[e].v);
      if (ds.components() == 1) poly.coeffs[m - kept_count] += 1;
    }
    if (kept + 1 == states || m == 0) break;
  }
  return poly;
}

ReliabilityPolynomial coefficients_deletion_contraction(const Graph& g,
                                                        long long node_budget) {
  const int m = g.edge_count();
  Multigraph mg;
  mg.n = g.vertex_count();
  for (const Edge& e : g.edges()) mg.bundles.push_back({e.u, e.v, 1});
  DcContext ctx{0, node_budget};
  Poly rel_q = dc_recurse(mg, ctx);
  ReliabilityPolynomial poly;
  poly.m = m;
  poly.coeffs = poly_to_removal_counts(rel_q, m);
  return poly;
}

// splitmix64; the stream for one trial is fully determined by (seed, trial).
inline std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

double ReliabilityPolynomial::at(double p) const {
  if (p < 0.0 || p > 1.0) throw std::domain_error("probability must lie in [0,1]");
  const double q = 1.0 - p;
  double result = coeffs[m].convert_to<double>();
  double p_power = 1.0;
  for (int i = m - 1; i >= 0; --i) {
    p_power *= p;
    result = result * q + coeffs[i].convert_to<double>() * p_power;
  }
  return result;
}

std::vector<BigInt> ReliabilityPolynomial::power_coefficients() const {
  // Expand sum_i F_i (1-p)^i p^(m-i) term by term.
  std::vector<BigInt> out(m + 1, BigInt(0));
  for (int i = 0; i <= m; ++i) {
    if (coeffs[i] == 0) continue;
    for (int j = 0; j <= i; ++j) {
      const BigInt term = binomial(i, j) * coeffs[i];
      const int power = m - i + j;
      if (j % 2 == 0)
        out[power] += term;
      else
        out[power] -= term;
    }
  }
  return out;
}

ReliabilityPolynomial reliability_coefficients(const Graph& g, RelStrategy strategy,
                                               long long node_budget) {
  switch (strategy) {
    case RelStrategy::enumeration:
      return coefficients_enumeration(g);
    case RelStrategy::deletion_contraction:
      return coefficients_deletion_contraction(g, node_budget);
    case RelStrategy::automatic:
      if (g.edge_count() <= kEnumerationEdgeLimit) return coefficients_enumeration(g);
      return coefficients_deletion_contraction(g, node_budget);
  }
  throw std::logic_error("unreachable");
}

double reliability_at(const Graph& g, double p) {
  return reliability_coefficients(g).at(p);
}

MonteCarloEstimate reliability_monte_carlo(const Graph& g, double p, long long trials,
                                           std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("probability must lie in [0,1]");
  if (trials < 1) throw std::domain_error("trials must be positive");
  const int n = g.vertex_count();
  const auto& edges = g.edges();

  auto run_range = [&](long long begin, long long end) -> long long {
    long long connected_count = 0;
    for (long long t = begin; t < end; ++t) {
      std::uint64_t state = seed + static_cast<std::uint64_t>(t);
      DisjointSet ds(n);
      for (const Edge& e : edges)
        if (uniform01(mix64(state)) < p) ds.unite(e.u, e.v);
      if (ds.components() == 1) ++connected_count;
    }
    return connected_count;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const long long chunk_target = 20'000;
  const int workers =
      static_cast<int>(std::min<long long>(hw, std::max<long long>(1, trials / chunk_target)));
  long long connected_total = 0;
  if (workers <= 1) {
    connected_total = run_range(0, trials);
  } else {
    std::vector<long long> counts(workers, 0);
    std::vector<std::thread> pool;
    const long long per = trials / workers;
    for (int w = 0; w < workers; ++w) {
      const long long begin = w * per;
      const long long end = w + 1 == workers ? trials : begin + per;
      pool.emplace_back([&, w, begin, end] { counts[w] = run_range(begin, end); });
    }
    for (auto& th : pool) th.join();
    for (long long c : counts) connected_total += c;
  }

  MonteCarloEstimate est;
  est.trials = trials;
  est.estimate = static_cast<double>(connected_total) / static_cast<double>(trials);
  est.half_width = 1.96 * std::sqrt(est.estimate * (1.0 - est.estimate) /
                                    static_cast<double>(trials));
  return est;
}

ReliabilityOrdering compare_near_one(const Graph& g1, const Graph& g2) {
  if (!is_connected(g1) || !is_connected(g2))
    throw std::domain_error("near-one comparison requires connected graphs");
  const int k1 = edge_connectivity(g1);
  const int k2 = edge_connectivity(g2);
  if (k1 < k2) return ReliabilityOrdering::first_less;
  if (k2 < k1) return ReliabilityOrdering::second_less;
  const long long s1 = count_min_edge_cuts(g1);
  const long long s2 = count_min_edge_cuts(g2);
  if (s1 > s2) return ReliabilityOrdering::first_less;
  if (s2 > s1) return ReliabilityOrdering::second_less;
  return ReliabilityOrdering::undetermined;
}

ReliabilityOrdering compare_near_zero(const Graph& g1, const Graph& g2) {
  if (!is_connected(g1) || !is_connected(g2))
    throw std::domain_error("near-zero comparison requires connected graphs");
  const BigInt t1 = spanning_tree_count(g1);
  const BigInt t2 = spanning_tree_count(g2);
  if (t1 < t2) return ReliabilityOrdering::first_less;
  if (t2 < t1) return ReliabilityOrdering::second_less;
  return ReliabilityOrdering::undetermined;
}

std::string reliability_curve_csv(const ReliabilityPolynomial& poly, int grid) {
  if (grid < 1) throw std::domain_error("grid must be positive");
  std::string out = "p,rel\n";
  char line[64];
  for (int i = 0; i <= grid; ++i) {
    const double p = static_cast<double>(i) / grid;
    std::snprintf(line, sizeof(line), "%.6f,%.6f\n", p, poly.at(p));
    out += line;
  }
  return out;
}

}  // namespace robustnet
