#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robustnet/graph.hpp"
#include "robustnet/numeric.hpp"

namespace robustnet {

/// All-terminal reliability in the removal-count basis:
/// Rel(p) = sum_i F_i (1-p)^i p^(m-i), where F_i counts the i-edge removal
/// sets that leave the graph connected.
struct ReliabilityPolynomial {
  std::vector<BigInt> coeffs;  // F_0 .. F_m
  int m = 0;                   // edge count of the source graph

  /// Horner-style evaluation; p must lie in [0,1] (std::domain_error).
  double at(double p) const;

  /// Exact expansion into the power basis: result[k] is the coefficient
  /// of p^k in Rel(p).
  std::vector<BigInt> power_coefficients() const;
};

enum class RelStrategy { automatic, enumeration, deletion_contraction };

constexpr int kEnumerationEdgeLimit = 24;
constexpr long long kDeletionContractionBudget = 10'000'000;

/// Exact coefficients. `automatic` enumerates all 2^m edge states when
/// m <= 24 and otherwise runs deletion-contraction on an internal
/// multigraph within `node_budget` recursion nodes. Throws CapacityError
/// (suggesting Monte Carlo) when the budget is exceeded.
ReliabilityPolynomial reliability_coefficients(
    const Graph& g, RelStrategy strategy = RelStrategy::automatic,
    long long node_budget = kDeletionContractionBudget);

/// Rel(p) through the exact coefficients.
double reliability_at(const Graph& g, double p);

struct MonteCarloEstimate {
  double estimate = 0;
  double half_width = 0;  // 95% confidence, 1.96 * sqrt(r(1-r)/trials)
  long long trials = 0;
};

/// Keeps each edge independently with probability p and reports the
/// connected fraction. The stream for trial t depends only on (seed, t),
/// so results are reproducible regardless of scheduling.
MonteCarloEstimate reliability_monte_carlo(const Graph& g, double p, long long trials,
                                           std::uint64_t seed);

enum class ReliabilityOrdering { first_less, second_less, undetermined };

/// Asymptotic rule near p = 1: smaller edge connectivity loses; on equal
/// edge connectivity the larger minimum-cut count s(G) loses. Requires
/// both graphs connected; CapacityError from s(G) propagates.
ReliabilityOrdering compare_near_one(const Graph& g1, const Graph& g2);

/// Asymptotic rule near p = 0: the smaller spanning-tree count loses.
ReliabilityOrdering compare_near_zero(const Graph& g1, const Graph& g2);

/// CSV curve "p,rel" with grid+1 evenly spaced samples, 6-decimal fixed.
std::string reliability_curve_csv(const ReliabilityPolynomial& poly, int grid);

}  // namespace robustnet
