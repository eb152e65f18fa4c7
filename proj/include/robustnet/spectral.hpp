#pragma once

#include <vector>

#include "robustnet/graph.hpp"
#include "robustnet/numeric.hpp"

namespace robustnet {

/// Dense Laplacian: L[i][i] = degree(i), L[i][j] = -1 on edges, 0 otherwise.
std::vector<std::vector<double>> laplacian(const Graph& g);

struct Spectrum {
  std::vector<double> values;  // ascending; values in (-tol, tol) clamped to 0
  int zero_multiplicity = 0;   // equals the number of connected components
};

/// All Laplacian eigenvalues via cyclic Jacobi rotations. Throws
/// NumericError if 100 sweeps do not converge and CapacityError for
/// n > 2000 (dense pipeline limit).
Spectrum spectrum(const Graph& g);

/// Second-smallest Laplacian eigenvalue; 0 iff disconnected. n >= 2.
double algebraic_connectivity(const Graph& g);

/// Exact spanning-tree count: integer determinant of an (n-1)x(n-1)
/// Laplacian cofactor by fraction-free elimination. 0 when disconnected,
/// 1 for trees and the single-vertex graph.
BigInt spanning_tree_count(const Graph& g);

/// Eigenvalue-product form (1/n) * prod of nonzero eigenvalues; diagnostic
/// cross-check for the exact count. n >= 2.
double spanning_tree_count_spectral(const Graph& g);

/// Resistance between a and b with every edge a unit resistor, solved on
/// the grounded reduced Laplacian (ground = highest index in the
/// component). Exact rational elimination for n <= 64, Cholesky beyond.
/// Throws InfiniteResistanceError when a and b lie in different components.
double effective_resistance(const Graph& g, int a, int b);

struct ResistanceResult {
  std::vector<std::vector<double>> pairwise;  // symmetric, zero diagonal
  Rational total;        // sum over pairs; exact when `exact`
  double total_value = 0;
  double spectral_total = 0;  // n * sum of reciprocal nonzero eigenvalues
  bool exact = true;
};

/// Pairwise matrix plus both totals; the two totals are cross-checked to
/// 1e-9 relative (NumericError on disagreement). Throws
/// InfiniteResistanceError on disconnected input.
ResistanceResult effective_graph_resistance(const Graph& g);

}  // namespace robustnet
