#include "robustnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "robustnet/connectivity.hpp"
#include "robustnet/errors.hpp"

namespace robustnet {

namespace {

constexpr int kDenseLimit = 2000;   // documented cap for dense exact pipelines
constexpr int kRationalLimit = 64;  // rational resistance solves up to here
constexpr int kJacobiSweeps = 100;

void require_dense_capacity(const Graph& g, const char* op) {
  if (g.vertex_count() > kDenseLimit)
    throw CapacityError(std::string(op) + " refuses n > " + std::to_string(kDenseLimit) +
                        " (dense pipeline)");
}

double frobenius(const std::vector<std::vector<double>>& a) {
  double s = 0;
  for (const auto& row : a)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  double s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

// Cyclic Jacobi for a symmetric matrix; returns ascending eigenvalues.
// Converges when the off-diagonal Frobenius norm drops below 1e-12 * |A|_F.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<double> eig(n, 0.0);
  const double scale = frobenius(a);
  if (scale == 0.0) return eig;
  const double stop = 1e-12 * scale;

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) < stop) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = a[p][p], aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = a[p][i] = c * aip - s * aiq;
          a[i][q] = a[q][i] = s * aip + c * aiq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) >= stop)
    throw NumericError("Jacobi eigensolver did not converge within " +
                       std::to_string(kJacobiSweeps) + " sweeps");
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced Laplacian of the subgraph induced on `vertices`, with the last
// (highest-index) vertex grounded. `index_of` maps graph vertex -> row, -1
// for the ground and vertices outside the component.
RationalMatrix reduced_laplacian(const Graph& g, const std::vector<int>& vertices,
                                 std::vector<int>& index_of) {
  const int k = static_cast<int>(vertices.size()) - 1;  // ground removed
  index_of.assign(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) index_of[vertices[i]] = i;
  RationalMatrix m(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i) m[i][i] = g.degree(vertices[i]);
  for (const Edge& e : g.edges()) {
    const int iu = index_of[e.u], iv = index_of[e.v];
    if (iu >= 0 && iv >= 0) {
      m[iu][iv] -= 1;
      m[iv][iu] -= 1;
    }
  }
  return m;
}

// Gaussian elimination over rationals; the system here is symmetric
// positive definite, so pivots never vanish.
std::vector<Rational> rational_solve(RationalMatrix a, std::vector<Rational> rhs) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    if (a[col][col] == 0) throw NumericError("singular reduced Laplacian");
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n, Rational(0));
  for (int row = n - 1; row >= 0; --row) {
    Rational acc = rhs[row];
    for (int j = row + 1; j < n; ++j) acc -= a[row][j] * x[j];
    x[row] = acc / a[row][row];
  }
  return x;
}

// Full inverse via Gauss-Jordan; used for all-pairs resistance.
RationalMatrix rational_inverse(RationalMatrix a) {
  const int n = static_cast<int>(a.size());
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    if (a[col][col] == 0) throw NumericError("singular reduced Laplacian");
    const Rational pivot = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= pivot;
      inv[col][j] /= pivot;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (int j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// In-place Cholesky (A = L L^T); false when not positive definite.
bool cholesky(std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  for (int j = 0; j < n; ++j) {
    double d = a[j][j];
    for (int k = 0; k < j; ++k) d -= a[j][k] * a[j][k];
    if (d <= 0.0) return false;
    a[j][j] = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
      a[i][j] = s / a[j][j];
    }
  }
  return true;
}

std::vector<double> cholesky_solve(const std::vector<std::vector<double>>& l,
                                   std::vector<double> b) {
  const int n = static_cast<int>(l.size());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) b[i] -= l[i][k] * b[k];
    b[i] /= l[i][i];
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) b[i] -= l[k][i] * b[k];
    b[i] /= l[i][i];
  }
  return b;
}

std::vector<std::vector<double>> reduced_laplacian_double(const Graph& g,
                                                          const std::vector<int>& vertices,
                                                          std::vector<int>& index_of) {
  const int k = static_cast<int>(vertices.size()) - 1;
  index_of.assign(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) index_of[vertices[i]] = i;
  std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) m[i][i] = g.degree(vertices[i]);
  for (const Edge& e : g.edges()) {
    const int iu = index_of[e.u], iv = index_of[e.v];
    if (iu >= 0 && iv >= 0) {
      m[iu][iv] -= 1.0;
      m[iv][iu] -= 1.0;
    }
  }
  return m;
}

}  // namespace

std::vector<std::vector<double>> laplacian(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) l[i][i] = g.degree(i);
  for (const Edge& e : g.edges()) {
    l[e.u][e.v] = -1.0;
    l[e.v][e.u] = -1.0;
  }
  return l;
}

Spectrum spectrum(const Graph& g) {
  require_dense_capacity(g, "spectrum");
  const int n = g.vertex_count();
  Spectrum s;
  s.values = jacobi_eigenvalues(laplacian(g));

  int max_degree = 0;
  for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
  const double tol = 1e-10 * n * std::max(max_degree, 1);
  for (double& x : s.values) {
    if (x > -tol && x < tol) x = 0.0;
  }
  if (n > 0 && s.values.front() != 0.0)
    throw NumericError("smallest Laplacian eigenvalue did not clamp to zero");
  s.zero_multiplicity =
      static_cast<int>(std::count(s.values.begin(), s.values.end(), 0.0));
  return s;
}

double algebraic_connectivity(const Graph& g) {
  if (g.vertex_count() < 2) throw std::domain_error("algebraic connectivity requires n >= 2");
  return spectrum(g).values[1];
}

BigInt spanning_tree_count(const Graph& g) {
  require_dense_capacity(g, "spanning_tree_count");
  const int n = g.vertex_count();
  if (n == 1) return 1;
  if (!is_connected(g)) return 0;

  // (n-1)x(n-1) cofactor of L, last row/column deleted.
  const int d = n - 1;
  std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = g.degree(i);
  for (const Edge& e : g.edges()) {
    if (e.u < d && e.v < d) {
      m[e.u][e.v] -= 1;
      m[e.v][e.u] -= 1;
    }
  }

  // Bareiss fraction-free elimination; all divisions are exact.
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < d; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[d - 1][d - 1];
}

double spanning_tree_count_spectral(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::domain_error("spectral spanning-tree count requires n >= 2");
  Spectrum s = spectrum(g);
  double prod = 1.0;
  for (int i = 1; i < n; ++i) prod *= s.values[i];
  return prod / n;
}

double effective_resistance(const Graph& g, int a, int b) {
  require_dense_capacity(g, "effective_resistance");
  const int n = g.vertex_count();
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::out_of_range("vertex index out of range");
  if (a == b) throw std::invalid_argument("effective resistance requires distinct vertices");
  const std::vector<int> labels = component_labels(g);
  if (labels[a] != labels[b])
    throw InfiniteResistanceError("vertices lie in different components");

  std::vector<int> comp;
  for (int v = 0; v < n; ++v)
    if (labels[v] == labels[a]) comp.push_back(v);

  std::vector<int> index_of;
  if (n <= kRationalLimit) {
    RationalMatrix m = reduced_laplacian(g, comp, index_of);
    std::vector<Rational> rhs(m.size(), Rational(0));
    if (index_of[a] >= 0) rhs[index_of[a]] += 1;
    if (index_of[b] >= 0) rhs[index_of[b]] -= 1;
    std::vector<Rational> v = rational_solve(std::move(m), std::move(rhs));
    const Rational va = index_of[a] >= 0 ? v[index_of[a]] : Rational(0);
    const Rational vb = index_of[b] >= 0 ? v[index_of[b]] : Rational(0);
    return to_double(va - vb);
  }
  auto m = reduced_laplacian_double(g, comp, index_of);
  if (!cholesky(m)) throw NumericError("reduced Laplacian is not positive definite");
  std::vector<double> rhs(m.size(), 0.0);
  if (index_of[a] >= 0) rhs[index_of[a]] += 1.0;
  if (index_of[b] >= 0) rhs[index_of[b]] -= 1.0;
  std::vector<double> v = cholesky_solve(m, std::move(rhs));
  const double va = index_of[a] >= 0 ? v[index_of[a]] : 0.0;
  const double vb = index_of[b] >= 0 ? v[index_of[b]] : 0.0;
  return va - vb;
}

ResistanceResult effective_graph_resistance(const Graph& g) {
  require_dense_capacity(g, "effective_graph_resistance");
  if (!is_connected(g))
    throw InfiniteResistanceError("effective graph resistance is infinite on disconnected graphs");
  const int n = g.vertex_count();
  ResistanceResult r;
  r.pairwise.assign(n, std::vector<double>(n, 0.0));
  r.total = 0;
  if (n == 1) {
    r.exact = true;
    r.total_value = 0;
    r.spectral_total = 0;
    return r;
  }

  std::vector<int> comp(n);
  for (int v = 0; v < n; ++v) comp[v] = v;  // connected: ground is n-1
  std::vector<int> index_of;

  if (n <= kRationalLimit) {
    r.exact = true;
    RationalMatrix inv = rational_inverse(reduced_laplacian(g, comp, index_of));
    auto pair_resistance = [&](int a, int b) -> Rational {
      const int ia = index_of[a], ib = index_of[b];
      if (ia < 0) return inv[ib][ib];
      if (ib < 0) return inv[ia][ia];
      return inv[ia][ia] + inv[ib][ib] - 2 * inv[ia][ib];
    };
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const Rational rab = pair_resistance(a, b);
        r.total += rab;
        r.pairwise[a][b] = r.pairwise[b][a] = to_double(rab);
      }
    }
  } else {
    r.exact = false;
    auto m = reduced_laplacian_double(g, comp, index_of);
    if (!cholesky(m)) throw NumericError("reduced Laplacian is not positive definite");
    const int k = n - 1;
    std::vector<std::vector<double>> inv(k);
    for (int col = 0; col < k; ++col) {
      std::vector<double> e(k, 0.0);
      e[col] = 1.0;
      inv[col] = cholesky_solve(m, std::move(e));
    }
    double total = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const int ia = index_of[a], ib = index_of[b];
        double rab;
        if (ia < 0)
          rab = inv[ib][ib];
        else if (ib < 0)
          rab = inv[ia][ia];
        else
          rab = inv[ia][ia] + inv[ib][ib] - 2.0 * inv[ia][ib];
        r.pairwise[a][b] = r.pairwise[b][a] = rab;
        total += rab;
      }
    }
    r.total = rational_of(total);
  }

  r.total_value = to_double(r.total);
  Spectrum s = spectrum(g);
  double recip = 0;
  for (int i = 1; i < n; ++i) recip += 1.0 / s.values[i];
  r.spectral_total = n * recip;
  if (std::abs(r.total_value - r.spectral_total) >
      1e-9 * std::max(1.0, std::abs(r.total_value)))
    throw NumericError("pairwise and spectral resistance totals disagree");
  return r;
}

}  // namespace robustnet
