#include "spti/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace spti {

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

double frobenius_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

void rotate(DenseMatrix& a, DenseMatrix& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const int n = a.rows();
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  for (int k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SpectralDecomposition jacobi_eigen(DenseMatrix a, JacobiOptions options) {
  const int n = a.rows();
  DenseMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  const double threshold = options.relative_tolerance * frobenius_norm(a);
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == options.max_sweeps) {
      throw SpectralError("Jacobi eigensolver did not converge within " + std::to_string(options.max_sweeps) +
                          " sweeps");
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweep;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

  SpectralDecomposition out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n);
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.values[j] = a(src, src);
    int lead = 0;
    for (int i = 1; i < n; ++i) {
      if (std::abs(v(i, src)) > std::abs(v(lead, src)) + 1e-12) lead = i;
    }
    const double sign = v(lead, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, src);
  }
  return out;
}

SpectralDecomposition decompose(const Graph& g) { return jacobi_eigen(adjacency_matrix(g)); }

std::vector<double> perron_vector(const SpectralDecomposition& d, const Graph& g) {
  const int n = d.order();
  if (n != g.order()) throw SpectralError("perron_vector: decomposition does not match graph order");
  if (n == 0) throw SpectralError("perron_vector: empty graph");
  std::vector<double> x(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    x[i] = d.vectors(i, n - 1);
    sum += x[i];
  }
  if (sum < 0.0)
    for (auto& xi : x) xi = -xi;
  for (int i = 0; i < n; ++i) {
    if (x[i] <= 1e-12) {
      throw SpectralError("perron_vector: component " + std::to_string(i) +
                          " is not positive (graph disconnected or solver failure)");
    }
  }
  return x;
}

}  // namespace spti
