#include "spti/indices.hpp"

#include <cmath>
#include <numeric>

namespace spti {

std::vector<double> subgraph_centralities(const SpectralDecomposition& d) {
  const int n = d.order();
  std::vector<double> s(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const double w = std::exp(d.values[j]);
    for (int i = 0; i < n; ++i) s[i] += d.vectors(i, j) * d.vectors(i, j) * w;
  }
  return s;
}

std::vector<double> eigenvector_centralities(const SpectralDecomposition& d, const Graph& g) {
  auto x = perron_vector(d, g);
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (auto& xi : x) xi /= total;
  return x;
}

CentralityVector centralities(const SpectralDecomposition& d, const Graph& g) {
  return {subgraph_centralities(d), eigenvector_centralities(d, g)};
}

double index_EE(const SpectralDecomposition& d) {
  double sum = 0.0;
  for (double lambda : d.values) sum += std::exp(lambda);
  return sum / static_cast<double>(d.order());
}

double index_RVa(std::span<const double> s) {
  double sum = 0.0;
  for (double si : s) sum += si * si;
  return std::sqrt(sum / static_cast<double>(s.size()));
}

double index_RVb(std::span<const double> s, std::span<const double> x) {
  if (s.size() != x.size()) throw std::invalid_argument("index_RVb: size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) sum += x[i] * s[i];
  return sum;
}

double index_J(const Graph& g) {
  if (!g.is_connected()) throw GraphError("index_J: graph is disconnected");
  const auto d = distasums(g);
  const double m = g.size();
  const double n = g.order();
  double sum = 0.0;
  for (const auto& e : g.edges()) {
    sum += 1.0 / std::sqrt(static_cast<double>(d[e.u]) * static_cast<double>(d[e.v]));
  }
  return m / (m - n + 2.0) * sum;
}

std::vector<BigInt> walk_counts(const Graph& g, int k) {
  if (k < 0 || k > 64) throw std::invalid_argument("walk_counts: k must lie in [0, 64]");
  const int n = g.order();
  std::vector<BigInt> out(n);
  // Column i of A^k is A^k e_i; its i-th entry is omega_k(v_i).
  std::vector<BigInt> cur(n), next(n);
  for (int i = 0; i < n; ++i) {
    std::fill(cur.begin(), cur.end(), BigInt(0));
    cur[i] = 1;
    for (int step = 0; step < k; ++step) {
      for (int v = 0; v < n; ++v) {
        next[v] = 0;
        for (int w : g.neighbors(v)) next[v] += cur[w];
      }
      std::swap(cur, next);
    }
    out[i] = cur[i];
  }
  return out;
}

std::vector<double> subgraph_centrality_series(const Graph& g, int terms) {
  if (terms < 1) throw std::invalid_argument("subgraph_centrality_series: need at least one term");
  const int n = g.order();
  std::vector<double> s(n, 0.0);
  // Walk the powers incrementally: diag(A^k) for every k from one pass per vertex.
  std::vector<BigInt> cur(n), next(n);
  for (int i = 0; i < n; ++i) {
    std::fill(cur.begin(), cur.end(), BigInt(0));
    cur[i] = 1;
    double factorial = 1.0;
    for (int k = 0; k <= terms; ++k) {
      if (k > 0) {
        for (int v = 0; v < n; ++v) {
          next[v] = 0;
          for (int w : g.neighbors(v)) next[v] += cur[w];
        }
        std::swap(cur, next);
        factorial *= k;
      }
      s[i] += cur[i].convert_to<double>() / factorial;
    }
  }
  return s;
}

IndexValues compute_indices(const Graph& g) {
  const auto d = decompose(g);
  const auto c = centralities(d, g);
  return {index_J(g), index_EE(d), index_RVa(c.s), index_RVb(c.s, c.x)};
}

}  // namespace spti
