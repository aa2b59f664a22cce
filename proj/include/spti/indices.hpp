#ifndef SPTI_INDICES_HPP
#define SPTI_INDICES_HPP

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spti/graph.hpp"
#include "spti/spectral.hpp"

namespace spti {

using BigInt = boost::multiprecision::cpp_int;

/// Per-vertex subgraph centralities s and eigenvector centralities x (sum 1).
struct CentralityVector {
  std::vector<double> s;
  std::vector<double> x;
};

/// s_i = sum_j (u_j^i)^2 exp(lambda_j).
std::vector<double> subgraph_centralities(const SpectralDecomposition& d);

/// Perron vector rescaled so its entries sum to 1.
std::vector<double> eigenvector_centralities(const SpectralDecomposition& d, const Graph& g);

CentralityVector centralities(const SpectralDecomposition& d, const Graph& g);

/// Mean of exp(lambda_i). This is the Estrada index divided by n.
double index_EE(const SpectralDecomposition& d);
/// Root-mean-square of the subgraph centralities.
double index_RVa(std::span<const double> s);
/// Sum of x_i * s_i.
double index_RVb(std::span<const double> s, std::span<const double> x);
/// Average distance-sum connectivity J. Requires a connected graph.
double index_J(const Graph& g);

/// Closed walks of length k at every vertex, i.e. the diagonal of A^k, in
/// exact integer arithmetic. Requires k <= 64.
std::vector<BigInt> walk_counts(const Graph& g, int k);

/// Truncated walk series sum_{k=0}^{K} omega_k(v_i) / k!. An independent route
/// to subgraph_centralities that never touches eigenvectors.
std::vector<double> subgraph_centrality_series(const Graph& g, int terms);

inline constexpr int kSeriesTerms = 40;

struct IndexValues {
  double J = 0.0;
  double EE = 0.0;
  double RVa = 0.0;
  double RVb = 0.0;
};

/// All four indices for a connected graph.
IndexValues compute_indices(const Graph& g);

}  // namespace spti

#endif  // SPTI_INDICES_HPP
