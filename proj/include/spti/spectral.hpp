#ifndef SPTI_SPECTRAL_HPP
#define SPTI_SPECTRAL_HPP

#include <stdexcept>
#include <vector>

#include "spti/graph.hpp"

namespace spti {

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-major dense square matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int rows() const noexcept { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

DenseMatrix adjacency_matrix(const Graph& g);

/// Eigenvalues ascending; column j of `vectors` is the unit eigenvector for
/// values[j]. Each column is signed so that its largest-magnitude entry is
/// positive; entries within 1e-12 of each other tie and the lowest row wins.
struct SpectralDecomposition {
  std::vector<double> values;
  DenseMatrix vectors;

  int order() const noexcept { return static_cast<int>(values.size()); }
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Converged once the
/// off-diagonal Frobenius norm drops below tolerance times the Frobenius norm
/// of the input. Throws SpectralError when the sweep cap is hit first.
SpectralDecomposition jacobi_eigen(DenseMatrix a, JacobiOptions options = {});

SpectralDecomposition decompose(const Graph& g);

/// Unit eigenvector of the largest eigenvalue, all entries positive.
/// Throws SpectralError if any entry is <= 1e-12, which happens for
/// disconnected graphs.
std::vector<double> perron_vector(const SpectralDecomposition& d, const Graph& g);

}  // namespace spti

#endif  // SPTI_SPECTRAL_HPP
