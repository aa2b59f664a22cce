#ifndef SPTI_COSPECTRAL_HPP
#define SPTI_COSPECTRAL_HPP

#include <span>
#include <string>
#include <vector>

#include "spti/graph.hpp"
#include "spti/indices.hpp"

namespace spti {

/// Integer polynomial, coefficient i multiplies x^i.
using IntPolynomial = std::vector<BigInt>;

/// det(xI - A) computed exactly by fraction-free (Bareiss) elimination over
/// Z[x]. Every pivot is a leading principal minor of xI - A, hence monic and
/// never zero, so no row exchanges are needed and every division is exact.
IntPolynomial characteristic_polynomial(const Graph& g);

std::string to_string(const IntPolynomial& p);

struct CospectralPair {
  std::size_t first = 0;
  std::size_t second = 0;
  bool floating_match = false;  // ascending spectra agree within 1e-9
  bool exact_match = false;     // characteristic polynomials identical
};

inline constexpr double kSpectrumTolerance = 1e-9;

/// Every pair examined both ways. The exact test decides membership; pairs
/// that only the floating test accepts are kept with exact_match == false so
/// callers can report the disagreement.
std::vector<CospectralPair> cospectral_candidates(std::span<const Graph> graphs);

/// Pairs (i < j) whose characteristic polynomials are identical.
std::vector<CospectralPair> cospectral_pairs(std::span<const Graph> graphs);

}  // namespace spti

#endif  // SPTI_COSPECTRAL_HPP
