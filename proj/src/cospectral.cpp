#include "spti/cospectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spti/spectral.hpp"

namespace spti {

namespace {

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

IntPolynomial sub(IntPolynomial a, const IntPolynomial& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient of an exact division by a monic polynomial.
IntPolynomial div_exact(IntPolynomial a, const IntPolynomial& monic) {
  trim(a);
  if (a.empty()) return {};
  const std::size_t db = monic.size() - 1;
  if (a.size() - 1 < db) throw std::logic_error("Bareiss division is not exact");
  IntPolynomial q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const BigInt c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * monic[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("Bareiss division is not exact");
  trim(q);
  return q;
}

}  // namespace

IntPolynomial characteristic_polynomial(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {BigInt(1)};
  // M = xI - A
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (int i = 0; i < n; ++i) {
    m[i][i] = {BigInt(0), BigInt(1)};
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) m[i][j] = {BigInt(-1)};
  }
  IntPolynomial previous{BigInt(1)};
  for (int k = 0; k + 1 < n; ++k) {
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = div_exact(sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j])), previous);
      }
    }
    previous = m[k][k];
  }
  return m[n - 1][n - 1];
}

std::string to_string(const IntPolynomial& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0) continue;
    BigInt c = p[k];
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    if (c < 0) c = -c;
    if (c != 1 || k == 0) out << c;
    if (k > 0) out << 'x';
    if (k > 1) out << '^' << k;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

std::vector<CospectralPair> cospectral_candidates(std::span<const Graph> graphs) {
  std::vector<std::vector<double>> spectra;
  std::vector<IntPolynomial> polys;
  spectra.reserve(graphs.size());
  polys.reserve(graphs.size());
  for (const auto& g : graphs) {
    spectra.push_back(decompose(g).values);
    polys.push_back(characteristic_polynomial(g));
  }
  std::vector<CospectralPair> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      bool floating = spectra[i].size() == spectra[j].size();
      for (std::size_t k = 0; floating && k < spectra[i].size(); ++k) {
        floating = std::abs(spectra[i][k] - spectra[j][k]) <= kSpectrumTolerance;
      }
      const bool exact = polys[i] == polys[j];
      if (floating || exact) out.push_back({i, j, floating, exact});
    }
  }
  return out;
}

std::vector<CospectralPair> cospectral_pairs(std::span<const Graph> graphs) {
  auto all = cospectral_candidates(graphs);
  std::erase_if(all, [](const CospectralPair& p) { return !p.exact_match; });
  return all;
}

}  // namespace spti
