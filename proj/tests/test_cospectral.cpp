#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spti/cospectral.hpp"
#include "spti/enumeration.hpp"
#include "spti/spectral.hpp"

using spti::BigInt;
using spti::IntPolynomial;

namespace {

IntPolynomial poly(std::initializer_list<long long> c) {
  IntPolynomial out;
  for (auto v : c) out.push_back(BigInt(v));
  return out;
}

// Leverrier-Faddeev in exact arithmetic: an independent characteristic
// polynomial route. c_{n-k} = -tr(A M_k) / k with M_1 = I, M_{k+1} = A M_k + c_{n-k} I.
IntPolynomial faddeev(const spti::Graph& g) {
  const int n = g.order();
  using Mat = std::vector<std::vector<BigInt>>;
  Mat m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  IntPolynomial c(n + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    Mat am(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          if (g.adjacent(i, l)) am[i][j] += m[l][j];
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / k;
    for (int i = 0; i < n; ++i) am[i][i] += c[n - k];
    m = std::move(am);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

TEST_CASE("characteristic polynomials by hand") {
  CHECK(spti::characteristic_polynomial(spti::path_graph(3)) == poly({0, -2, 0, 1}));
  // (x-3)(x+1)^3
  CHECK(spti::characteristic_polynomial(spti::complete_graph(4)) == poly({-3, -8, -6, 0, 1}));
  CHECK(spti::characteristic_polynomial(spti::Graph(1, {})) == poly({0, 1}));
  CHECK(spti::to_string(poly({0, -2, 0, 1})) == "x^3 - 2x");
  CHECK(spti::to_string(poly({-3, -8, -6, 0, 1})) == "x^4 - 6x^2 - 8x - 3");
}

TEST_CASE("Bareiss agrees with Leverrier-Faddeev") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + trial % 10, 0.4);
    CHECK(spti::characteristic_polynomial(g) == faddeev(g));
  }
}

TEST_CASE("polynomial roots are the eigenvalues") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_connected(rng, 3 + trial % 6, 0.5);
    const auto p = spti::characteristic_polynomial(g);
    for (double lambda : spti::decompose(g).values) {
      double value = 0.0, scale = 0.0;
      for (std::size_t k = p.size(); k-- > 0;) {
        value = value * lambda + p[k].convert_to<double>();
        scale = scale * std::abs(lambda) + std::abs(p[k].convert_to<double>());
      }
      CHECK(std::abs(value) <= 1e-9 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("cospectral pairs") {
  // The smallest cospectral pair: the star K1,4 and C4 plus an isolated vertex.
  const std::vector<spti::Graph> pair{spti::star_graph(4), spti::Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
  const auto found = spti::cospectral_pairs(pair);
  REQUIRE(found.size() == 1);
  CHECK(found[0].floating_match);
  CHECK(found[0].exact_match);

  const std::vector<spti::Graph> c4p4{spti::cycle_graph(4), spti::path_graph(4)};
  CHECK(spti::cospectral_pairs(c4p4).empty());
  CHECK(spti::cospectral_candidates(c4p4).empty());
}

TEST_CASE("no octane has a cospectral mate") {
  const auto octanes = spti::enumerate_alkane_trees(8);
  CHECK(spti::cospectral_pairs(octanes.graphs).empty());
}
