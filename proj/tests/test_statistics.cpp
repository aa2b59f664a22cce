#include <doctest.h>

#include <random>

#include "spti/statistics.hpp"

using doctest::Approx;

TEST_CASE("competition ranking with tie groups") {
  const std::vector<double> v{3.0, 1.0, 2.0, 1.0 + 1e-12, 5.0};
  const auto r = spti::rank_by(v);
  CHECK(r.position == std::vector<int>{4, 1, 3, 1, 5});
  REQUIRE(r.groups.size() == 4);
  CHECK(r.groups[0] == std::vector<std::size_t>{1, 3});
  CHECK(spti::rank_by(std::vector<double>{7.0}).position == std::vector<int>{1});
  CHECK(spti::rank_by(std::vector<double>{}).groups.empty());
}

TEST_CASE("ranking is invariant under positive scaling") {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> u(1.0, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(20);
    for (auto& x : v) x = u(rng);
    v[3] = v[7];
    const double c = std::uniform_real_distribution<double>(0.01, 100.0)(rng);
    auto scaled = v;
    for (auto& x : scaled) x *= c;
    CHECK(spti::rank_by(v).position == spti::rank_by(scaled).position);
  }
}

TEST_CASE("degeneracy detection") {
  CHECK(spti::values_degenerate(1.0, 1.0 + 1e-12));
  CHECK_FALSE(spti::values_degenerate(1.0, 1.0 + 1e-8));
  CHECK(spti::values_degenerate(1000.0, 1000.0 + 5e-7));  // relative above 1
  const auto groups = spti::detect_degeneracy(std::vector<double>{2.0, 1.0, 2.0, 3.0, 1.0});
  REQUIRE(groups.size() == 2);
  CHECK(groups[0] == std::vector<std::size_t>{1, 4});
  CHECK(groups[1] == std::vector<std::size_t>{0, 2});
  CHECK(spti::detect_degeneracy(std::vector<double>{1.0, 2.0}).empty());
  CHECK_THROWS_AS(spti::detect_degeneracy(std::vector<double>{1.0}, 0.0), spti::StatisticsError);
}

TEST_CASE("correlation") {
  const std::vector<double> x{1.0, 2.0, 4.0, 8.0};
  CHECK(spti::correlate(x, x) == Approx(1.0));
  CHECK(spti::correlate(x, std::vector<double>{-1.0, -2.0, -4.0, -8.0}) == Approx(1.0));
  // Pearson r for (1,2,3) vs (1,3,2) is 0.5
  CHECK(spti::correlate(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}) == Approx(0.25));
  CHECK_THROWS_AS(spti::correlate(std::vector<double>{1, 2}, std::vector<double>{1, 2}), spti::StatisticsError);
  CHECK_THROWS_AS(spti::correlate(x, std::vector<double>{1, 1, 1, 1}), spti::StatisticsError);
  CHECK_THROWS_AS(spti::correlate(x, std::vector<double>{1, 2, 3}), spti::StatisticsError);
}

TEST_CASE("least squares") {
  const std::vector<double> x{0.0, 1.0, 2.0, 5.0};
  std::vector<double> y;
  for (double v : x) y.push_back(2.0 * v + 1.0);
  const auto fit = spti::fit_line(x, y);
  CHECK(fit.slope == Approx(2.0));
  CHECK(fit.intercept == Approx(1.0));
  CHECK(fit.r2 == Approx(1.0));
  CHECK(fit.points == 4);

  // Closed-form normal equations on noisy data.
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{2.1, 3.9, 6.2, 7.8, 10.1};
  const auto f = spti::fit_line(a, b);
  CHECK(f.slope == Approx(1.99));
  CHECK(f.intercept == Approx(0.05));
  CHECK_THROWS_AS(spti::fit_line(x, std::vector<double>{3, 3, 3, 3}), spti::StatisticsError);
}
