#include "spti/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spti {

bool values_degenerate(double a, double b, double tol) noexcept {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
}

Ranking rank_by(std::span<const double> values, double tol) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  Ranking r;
  r.position.assign(values.size(), 0);
  std::size_t i = 0;
  while (i < order.size()) {
    std::vector<std::size_t> group{order[i]};
    std::size_t j = i + 1;
    while (j < order.size() && values_degenerate(values[order[i]], values[order[j]], tol)) group.push_back(order[j++]);
    for (auto row : group) r.position[row] = static_cast<int>(i + 1);
    std::sort(group.begin(), group.end());
    r.groups.push_back(std::move(group));
    i = j;
  }
  return r;
}

std::vector<std::vector<std::size_t>> detect_degeneracy(std::span<const double> values, double tol) {
  if (!(tol > 0.0)) throw StatisticsError("degeneracy tolerance must be positive");
  auto ranking = rank_by(values, tol);
  std::vector<std::vector<std::size_t>> out;
  for (auto& g : ranking.groups)
    if (g.size() > 1) out.push_back(std::move(g));
  return out;
}

namespace {

struct Moments {
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
};

Moments moments(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw StatisticsError("coordinate sequences differ in length");
  if (x.size() < 3) throw StatisticsError("need at least 3 points");
  const double n = static_cast<double>(x.size());
  Moments m;
  m.mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  m.mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - m.mean_x;
    const double dy = y[i] - m.mean_y;
    m.sxx += dx * dx;
    m.syy += dy * dy;
    m.sxy += dx * dy;
  }
  if (m.sxx == 0.0) throw StatisticsError("zero variance in x");
  if (m.syy == 0.0) throw StatisticsError("zero variance in y");
  return m;
}

}  // namespace

double correlate(std::span<const double> x, std::span<const double> y) {
  const auto m = moments(x, y);
  return (m.sxy * m.sxy) / (m.sxx * m.syy);
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  const auto m = moments(x, y);
  LinearFit fit;
  fit.slope = m.sxy / m.sxx;
  fit.intercept = m.mean_y - fit.slope * m.mean_x;
  fit.r2 = (m.sxy * m.sxy) / (m.sxx * m.syy);
  fit.points = x.size();
  return fit;
}

}  // namespace spti
