#ifndef SPTI_STATISTICS_HPP
#define SPTI_STATISTICS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace spti {

class StatisticsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kDegeneracyTolerance = 1e-9;

/// |a - b| <= tol * max(1, |a|)
bool values_degenerate(double a, double b, double tol = kDegeneracyTolerance) noexcept;

/// Ascending competition ranking ("1224"). Rows within tolerance of the first
/// member of their group share the group's position.
struct Ranking {
  std::vector<int> position;                  // per input row, 1-based
  std::vector<std::vector<std::size_t>> groups;  // every tie group, ascending by value, singletons included
};

Ranking rank_by(std::span<const double> values, double tol = kDegeneracyTolerance);

/// Tie groups with at least two members, ascending by value.
std::vector<std::vector<std::size_t>> detect_degeneracy(std::span<const double> values,
                                                        double tol = kDegeneracyTolerance);

/// Squared Pearson correlation. Needs >= 3 points and non-zero variance in
/// both coordinates.
double correlate(std::span<const double> x, std::span<const double> y);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace spti

#endif  // SPTI_STATISTICS_HPP
