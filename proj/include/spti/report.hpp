#ifndef SPTI_REPORT_HPP
#define SPTI_REPORT_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spti/graph.hpp"

namespace spti {

enum class IndexKind { J, EE, RVa, RVb };

inline constexpr IndexKind kAllIndices[] = {IndexKind::J, IndexKind::EE, IndexKind::RVa, IndexKind::RVb};

std::string_view index_label(IndexKind k) noexcept;
/// Accepts "J", "EE", "RVa", "RVb" (case-insensitive).
IndexKind parse_index_kind(std::string_view text);

struct IndexReport {
  std::string name;
  int n = 0;
  int m = 0;
  int mu = 0;
  long long tau = 0;
  std::vector<int> degrees;
  double J = 0.0;
  double EE = 0.0;
  double RVa = 0.0;
  double RVb = 0.0;

  double value(IndexKind k) const noexcept;
};

/// Raised when one input of a batch fails; what() names the row.
class RowError : public std::runtime_error {
 public:
  RowError(std::size_t row, const std::string& name, const std::string& what);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

IndexReport make_report(const Graph& g, std::string name);

/// One report per graph, in input order. Rows are computed in parallel with
/// OpenMP. Unnamed rows are named by the hex canonical key. Errors are
/// rethrown as RowError for the first failing row (lowest index).
std::vector<IndexReport> index_report(std::span<const Graph> graphs, std::span<const std::string> names = {});

/// Single-threaded reference for index_report.
std::vector<IndexReport> index_report_serial(std::span<const Graph> graphs,
                                             std::span<const std::string> names = {});

std::vector<double> column(std::span<const IndexReport> rows, IndexKind k);

/// Header "name,n,m,mu,tau,degrees,J,EE,RVa,RVb", one line per row, values
/// printed with `digits` decimals (1..12), LF line endings.
std::string emit_csv(std::span<const IndexReport> rows, int digits);

/// 640x480 standalone SVG scatter plot, one circle per row. Output is a pure
/// function of the inputs.
std::string render_svg_scatter(std::span<const IndexReport> rows, IndexKind x, IndexKind y,
                               std::string_view title = {});
void emit_svg_scatter(std::span<const IndexReport> rows, IndexKind x, IndexKind y,
                      const std::filesystem::path& path, std::string_view title = {});

}  // namespace spti

#endif  // SPTI_REPORT_HPP
