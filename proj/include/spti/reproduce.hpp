#ifndef SPTI_REPRODUCE_HPP
#define SPTI_REPRODUCE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spti/enumeration.hpp"
#include "spti/graph.hpp"
#include "spti/reference.hpp"
#include "spti/report.hpp"
#include "spti/statistics.hpp"

namespace spti {

/// Per-cell tolerance used when comparing against a printed table.
double table_tolerance(int table) noexcept;

/// Recomputed value versus the printed one.
struct CellDiff {
  int table = 0;
  std::string row;
  std::string column;
  std::string printed;
  std::string computed;
  double deviation = 0.0;  // absolute; 0 for non-numeric cells
  bool erratum = false;    // listed in the shipped errata
};

struct TableReport {
  int table = 0;
  std::size_t rows = 0;
  std::size_t cells_compared = 0;
  double tolerance = 0.0;
  std::array<double, 4> max_deviation{};  // per IndexKind
  std::vector<CellDiff> mismatches;       // value, structure and rank cells
  std::vector<IndexReport> computed;      // aligned with the reference rows
  std::vector<Graph> graphs;              // aligned with the reference rows
  std::vector<std::string> notes;
  const std::vector<Erratum>* errata = nullptr;  // list the cells were checked against

  std::size_t unlisted_mismatches() const;
};

struct RonRegression {
  IndexKind index = IndexKind::J;
  LinearFit fit;
};

struct ReproduceOptions {
  bool ron_positive_only = false;
  std::optional<std::vector<Erratum>> errata;  // replaces the shipped errata
};

struct ReproduceReport {
  std::vector<TableReport> tables;
  std::vector<RonRegression> ron;
  std::vector<std::string> findings;

  std::size_t unlisted_mismatches() const;
  bool ok() const { return unlisted_mismatches() == 0; }
  std::string render() const;
};

/// Rebuilds one alkane table (1-3) from its names.
TableReport reproduce_alkane_table(int table, const std::vector<Erratum>& errata = reference_errata());

/// Matches the enumerated cyclic graphs of the table's order to the printed
/// rows (nearest four-index fingerprint, checked to be one-to-one) and
/// compares every cell. Enumerated graphs without a row are noted.
TableReport reproduce_cyclic_table(int table, const std::vector<Erratum>& errata = reference_errata());

/// Table 1 rows with a RON value, as (computed index, RON) per index.
std::vector<RonRegression> regress_ron(const TableReport& table1, bool positive_only = false);

/// Never stops at the first mismatch; every deviation beyond tolerance is in
/// the report.
ReproduceReport reproduce_tables(const ReproduceOptions& options = {});

}  // namespace spti

#endif  // SPTI_REPRODUCE_HPP
