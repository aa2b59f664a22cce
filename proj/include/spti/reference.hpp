#ifndef SPTI_REFERENCE_HPP
#define SPTI_REFERENCE_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spti/report.hpp"

namespace spti {

class ReferenceDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One published table row, kept exactly as printed (including the printed
/// text of every value, so comparisons can quote it).
struct ReferenceRecord {
  std::string label;  // compound name (tables 1-3) or graph number (tables 4-5)
  std::array<double, 4> value{};       // indexed by IndexKind
  std::array<std::string, 4> text{};   // printed form of value
  std::array<int, 4> order{};          // printed rank of each index
  std::optional<double> ron;           // table 1 only
  std::optional<int> mu;               // tables 4-5
  std::optional<int> tau;              // tables 4-5
  std::string degrees;                 // tables 4-5

  double get(IndexKind k) const noexcept { return value[static_cast<int>(k)]; }
};

struct ReferenceTable {
  int number = 0;
  int decimals = 0;
  std::vector<ReferenceRecord> rows;

  bool cyclic() const noexcept { return number >= 4; }
};

/// Known defects of the printed tables. A reproduce mismatch on a cell listed
/// here is reported but tolerated.
struct Erratum {
  int table = 0;
  std::string row;
  std::string column;
  std::string printed_value;
  std::string computed_value;
  std::string note;
};

/// Parses one of the shipped CSV assets. Throws ReferenceDataError on
/// malformed content.
ReferenceTable parse_reference_table(int number, std::string_view csv);
std::vector<Erratum> parse_errata(std::string_view csv);

/// Tables 1..5 as compiled into the library.
const ReferenceTable& reference_table(int number);
const std::vector<Erratum>& reference_errata();
std::string_view reference_provenance();

/// Raw embedded assets (generated at build time from data/reference).
std::string_view embedded_table_csv(int number);
std::string_view embedded_errata_csv();
std::string_view embedded_provenance();

}  // namespace spti

#endif  // SPTI_REFERENCE_HPP
