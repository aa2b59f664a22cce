#include "spti/reference.hpp"

#include <charconv>
#include <map>
#include <mutex>

#include <boost/tokenizer.hpp>

namespace spti {

namespace {

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    Tokenizer tok(line);
    rows.emplace_back(tok.begin(), tok.end());
  }
  return rows;
}

double to_double(const std::string& s, const std::string& where) {
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) throw ReferenceDataError(where + ": bad number '" + s + "'");
  return v;
}

int to_int(const std::string& s, const std::string& where) {
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) throw ReferenceDataError(where + ": bad integer '" + s + "'");
  return v;
}

}  // namespace

ReferenceTable parse_reference_table(int number, std::string_view csv) {
  if (number < 1 || number > 5) throw ReferenceDataError("no reference table " + std::to_string(number));
  auto rows = csv_rows(csv);
  if (rows.empty()) throw ReferenceDataError("table " + std::to_string(number) + " is empty");
  ReferenceTable table;
  table.number = number;
  table.decimals = number == 3 ? 7 : 5;
  const bool cyclic = number >= 4;
  const std::size_t width = cyclic ? 12 : (number == 1 ? 10 : 9);
  const auto& header = rows.front();
  if (header.size() != width || header[0] != (cyclic ? "id" : "name")) {
    throw ReferenceDataError("table " + std::to_string(number) + ": unexpected header");
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    const std::string where = "table " + std::to_string(number) + " line " + std::to_string(r + 1);
    if (f.size() != width) throw ReferenceDataError(where + ": expected " + std::to_string(width) + " fields");
    ReferenceRecord rec;
    rec.label = f[0];
    auto put = [&](IndexKind k, std::size_t order_col) {
      const int i = static_cast<int>(k);
      rec.order[i] = to_int(f[order_col], where);
      rec.text[i] = f[order_col + 1];
      rec.value[i] = to_double(f[order_col + 1], where);
    };
    if (cyclic) {
      rec.mu = to_int(f[1], where);
      rec.tau = to_int(f[2], where);
      rec.degrees = f[3];
      put(IndexKind::EE, 4);
      put(IndexKind::RVa, 6);
      put(IndexKind::RVb, 8);
      put(IndexKind::J, 10);
    } else {
      put(IndexKind::J, 1);
      put(IndexKind::EE, 3);
      put(IndexKind::RVa, 5);
      put(IndexKind::RVb, 7);
      if (number == 1 && !f[9].empty()) rec.ron = to_double(f[9], where);
    }
    table.rows.push_back(std::move(rec));
  }
  return table;
}

std::vector<Erratum> parse_errata(std::string_view csv) {
  auto rows = csv_rows(csv);
  if (rows.empty() || rows.front().size() != 6 || rows.front()[0] != "table") {
    throw ReferenceDataError("errata: unexpected header");
  }
  std::vector<Erratum> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != 6) throw ReferenceDataError("errata line " + std::to_string(r + 1) + ": expected 6 fields");
    out.push_back({to_int(f[0], "errata"), f[1], f[2], f[3], f[4], f[5]});
  }
  return out;
}

const ReferenceTable& reference_table(int number) {
  static std::once_flag once;
  static std::map<int, ReferenceTable> tables;
  std::call_once(once, [] {
    for (int t = 1; t <= 5; ++t) tables.emplace(t, parse_reference_table(t, embedded_table_csv(t)));
  });
  auto it = tables.find(number);
  if (it == tables.end()) throw ReferenceDataError("no reference table " + std::to_string(number));
  return it->second;
}

const std::vector<Erratum>& reference_errata() {
  static const std::vector<Erratum> errata = parse_errata(embedded_errata_csv());
  return errata;
}

std::string_view reference_provenance() { return embedded_provenance(); }

}  // namespace spti
