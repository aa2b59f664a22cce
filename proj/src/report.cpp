#include "spti/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>

#include "spti/canonical.hpp"
#include "spti/indices.hpp"

namespace spti {

std::string_view index_label(IndexKind k) noexcept {
  switch (k) {
    case IndexKind::J: return "J";
    case IndexKind::EE: return "EE";
    case IndexKind::RVa: return "RVa";
    case IndexKind::RVb: return "RVb";
  }
  return "?";
}

IndexKind parse_index_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "j") return IndexKind::J;
  if (lower == "ee") return IndexKind::EE;
  if (lower == "rva") return IndexKind::RVa;
  if (lower == "rvb") return IndexKind::RVb;
  throw std::invalid_argument("unknown index '" + std::string(text) + "' (expected J, EE, RVa or RVb)");
}

double IndexReport::value(IndexKind k) const noexcept {
  switch (k) {
    case IndexKind::J: return J;
    case IndexKind::EE: return EE;
    case IndexKind::RVa: return RVa;
    case IndexKind::RVb: return RVb;
  }
  return 0.0;
}

RowError::RowError(std::size_t row, const std::string& name, const std::string& what)
    : std::runtime_error("row " + std::to_string(row + 1) + (name.empty() ? "" : " (" + name + ")") + ": " + what),
      row_(row) {}

IndexReport make_report(const Graph& g, std::string name) {
  if (!g.is_connected()) throw GraphError("graph is disconnected");
  IndexReport r;
  r.name = std::move(name);
  r.n = g.order();
  r.m = g.size();
  r.mu = cyclomatic_number(g);
  r.tau = triangle_count(g);
  r.degrees = degree_sequence(g);
  const auto v = compute_indices(g);
  r.J = v.J;
  r.EE = v.EE;
  r.RVa = v.RVa;
  r.RVb = v.RVb;
  return r;
}

namespace {

std::string default_name(const Graph& g, std::size_t row) {
  try {
    return canonical_key(g).hex();
  } catch (const GraphError&) {
    return "graph" + std::to_string(row + 1);
  }
}

IndexReport report_row(std::span<const Graph> graphs, std::span<const std::string> names, std::size_t i) {
  std::string name = i < names.size() && !names[i].empty() ? names[i] : default_name(graphs[i], i);
  return make_report(graphs[i], std::move(name));
}

}  // namespace

std::vector<IndexReport> index_report_serial(std::span<const Graph> graphs, std::span<const std::string> names) {
  std::vector<IndexReport> out;
  out.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    try {
      out.push_back(report_row(graphs, names, i));
    } catch (const std::exception& e) {
      throw RowError(i, i < names.size() ? names[i] : std::string{}, e.what());
    }
  }
  return out;
}

std::vector<IndexReport> index_report(std::span<const Graph> graphs, std::span<const std::string> names) {
  const auto count = static_cast<long long>(graphs.size());
  std::vector<IndexReport> out(graphs.size());
  std::vector<std::string> errors(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto row = static_cast<std::size_t>(i);
    try {
      out[row] = report_row(graphs, names, row);
    } catch (const std::exception& e) {
      errors[row] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw RowError(i, i < names.size() ? names[i] : std::string{}, errors[i]);
  }
  return out;
}

std::vector<double> column(std::span<const IndexReport> rows, IndexKind k) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.value(k));
  return out;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string emit_csv(std::span<const IndexReport> rows, int digits) {
  if (digits < 1 || digits > 12) throw std::invalid_argument("digits must lie in [1, 12]");
  std::string out = "name,n,m,mu,tau,degrees,J,EE,RVa,RVb\n";
  for (const auto& r : rows) {
    std::string degrees;
    for (int d : r.degrees) degrees += (degrees.empty() ? "" : "-") + std::to_string(d);
    out += csv_field(r.name) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.mu) +
           ',' + std::to_string(r.tau) + ',' + degrees + ',' + fixed(r.J, digits) + ',' + fixed(r.EE, digits) + ',' +
           fixed(r.RVa, digits) + ',' + fixed(r.RVb, digits) + '\n';
  }
  return out;
}

std::string render_svg_scatter(std::span<const IndexReport> rows, IndexKind x, IndexKind y, std::string_view title) {
  if (rows.empty()) throw std::invalid_argument("scatter plot needs at least one row");
  constexpr double width = 640, height = 480;
  constexpr double left = 80, right = 30, top = 50, bottom = 70;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  auto xs = column(rows, x);
  auto ys = column(rows, y);
  auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
  auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
  const double xmin = *xmin_it, xmax = *xmax_it, ymin = *ymin_it, ymax = *ymax_it;
  // A degenerate axis maps everything to its middle.
  auto sx = [&](double v) { return xmax > xmin ? left + (v - xmin) / (xmax - xmin) * plot_w : left + plot_w / 2; };
  auto sy = [&](double v) { return ymax > ymin ? top + plot_h - (v - ymin) / (ymax - ymin) * plot_h : top + plot_h / 2; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  std::string heading = title.empty() ? std::string(index_label(y)) + " vs " + std::string(index_label(x))
                                      : std::string(title);
  svg << "<text x=\"320\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << xml_escape(heading) << "</text>\n";
  svg << "<rect x=\"" << fixed(left, 1) << "\" y=\"" << fixed(top, 1) << "\" width=\"" << fixed(plot_w, 1)
      << "\" height=\"" << fixed(plot_h, 1) << "\" fill=\"none\" stroke=\"black\"/>\n";
  // Axis labels and extreme tick values.
  svg << "<text x=\"" << fixed(left + plot_w / 2, 1) << "\" y=\"" << fixed(height - 20, 1)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << index_label(x) << "</text>\n";
  svg << "<text x=\"20\" y=\"" << fixed(top + plot_h / 2, 1)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 20 "
      << fixed(top + plot_h / 2, 1) << ")\">" << index_label(y) << "</text>\n";
  auto tick = [&](double px, double py, const char* anchor, double v) {
    svg << "<text x=\"" << fixed(px, 1) << "\" y=\"" << fixed(py, 1) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << fixed(v, 4) << "</text>\n";
  };
  tick(left, top + plot_h + 18, "start", xmin);
  tick(left + plot_w, top + plot_h + 18, "end", xmax);
  tick(left - 6, top + plot_h, "end", ymin);
  tick(left - 6, top + 10, "end", ymax);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    svg << "<circle class=\"marker\" cx=\"" << fixed(sx(xs[i]), 2) << "\" cy=\"" << fixed(sy(ys[i]), 2)
        << "\" r=\"4\" fill=\"steelblue\"><title>" << xml_escape(rows[i].name) << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_svg_scatter(std::span<const IndexReport> rows, IndexKind x, IndexKind y, const std::filesystem::path& path,
                      std::string_view title) {
  const auto svg = render_svg_scatter(rows, x, y, title);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << svg;
  if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace spti
