// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance        run every criterion
//   acceptance N      run criterion N only (exit status reflects it)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "spti/alkane_names.hpp"
#include "spti/canonical.hpp"
#include "spti/cospectral.hpp"
#include "spti/enumeration.hpp"
#include "spti/indices.hpp"
#include "spti/reference.hpp"
#include "spti/reproduce.hpp"
#include "spti/statistics.hpp"

namespace {

// Pinned tolerances and limits.
constexpr double kTableTolerance = 1e-4;
constexpr double kDecaneTolerance = 5e-5;
constexpr double kTieTolerance = 1e-9;
constexpr double kRegularTolerance = 1e-10;
constexpr double kSeriesTolerance = 1e-9;
constexpr double kMeanTolerance = 1e-10;
constexpr int kSeriesK = 40;
constexpr int kRandomSamples = 200;
constexpr unsigned kSeed = 20240601;
constexpr int kPathMax = 1000;
constexpr double kCountSeconds = 10.0;
constexpr double kReproduceSeconds = 30.0;
constexpr double kPathSeconds = 5.0;
constexpr double kR2EeRva = 0.99;
constexpr double kR2Spectral = 0.98;
constexpr double kR2J = 0.72;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v, const char* f = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome enumeration_counts() {
  const auto t0 = Clock::now();
  const std::size_t want_trees[] = {18, 35, 75};
  const std::size_t want_cyclic[] = {17, 68};
  std::ostringstream d;
  bool ok = true;
  for (int i = 0; i < 3; ++i) {
    const auto got = spti::enumerate_alkane_trees(8 + i).count();
    ok = ok && got == want_trees[i];
    d << "trees n=" << 8 + i << ": " << got << "/" << want_trees[i] << "; ";
  }
  for (int i = 0; i < 2; ++i) {
    const auto got = spti::enumerate_cyclic_chemical_graphs(5 + i).count();
    ok = ok && got == want_cyclic[i];
    d << "cyclic n=" << 5 + i << ": " << got << "/" << want_cyclic[i] << "; ";
  }
  const double s = seconds_since(t0);
  ok = ok && s < kCountSeconds;
  d << num(s, "%.2f") << " s";
  return {ok, d.str()};
}

Outcome table_reproduction() {
  const auto t0 = Clock::now();
  const auto report = spti::reproduce_tables();
  const double s = seconds_since(t0);
  std::ostringstream d;
  bool ok = s < kReproduceSeconds;
  for (const auto& t : report.tables) {
    const double tol = t.table == 3 ? kDecaneTolerance : kTableTolerance;
    ok = ok && t.tolerance == tol;
    std::size_t listed = 0;
    for (const auto& m : t.mismatches) listed += m.erratum;
    d << "T" << t.table << " " << t.rows << " rows, " << t.mismatches.size() << " deviating (" << listed
      << " listed); ";
    // Every numeric cell must be within tolerance or listed.
    for (const auto& m : t.mismatches) ok = ok && m.erratum;
  }
  ok = ok && report.ok();
  d << num(s, "%.2f") << " s";
  return {ok, d.str()};
}

Outcome degeneracy() {
  std::ostringstream d;
  bool ok = true;
  const std::pair<int, std::size_t> sets[] = {{9, 5}, {10, 2}};
  for (auto [n, pairs] : sets) {
    const auto trees = spti::enumerate_alkane_trees(n);
    const auto rows = spti::index_report(trees.graphs);
    const auto ee = spti::detect_degeneracy(spti::column(rows, spti::IndexKind::EE), kTieTolerance);
    const auto rva = spti::detect_degeneracy(spti::column(rows, spti::IndexKind::RVa), kTieTolerance);
    const auto rvb = spti::detect_degeneracy(spti::column(rows, spti::IndexKind::RVb), kTieTolerance);
    bool all_pairs = true;
    for (const auto& g : ee) all_pairs = all_pairs && g.size() == 2;
    ok = ok && ee.size() == pairs && all_pairs && rva.empty() && rvb.empty();
    d << "n=" << n << ": EE " << ee.size() << " pairs (want " << pairs << "), RVa " << rva.size() << ", RVb "
      << rvb.size() << " groups; ";
  }
  return {ok, d.str()};
}

Outcome cospectrality() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {9, 10}) {
    const auto trees = spti::enumerate_alkane_trees(n);
    const auto rows = spti::index_report(trees.graphs);
    std::set<std::pair<std::size_t, std::size_t>> degenerate, cospectral;
    for (const auto& g : spti::detect_degeneracy(spti::column(rows, spti::IndexKind::EE), kTieTolerance))
      degenerate.insert({std::min(g[0], g[1]), std::max(g[0], g[1])});
    for (const auto& p : spti::cospectral_pairs(trees.graphs)) cospectral.insert({p.first, p.second});
    ok = ok && degenerate == cospectral && !degenerate.empty();
    d << "n=" << n << ": " << degenerate.size() << " EE pairs, " << cospectral.size() << " exact cospectral pairs; ";
  }
  return {ok, d.str()};
}

Outcome regular_identity() {
  // C5, the triangular prism and the octahedron.
  const spti::Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  const spti::Graph octahedron(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5},
                                   {3, 4}, {3, 5}});
  struct Case {
    spti::Graph g;
    int table;
    const char* row;
  };
  const Case cases[] = {{spti::cycle_graph(5), 4, "1"}, {prism, 5, "61"}, {octahedron, 5, "85"}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& c : cases) {
    const auto v = spti::compute_indices(c.g);
    double printed = NAN;
    for (const auto& r : spti::reference_table(c.table).rows)
      if (r.label == c.row) printed = r.get(spti::IndexKind::EE);
    const bool good = std::abs(v.EE - v.RVa) < kRegularTolerance && std::abs(v.EE - v.RVb) < kRegularTolerance &&
                      std::abs(v.EE - printed) <= kTableTolerance;
    ok = ok && good;
    d << "T" << c.table << "#" << c.row << " EE " << num(v.EE, "%.5f") << " (printed " << num(printed, "%.5f")
      << ", |EE-RVa| " << num(std::abs(v.EE - v.RVa), "%.1e") << "); ";
  }
  return {ok, d.str()};
}

Outcome correlations() {
  const auto t = spti::reproduce_cyclic_table(5);
  using spti::IndexKind;
  auto r2 = [&](IndexKind a, IndexKind b) { return spti::correlate(spti::column(t.computed, a), spti::column(t.computed, b)); };
  const double ee_rva = r2(IndexKind::EE, IndexKind::RVa);
  const double ee_rvb = r2(IndexKind::EE, IndexKind::RVb);
  const double rva_rvb = r2(IndexKind::RVa, IndexKind::RVb);
  const double j_ee = r2(IndexKind::J, IndexKind::EE);
  const double j_rva = r2(IndexKind::J, IndexKind::RVa);
  const double j_rvb = r2(IndexKind::J, IndexKind::RVb);
  const bool ok = t.computed.size() == 68 && ee_rva >= kR2EeRva && ee_rvb >= kR2Spectral && rva_rvb >= kR2Spectral &&
                  j_ee >= kR2J && j_rva >= kR2J && j_rvb >= kR2J;
  std::ostringstream d;
  d << t.computed.size() << " graphs; R2 EE-RVa " << num(ee_rva, "%.4f") << ", EE-RVb " << num(ee_rvb, "%.4f")
    << ", RVa-RVb " << num(rva_rvb, "%.4f") << ", J-EE " << num(j_ee, "%.4f") << ", J-RVa " << num(j_rva, "%.4f")
    << ", J-RVb " << num(j_rvb, "%.4f");
  return {ok, d.str()};
}

Outcome oracle_equivalence() {
  std::vector<spti::Graph> pool;
  for (int n = 8; n <= 10; ++n) {
    auto r = spti::enumerate_alkane_trees(n);
    pool.insert(pool.end(), r.graphs.begin(), r.graphs.end());
  }
  for (int n = 5; n <= 6; ++n) {
    auto r = spti::enumerate_cyclic_chemical_graphs(n);
    pool.insert(pool.end(), r.graphs.begin(), r.graphs.end());
  }
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  double worst_series = 0.0, worst_mean = 0.0;
  int order_violations = 0, regular_seen = 0;
  for (int i = 0; i < kRandomSamples; ++i) {
    const auto& g = pool[pick(rng)];
    const auto d = spti::decompose(g);
    const auto s = spti::subgraph_centralities(d);
    const auto series = spti::subgraph_centrality_series(g, kSeriesK);
    double mean = 0.0;
    for (std::size_t v = 0; v < s.size(); ++v) {
      worst_series = std::max(worst_series, std::abs(s[v] - series[v]));
      mean += s[v];
    }
    mean /= static_cast<double>(s.size());
    const double ee = spti::index_EE(d);
    worst_mean = std::max(worst_mean, std::abs(mean - ee));
    const double rva = spti::index_RVa(s);
    const auto degrees = spti::degree_sequence(g);
    const bool regular = degrees.front() == degrees.back();
    regular_seen += regular;
    const bool equal = std::abs(rva - ee) <= kMeanTolerance;
    if (rva < ee - kMeanTolerance || equal != regular) ++order_violations;
  }
  const bool ok = worst_series <= kSeriesTolerance && worst_mean <= kMeanTolerance && order_violations == 0;
  std::ostringstream d;
  d << kRandomSamples << " samples from " << pool.size() << " graphs (seed " << kSeed << "); max |s - series| "
    << num(worst_series, "%.1e") << ", max |mean s - EE| " << num(worst_mean, "%.1e") << ", RVa/EE violations "
    << order_violations << ", regular samples " << regular_seen;
  return {ok, d.str()};
}

Outcome j_asymptote() {
  const auto t0 = Clock::now();
  double previous = 0.0, last = 0.0;
  int failures = 0;
  for (int n = 3; n <= kPathMax; ++n) {
    const double j = spti::index_J(spti::path_graph(n));
    if (!(j > previous) || !(j <= M_PI)) ++failures;
    previous = last = j;
  }
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "J(P_" << kPathMax << ") = " << num(last, "%.10f") << ", pi - J = " << num(M_PI - last, "%.3e") << ", "
    << failures << " violations, " << num(s, "%.2f") << " s";
  return {failures == 0 && s < kPathSeconds, d.str()};
}

Outcome name_closure() {
  std::ostringstream d;
  bool ok = true;
  std::size_t parsed = 0, total = 0;
  for (int t = 1; t <= 3; ++t) {
    const int n = 7 + t;
    std::set<spti::CanonicalKey> from_names;
    for (const auto& row : spti::reference_table(t).rows) {
      ++total;
      std::string name = row.label;
      for (const auto& e : spti::reference_errata())
        if (e.table == t && e.row == row.label && e.column == "name") name = e.computed_value;
      try {
        const auto g = spti::to_graph(spti::parse_name(name));
        from_names.insert(spti::canonical_key(g));
        ++parsed;
      } catch (const std::exception& ex) {
        ok = false;
        d << "'" << name << "': " << ex.what() << "; ";
      }
    }
    const auto enumerated = spti::enumerate_alkane_trees(n);
    const std::set<spti::CanonicalKey> expected(enumerated.keys.begin(), enumerated.keys.end());
    const bool equal = from_names == expected;
    ok = ok && equal;
    d << "C" << n << " " << (equal ? "sets equal" : "sets differ") << "; ";
  }
  ok = ok && parsed == 128 && total == 128;
  d << parsed << "/" << total << " names parsed";
  return {ok, d.str()};
}

Outcome ron_regression() {
  const auto t1 = spti::reproduce_alkane_table(1);
  const auto a = spti::regress_ron(t1);
  const auto b = spti::regress_ron(t1);
  bool ok = a.size() == 4;
  std::ostringstream d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ok = ok && a[i].fit.points == 17 && std::isfinite(a[i].fit.r2) && a[i].fit.slope == b[i].fit.slope &&
         a[i].fit.intercept == b[i].fit.intercept && a[i].fit.r2 == b[i].fit.r2;
    d << spti::index_label(a[i].index) << ": slope " << num(a[i].fit.slope, "%.4f") << " intercept "
      << num(a[i].fit.intercept, "%.4f") << " R2 " << num(a[i].fit.r2, "%.4f") << "; ";
  }
  d << "17 rows";
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"enumeration counts", enumeration_counts},
      {"table reproduction", table_reproduction},
      {"degeneracy findings", degeneracy},
      {"cospectrality", cospectrality},
      {"regular-graph identity", regular_identity},
      {"correlations", correlations},
      {"oracle equivalence", oracle_equivalence},
      {"J asymptote", j_asymptote},
      {"name-parser closure", name_closure},
      {"RON regression", ron_regression},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
