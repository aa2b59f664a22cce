// spti: spectral topological indices of chemical graphs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spti/alkane_names.hpp"
#include "spti/canonical.hpp"
#include "spti/cospectral.hpp"
#include "spti/enumeration.hpp"
#include "spti/graph.hpp"
#include "spti/reference.hpp"
#include "spti/report.hpp"
#include "spti/reproduce.hpp"
#include "spti/statistics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int digits = 5;
  std::string format = "csv";
  std::string out;
};

// Graph sources shared by most subcommands.
struct Inputs {
  std::vector<std::string> edge_files;
  std::vector<std::string> names;
  std::string names_file;
  int alkanes = 0;
  int cyclic = 0;
  int table = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--edges", edge_files, "edge-list file(s), '-' for stdin");
    cmd->add_option("--name", names, "alkane name(s)");
    cmd->add_option("--names-file", names_file, "file with one alkane name per line");
    cmd->add_option("--alkanes", alkanes, "all alkane trees with N carbons")->check(CLI::Range(1, 12));
    cmd->add_option("--cyclic", cyclic, "all cyclic chemical graphs on N vertices")->check(CLI::Range(3, 7));
    cmd->add_option("--table", table, "graphs of reference table 1-5")->check(CLI::Range(1, 5));
  }
};

struct GraphSet {
  std::vector<spti::Graph> graphs;
  std::vector<std::string> names;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_name(GraphSet& set, const std::string& name) {
  set.graphs.push_back(spti::to_graph(spti::parse_name(name)));
  set.names.push_back(name);
}

void add_enumeration(GraphSet& set, const spti::EnumerationResult& r) {
  for (std::size_t i = 0; i < r.graphs.size(); ++i) {
    set.graphs.push_back(r.graphs[i]);
    set.names.push_back(r.keys[i].hex());
  }
}

GraphSet collect(const Inputs& in) {
  GraphSet set;
  for (const auto& f : in.edge_files) {
    set.graphs.push_back(spti::parse_edge_list(read_text(f)));
    set.names.emplace_back();
  }
  for (const auto& n : in.names) add_name(set, n);
  if (!in.names_file.empty()) {
    std::istringstream lines(read_text(in.names_file));
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      add_name(set, line);
    }
  }
  if (in.alkanes > 0) add_enumeration(set, spti::enumerate_alkane_trees(in.alkanes));
  if (in.cyclic > 0) add_enumeration(set, spti::enumerate_cyclic_chemical_graphs(in.cyclic));
  if (in.table > 0) {
    const auto t = in.table <= 3 ? spti::reproduce_alkane_table(in.table) : spti::reproduce_cyclic_table(in.table);
    const auto& ref = spti::reference_table(in.table);
    for (std::size_t i = 0; i < ref.rows.size(); ++i) {
      if (t.graphs[i].order() == 0) throw InputError("table row " + ref.rows[i].label + " has no graph");
      set.graphs.push_back(t.graphs[i]);
      set.names.push_back(ref.rows[i].label);
    }
  }
  if (set.graphs.empty()) throw InputError("no input graphs (use --edges, --name, --names-file, --alkanes, --cyclic or --table)");
  return set;
}

std::vector<spti::IndexReport> reports(const GraphSet& set) { return spti::index_report(set.graphs, set.names); }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_output(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write " + g.out);
}

spti::IndexKind index_option(const std::string& s) {
  try {
    return spti::parse_index_kind(s);
  } catch (const std::exception&) {
    throw InputError("unknown index '" + s + "' (expected J, EE, RVa or RVb)");
  }
}

int run_indices(const Globals& g, const Inputs& in) {
  write_output(g, spti::emit_csv(reports(collect(in)), g.digits));
  return kExitOk;
}

int run_enumerate(const Globals& g, int alkanes, int cyclic, bool edge_lists) {
  if ((alkanes > 0) == (cyclic > 0)) throw InputError("enumerate needs exactly one of --alkanes N or --cyclic N");
  const auto r = alkanes > 0 ? spti::enumerate_alkane_trees(alkanes) : spti::enumerate_cyclic_chemical_graphs(cyclic);
  if (edge_lists) {
    std::string text;
    for (std::size_t i = 0; i < r.graphs.size(); ++i) {
      text += "# " + r.keys[i].hex() + "\n" + spti::to_edge_list(r.graphs[i]) + "\n";
    }
    write_output(g, text);
    return kExitOk;
  }
  std::vector<std::string> names;
  for (const auto& k : r.keys) names.push_back(k.hex());
  write_output(g, spti::emit_csv(spti::index_report(r.graphs, names), g.digits));
  return kExitOk;
}

int run_parse_name(const Globals& g, const std::vector<std::string>& names) {
  std::string text = "name,carbons,key,structure\n";
  for (const auto& n : names) {
    const auto ast = spti::parse_name(n);
    const auto graph = spti::to_graph(ast);
    text += csv_field(n) + "," + std::to_string(ast.carbon_count()) + "," + spti::canonical_key(graph).hex() + "," +
            csv_field(spti::describe(ast)) + "\n";
  }
  write_output(g, text);
  return kExitOk;
}

int run_rank(const Globals& g, const Inputs& in, const std::string& index) {
  const auto k = index_option(index);
  const auto rows = reports(collect(in));
  const auto values = spti::column(rows, k);
  const auto ranking = spti::rank_by(values);
  std::vector<std::size_t> group_of(rows.size());
  for (std::size_t gi = 0; gi < ranking.groups.size(); ++gi)
    for (auto r : ranking.groups[gi]) group_of[r] = gi + 1;
  std::string text = "name,position,group," + std::string(spti::index_label(k)) + "\n";
  for (const auto& group : ranking.groups) {
    for (auto r : group) {
      text += csv_field(rows[r].name) + "," + std::to_string(ranking.position[r]) + "," + std::to_string(group_of[r]) +
              "," + fixed(values[r], g.digits) + "\n";
    }
  }
  write_output(g, text);
  return kExitOk;
}

int run_degeneracy(const Globals& g, const Inputs& in, const std::string& index, double tol) {
  if (!(tol > 0.0)) throw InputError("--tol must be positive");
  const auto k = index_option(index);
  const auto rows = reports(collect(in));
  const auto groups = spti::detect_degeneracy(spti::column(rows, k), tol);
  std::string text = "group,name," + std::string(spti::index_label(k)) + "\n";
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (auto r : groups[gi]) {
      text += std::to_string(gi + 1) + "," + csv_field(rows[r].name) + "," + fixed(rows[r].value(k), g.digits) + "\n";
    }
  }
  write_output(g, text);
  return kExitOk;
}

int run_cospectral(const Globals& g, const Inputs& in) {
  const auto set = collect(in);
  const auto rows = reports(set);
  std::string text = "first,second,floating,exact,characteristic_polynomial\n";
  for (const auto& p : spti::cospectral_candidates(set.graphs)) {
    text += csv_field(rows[p.first].name) + "," + csv_field(rows[p.second].name) + "," +
            (p.floating_match ? "yes" : "no") + "," + (p.exact_match ? "yes" : "no") + "," +
            spti::to_string(spti::characteristic_polynomial(set.graphs[p.first])) + "\n";
  }
  write_output(g, text);
  return kExitOk;
}

int run_correlate(const Globals& g, const Inputs& in, const std::vector<std::string>& pair, bool ron,
                  bool positive_only) {
  std::string text;
  if (ron) {
    text = "index,points,slope,intercept,r2\n";
    for (const auto& r : spti::regress_ron(spti::reproduce_alkane_table(1), positive_only)) {
      text += std::string(spti::index_label(r.index)) + "," + std::to_string(r.fit.points) + "," +
              fixed(r.fit.slope, g.digits) + "," + fixed(r.fit.intercept, g.digits) + "," + fixed(r.fit.r2, g.digits) +
              "\n";
    }
    write_output(g, text);
    return kExitOk;
  }
  const auto rows = reports(collect(in));
  std::vector<std::pair<spti::IndexKind, spti::IndexKind>> pairs;
  if (pair.empty()) {
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) pairs.emplace_back(spti::kAllIndices[a], spti::kAllIndices[b]);
  } else if (pair.size() == 2) {
    pairs.emplace_back(index_option(pair[0]), index_option(pair[1]));
  } else {
    throw InputError("--pair takes two index names");
  }
  text = "x,y,points,r2\n";
  for (const auto& [x, y] : pairs) {
    const double r2 = spti::correlate(spti::column(rows, x), spti::column(rows, y));
    text += std::string(spti::index_label(x)) + "," + std::string(spti::index_label(y)) + "," +
            std::to_string(rows.size()) + "," + fixed(r2, g.digits) + "\n";
  }
  write_output(g, text);
  return kExitOk;
}

int run_plot(const Globals& g, const Inputs& in, const std::string& x, const std::string& y, std::string title) {
  if (g.out.empty()) throw InputError("plot needs --out PATH");
  const auto rows = reports(collect(in));
  const auto kx = index_option(x);
  const auto ky = index_option(y);
  if (title.empty()) title = std::string(spti::index_label(ky)) + " vs " + std::string(spti::index_label(kx));
  try {
    spti::emit_svg_scatter(rows, kx, ky, g.out, title);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
  return kExitOk;
}

int run_reproduce(const Globals& g, bool positive_only, const std::string& errata_path) {
  spti::ReproduceOptions options;
  options.ron_positive_only = positive_only;
  if (!errata_path.empty()) options.errata = spti::parse_errata(read_text(errata_path));
  const auto report = spti::reproduce_tables(options);
  write_output(g, report.render());
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral topological indices (J, EE, RVa, RVb) of chemical graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--digits", globals.digits, "decimals in numeric output")->check(CLI::Range(1, 12));
  app.add_option("--format", globals.format, "output format")->check(CLI::IsMember({"csv"}));
  app.add_option("--out", globals.out, "write output to PATH instead of stdout");

  Inputs in_indices, in_rank, in_corr, in_degen, in_cosp, in_plot;

  auto* indices = app.add_subcommand("indices", "J, EE, RVa, RVb for each input graph");
  in_indices.attach(indices);

  int alkanes = 0, cyclic = 0;
  bool edge_lists = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate alkane trees or cyclic chemical graphs");
  enumerate->add_option("--alkanes", alkanes, "carbon count")->check(CLI::Range(1, 12));
  enumerate->add_option("--cyclic", cyclic, "vertex count")->check(CLI::Range(3, 7));
  enumerate->add_flag("--edge-lists", edge_lists, "print edge lists instead of indices");

  std::vector<std::string> parse_names;
  auto* parse = app.add_subcommand("parse-name", "parse alkane names");
  parse->add_option("names", parse_names, "names")->required();

  std::string rank_index = "J";
  auto* rank = app.add_subcommand("rank", "ascending competition ranking by one index");
  in_rank.attach(rank);
  rank->add_option("--index", rank_index, "J, EE, RVa or RVb");

  std::vector<std::string> corr_pair;
  bool ron = false, ron_positive_only = false;
  auto* corr = app.add_subcommand("correlate", "R^2 between indices, or RON regression");
  in_corr.attach(corr);
  corr->add_option("--pair", corr_pair, "two index names; all six pairs if omitted")->expected(2);
  corr->add_flag("--ron", ron, "regress reference RON (table 1) on each index");
  corr->add_flag("--ron-positive-only", ron_positive_only, "exclude non-positive RON values");

  std::string degen_index = "EE";
  double degen_tol = spti::kDegeneracyTolerance;
  auto* degen = app.add_subcommand("degeneracy", "groups of graphs sharing an index value");
  in_degen.attach(degen);
  degen->add_option("--index", degen_index, "J, EE, RVa or RVb");
  degen->add_option("--tol", degen_tol, "relative tolerance");

  auto* cosp = app.add_subcommand("cospectral", "cospectral pairs (floating and exact)");
  in_cosp.attach(cosp);

  std::string plot_x = "J", plot_y = "EE", plot_title;
  auto* plot = app.add_subcommand("plot", "SVG scatter of two indices");
  in_plot.attach(plot);
  plot->add_option("--x", plot_x, "x index");
  plot->add_option("--y", plot_y, "y index");
  plot->add_option("--title", plot_title, "plot title");

  bool repro_positive_only = false;
  std::string repro_errata;
  auto* repro = app.add_subcommand("reproduce", "recompute the reference tables and report deviations");
  repro->add_flag("--ron-positive-only", repro_positive_only, "exclude non-positive RON values from the regression");
  repro->add_option("--errata", repro_errata, "errata CSV to use instead of the shipped one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*indices) return run_indices(globals, in_indices);
    if (*enumerate) return run_enumerate(globals, alkanes, cyclic, edge_lists);
    if (*parse) return run_parse_name(globals, parse_names);
    if (*rank) return run_rank(globals, in_rank, rank_index);
    if (*corr) return run_correlate(globals, in_corr, corr_pair, ron, ron_positive_only);
    if (*degen) return run_degeneracy(globals, in_degen, degen_index, degen_tol);
    if (*cosp) return run_cospectral(globals, in_cosp);
    if (*plot) return run_plot(globals, in_plot, plot_x, plot_y, plot_title);
    if (*repro) return run_reproduce(globals, repro_positive_only, repro_errata);
  } catch (const std::exception& e) {
    std::cerr << "spti: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
