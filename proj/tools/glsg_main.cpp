// glsg - command-line toolkit for generalized Latin square graphs of
// finite semigroups: table validation, counting invariants, regularity,
// graph export, spectra, and an exhaustive small-order census.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "glsg/cayley_table.hpp"
#include "glsg/census.hpp"
#include "glsg/families.hpp"
#include "glsg/graph.hpp"
#include "glsg/invariants.hpp"
#include "glsg/spectrum.hpp"
#include "glsg/table_io.hpp"

namespace {

using nlohmann::json;

constexpr int kOracleOrderCap = 20;  // analyze cross-checks the O(n^4) oracle up to here

struct InputSource {
  std::string file;
  std::string family;
  bool use_stdin = false;
};

void add_input_options(CLI::App* cmd, InputSource& src) {
  auto* group = cmd->add_option_group("input", "table source (exactly one)");
  group->add_option("--file", src.file, "read a table from a file (text or JSON)");
  group->add_option("--family", src.family,
                    "construct a family table; grammar: null:N leftzero:N rightzero:N "
                    "band:PxQ cyclic:N const:N:C brandt:cyclic:M:N");
  group->add_flag("--stdin", src.use_stdin, "read a table from standard input");
  group->require_option(1);
}

glsg::CayleyTable load_table(const InputSource& src) {
  if (!src.family.empty()) {
    return glsg::make_family(glsg::parse_family_spec(src.family));
  }
  if (src.use_stdin) {
    return glsg::read_table_auto(std::cin);
  }
  std::ifstream in(src.file);
  if (!in) throw glsg::ParseError("cannot open file '" + src.file + "'");
  return glsg::read_table_auto(in);
}

// Rounds to 12 significant digits so that exact spectra print exactly.
double round_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw glsg::ParseError("cannot open file '" + out_path + "'");
  out << text;
}

int run_validate(const InputSource& src) {
  const glsg::CayleyTable t = load_table(src);
  std::cout << "OK order=" << t.order() << '\n';
  return 0;
}

int run_family(const std::string& spec_text, const std::string& format,
               const std::string& out_path) {
  const glsg::CayleyTable t = glsg::make_family(glsg::parse_family_spec(spec_text));
  std::ostringstream out;
  if (format == "json") {
    glsg::write_table_json(out, t);
  } else {
    glsg::write_table_text(out, t);
  }
  write_output(out.str(), out_path);
  return 0;
}

int run_analyze(const InputSource& src, const std::string& format, bool no_oracle) {
  const glsg::CayleyTable t = load_table(src);
  const int n = t.order();
  const glsg::InvariantSet inv = glsg::compute_invariants(t);
  const glsg::RegularityResult reg = glsg::is_regular_glsg(t);
  const glsg::DeltaObstruction delta = glsg::delta_obstruction(t);

  bool oracle_checked = false;
  if (!no_oracle && n <= kOracleOrderCap) {
    const glsg::GlsgGraph g = glsg::build_graph(t);
    const std::vector<int> oracle = glsg::naive_degrees(g);
    for (std::size_t c = 0; c < oracle.size(); ++c) {
      if (oracle[c] != inv.deg[c]) {
        // formula and adjacency oracle disagree: a bug, never expected
        throw glsg::Error("OracleMismatch",
                          "cell=" + std::to_string(c + 1) +
                              " formula=" + std::to_string(inv.deg[c]) +
                              " oracle=" + std::to_string(oracle[c]));
      }
    }
    oracle_checked = true;
  } else if (!no_oracle) {
    std::cerr << "note: oracle cross-check skipped (order " << n << " > " << kOracleOrderCap
              << ")\n";
  }

  const int min_deg = *std::min_element(inv.deg.begin(), inv.deg.end());
  const int max_deg = *std::max_element(inv.deg.begin(), inv.deg.end());

  if (format == "text") {
    std::cout << "order: " << n << '\n';
    std::cout << "regular: " << (reg.regular ? "yes" : "no") << '\n';
    std::cout << "degree set:";
    for (int d : reg.degree_set) std::cout << ' ' << d;
    std::cout << '\n';
    std::cout << "degrees by cell:\n";
    for (int i = 0; i < n; ++i) {
      std::cout << " ";
      for (int j = 0; j < n; ++j) std::cout << ' ' << inv.deg[i * n + j];
      std::cout << '\n';
    }
    std::cout << "oracle degrees: "
              << (oracle_checked ? "match (adjacency enumeration agrees on every cell)"
                                 : "skipped")
              << '\n';
    std::cout << "ns:";
    for (int v : inv.ns) std::cout << ' ' << v;
    std::cout << '\n';
    std::cout << "min degree: " << min_deg << '\n';
    std::cout << "max degree: " << max_deg << '\n';
    std::cout << "delta max: " << delta.delta_max << '\n';
    std::cout << "blocked: " << (delta.blocked ? "yes" : "no") << '\n';
  } else {
    json doc;
    doc["order"] = n;
    doc["regular"] = reg.regular;
    doc["degree_set"] = reg.degree_set;
    doc["ns"] = inv.ns;
    doc["min_deg"] = min_deg;
    doc["max_deg"] = max_deg;
    doc["delta_max"] = delta.delta_max;
    doc["blocked"] = delta.blocked;
    std::cout << doc.dump() << '\n';
  }
  return 0;
}

int run_graph(const InputSource& src, const std::string& format, const std::string& out_path,
              bool force) {
  const glsg::CayleyTable t = load_table(src);
  const glsg::GlsgGraph g = glsg::build_graph(t, force);
  write_output(glsg::export_graph(g, glsg::parse_graph_format(format)), out_path);
  return 0;
}

int run_spectrum(const InputSource& src, const std::string& format, double cluster_tol,
                 bool force) {
  const glsg::CayleyTable t = load_table(src);
  const glsg::GlsgGraph g = glsg::build_graph(t, force);
  const glsg::Spectrum s = glsg::spectrum(g, cluster_tol);
  if (format == "text") {
    std::cout << "clusters:\n";
    for (const glsg::SpectralCluster& c : s.clusters) {
      char line[64];
      std::snprintf(line, sizeof line, "  %.12g x%d\n", round_sig(c.value), c.multiplicity);
      std::cout << line;
    }
    char energy[64];
    std::snprintf(energy, sizeof energy, "energy: %.12g\n", round_sig(s.energy));
    std::cout << energy;
  } else {
    json doc;
    auto clusters = json::array();
    for (const glsg::SpectralCluster& c : s.clusters) {
      clusters.push_back(json::array({round_sig(c.value), c.multiplicity}));
    }
    doc["clusters"] = std::move(clusters);
    doc["energy"] = round_sig(s.energy);
    std::cout << doc.dump() << '\n';
  }
  return 0;
}

struct CensusCliOptions {
  int max_order = 0;
  bool allow_order_6 = false;
  std::string format = "text";
  bool witnesses = false;
  std::string checkpoint;
  int threads = 0;
  int spot_check = 0;
  std::uint64_t seed = 1;
};

int run_census(const CensusCliOptions& opts) {
  if (opts.format == "csv" && opts.witnesses) {
    std::cerr << "census: --witnesses is not representable in csv; use text or json\n";
    return 2;
  }
  glsg::CensusOptions census_opts;
  census_opts.allow_order_6 = opts.allow_order_6;
  census_opts.threads = opts.threads;
  census_opts.checkpoint_path = opts.checkpoint;
  auto last_report = std::chrono::steady_clock::now();
  census_opts.progress = [&](const glsg::CensusProgress& p) {
    const auto now = std::chrono::steady_clock::now();
    if (p.order >= 6 && now - last_report >= std::chrono::seconds(2)) {
      last_report = now;
      std::cerr << "order " << p.order << ": " << p.subtrees_done << '/' << p.subtrees_total
                << " subtrees, labeled=" << p.labeled_so_far
                << ", classes=" << p.classes_so_far << '\n';
    }
    return true;
  };

  std::vector<glsg::CensusRow> rows;
  std::vector<std::vector<glsg::RegularWitness>> witnesses;
  for (int n = 1; n <= opts.max_order; ++n) {
    glsg::CensusOptions per_order = census_opts;
    if (n != opts.max_order) per_order.checkpoint_path.clear();
    glsg::CensusResult result = glsg::census_with_witnesses(n, per_order);
    rows.push_back(result.row);
    if (opts.witnesses) witnesses.push_back(std::move(result.witnesses));
  }

  if (opts.format == "csv") {
    std::cout << glsg::format_census_csv(rows);
  } else if (opts.format == "json") {
    json doc;
    auto arr = json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      json row;
      row["order"] = rows[r].order;
      row["labeled"] = rows[r].labeled_total;
      row["total"] = rows[r].canonical_total;
      row["regular"] = rows[r].regular_count;
      row["percentage"] = std::strtod(glsg::format_percentage(rows[r].percentage).c_str(),
                                      nullptr);
      if (opts.witnesses) {
        auto wit_arr = json::array();
        for (const glsg::RegularWitness& w : witnesses[r]) {
          json entry;
          entry["degree"] = w.degree;
          auto table = json::array();
          for (int i = 1; i <= w.table.order(); ++i) {
            auto table_row = json::array();
            for (int j = 1; j <= w.table.order(); ++j) table_row.push_back(w.table.product(i, j));
            table.push_back(std::move(table_row));
          }
          entry["table"] = std::move(table);
          wit_arr.push_back(std::move(entry));
        }
        row["witnesses"] = std::move(wit_arr);
      }
      arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << glsg::format_census_text(rows);
    if (opts.witnesses) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::cout << "\nregular witnesses of order " << rows[r].order << ":\n";
        for (const glsg::RegularWitness& w : witnesses[r]) {
          std::cout << "degree " << w.degree << '\n' << glsg::table_to_text(w.table);
        }
      }
    }
  }

  if (opts.spot_check > 0) {
    for (int n = 1; n <= opts.max_order; ++n) {
      const long long failures =
          glsg::canonical_spot_check(n, opts.spot_check, opts.seed, opts.allow_order_6);
      std::cerr << "spot-check order " << n << ": " << opts.spot_check << " samples, "
                << failures << " failures\n";
      if (failures > 0) return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Latin square graphs of finite semigroups"};
  app.require_subcommand(1);
  app.footer(
      "Table file formats (auto-detected):\n"
      "  text: first line n, then n lines of n space-separated entries in 1..n\n"
      "  json: {\"n\": int, \"table\": [[int]]}\n"
      "Family spec grammar:\n"
      "  null:N leftzero:N rightzero:N band:PxQ cyclic:N const:N:C brandt:cyclic:M:N");

  InputSource validate_src;
  auto* validate_cmd = app.add_subcommand("validate", "check a multiplication table");
  add_input_options(validate_cmd, validate_src);

  std::string family_spec;
  std::string family_format = "table";
  std::string family_out;
  auto* family_cmd = app.add_subcommand("family", "construct a family table");
  family_cmd->add_option("spec", family_spec, "family spec, e.g. null:3 or band:2x2")
      ->required();
  family_cmd->add_option("--format", family_format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  family_cmd->add_option("-o,--output", family_out, "write to a file instead of stdout");

  InputSource analyze_src;
  std::string analyze_format = "json";
  bool analyze_no_oracle = false;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "counting invariants, degrees and regularity");
  add_input_options(analyze_cmd, analyze_src);
  analyze_cmd->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_flag("--no-oracle", analyze_no_oracle,
                        "skip the adjacency-oracle cross-check");

  InputSource graph_src;
  std::string graph_format = "edge-list";
  std::string graph_out;
  bool graph_force = false;
  auto* graph_cmd = app.add_subcommand("graph", "export the graph");
  add_input_options(graph_cmd, graph_src);
  graph_cmd->add_option("--format", graph_format, "output format")
      ->check(CLI::IsMember({"edge-list", "dot"}));
  graph_cmd->add_option("-o,--output", graph_out, "write to a file instead of stdout");
  graph_cmd->add_flag("--force", graph_force, "build graphs beyond the 4096-vertex cap");

  InputSource spectrum_src;
  std::string spectrum_format = "json";
  double spectrum_tol = glsg::kDefaultClusterTol;
  bool spectrum_force = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "adjacency spectrum and energy");
  add_input_options(spectrum_cmd, spectrum_src);
  spectrum_cmd->add_option("--format", spectrum_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  spectrum_cmd->add_option("--cluster-tol", spectrum_tol, "eigenvalue clustering tolerance");
  spectrum_cmd->add_flag("--force", spectrum_force, "build graphs beyond the 4096-vertex cap");

  CensusCliOptions census_opts;
  auto* census_cmd =
      app.add_subcommand("census", "enumerate all semigroups of small order");
  census_cmd->add_option("--max-order", census_opts.max_order, "largest order to enumerate")
      ->required()
      ->check(CLI::Range(1, 6));
  census_cmd->add_flag("--allow-order-6", census_opts.allow_order_6,
                       "permit the long-running order-6 enumeration");
  census_cmd->add_option("--format", census_opts.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  census_cmd->add_flag("--witnesses", census_opts.witnesses,
                       "also print the regular canonical tables");
  census_cmd->add_option("--checkpoint", census_opts.checkpoint,
                         "checkpoint file for resumable runs (written while running)");
  census_cmd->add_option("--threads", census_opts.threads,
                         "worker threads (0 = hardware concurrency)");
  census_cmd->add_option("--spot-check", census_opts.spot_check,
                         "per order, relabel this many sampled tables and verify canonical "
                         "forms are unchanged");
  census_cmd->add_option("--seed", census_opts.seed, "seed for randomized spot-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(validate_src);
    if (family_cmd->parsed()) return run_family(family_spec, family_format, family_out);
    if (analyze_cmd->parsed()) return run_analyze(analyze_src, analyze_format, analyze_no_oracle);
    if (graph_cmd->parsed()) return run_graph(graph_src, graph_format, graph_out, graph_force);
    if (spectrum_cmd->parsed())
      return run_spectrum(spectrum_src, spectrum_format, spectrum_tol, spectrum_force);
    if (census_cmd->parsed()) return run_census(census_opts);
  } catch (const glsg::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError " << e.what() << '\n';
    return 1;
  }
  return 2;
}
