// specdev: spectral irregularity bound toolkit.
//
// Exit codes: 0 all checks passed, 1 a verification check failed,
// 2 usage or input errors.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specdev/bounds.hpp"
#include "specdev/generators.hpp"
#include "specdev/graph6.hpp"
#include "specdev/serialize.hpp"
#include "specdev/verify.hpp"

namespace {

using namespace specdev;

struct InputFlags {
  std::string path;     // positional, "-" for stdin
  std::string gen;      // --gen family:params
  std::string graph6;   // --graph6 inline string
  std::string format = "graph6";
};

void add_input_flags(CLI::App* cmd, InputFlags* in) {
  cmd->add_option("input", in->path, "graph file, or - for stdin");
  cmd->add_option("--gen", in->gen,
                  "generated input, e.g. star:100 or gnp:50:0.1:42");
  cmd->add_option("--graph6", in->graph6, "inline graph6 string");
  cmd->add_option("--format", in->format, "input format: graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
}

std::vector<Graph> load_graphs(const InputFlags& in) {
  const int sources = !in.path.empty() + !in.gen.empty() + !in.graph6.empty();
  if (sources != 1) {
    throw std::invalid_argument(
        "need exactly one input source: a path (or -), --gen, or --graph6");
  }
  if (!in.gen.empty()) return {generate(parse_gen_spec(in.gen))};
  if (!in.graph6.empty()) return {from_graph6(in.graph6)};

  std::ifstream file;
  std::istream* stream = &std::cin;
  if (in.path != "-") {
    file.open(in.path);
    if (!file) throw std::invalid_argument("cannot open '" + in.path + "'");
    stream = &file;
  }

  if (in.format == "edgelist") return {read_edge_list_text(*stream)};

  std::vector<Graph> graphs;
  std::string line;
  long line_no = 0;
  while (std::getline(*stream, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const Graph6ParseError& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  if (graphs.empty()) throw std::invalid_argument("input contains no graphs");
  return graphs;
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
  return out;
}

Family family_from_name(const std::string& name) {
  if (name == "star") return Family::star;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "circulant" || name == "circulant_regular") return Family::circulant_regular;
  if (name == "gnp" || name == "gnp_random") return Family::gnp_random;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<Family> parse_family_list(const std::string& text) {
  std::vector<Family> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(family_from_name(tok));
  if (out.empty()) throw std::invalid_argument("empty family list");
  return out;
}

// Output plumbing: everything writes to --out when given, stdout otherwise.
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot write '" + path + "'");
    out = &file;
  }
  std::ostream& stream() { return *out; }
};

struct CorpusCsvWriter {
  std::ofstream file;

  explicit CorpusCsvWriter(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot write '" + path + "'");
    file << per_graph_csv_header() << '\n';
  }
  PerGraphHook hook() {
    if (!file.is_open()) return {};
    return [this](const Graph& g, const DegreeStats& st, const SpectralInterval& iv) {
      file << per_graph_csv_row(g, st, iv) << '\n';
    };
  }
};

bool all_verdicts_pass(const BoundReport& rep) {
  const BoundVerdicts& v = rep.verdicts;
  return v.nikiforov06 && v.zhang && v.rw && v.theorem1 && v.pre_blowup;
}

int run_analyze(const InputFlags& in, double tol, const std::string& output,
                const std::string& out_path) {
  const std::vector<Graph> graphs = load_graphs(in);
  Sink sink(out_path);
  bool violation = false;
  if (output == "csv") sink.stream() << bound_report_csv_header() << '\n';
  for (const Graph& g : graphs) {
    const BoundReport rep = evaluate_bounds(g, tol);
    violation = violation || !all_verdicts_pass(rep);
    if (output == "json") sink.stream() << bound_report_json(rep) << '\n';
    else if (output == "csv") sink.stream() << bound_report_csv_row(rep) << '\n';
    else sink.stream() << bound_report_human(rep);
  }
  return violation ? 1 : 0;
}

int emit_summary(const CorpusSummary& summary, const std::string& output,
                 const std::string& out_path) {
  Sink sink(out_path);
  if (output == "csv") {
    throw std::invalid_argument(
        "corpus summaries support json|human; use --per-graph-csv for rows");
  }
  sink.stream() << (output == "json" ? corpus_summary_json(summary)
                                     : corpus_summary_human(summary));
  if (output == "json") sink.stream() << '\n';
  return summary.violations.empty() ? 0 : 1;
}

int run_verify(const std::string& families, const std::string& sizes, long count,
               std::uint64_t seed, double p, double tol,
               const std::string& per_graph_csv, const std::string& output,
               const std::string& out_path) {
  RandomCorpusSpec spec;
  spec.families = parse_family_list(families);
  for (long v : parse_long_list(sizes, "size")) spec.sizes.push_back(static_cast<int>(v));
  spec.count = count;
  spec.seed = seed;
  spec.p = p;
  spec.tol = tol;
  CorpusCsvWriter csv(per_graph_csv);
  const CorpusSummary summary = random_corpus_check(spec, {}, csv.hook());
  return emit_summary(summary, output, out_path);
}

int run_enumerate(int n_max, bool allow_n8, const std::string& per_graph_csv,
                  const std::string& output, const std::string& out_path) {
  CorpusCsvWriter csv(per_graph_csv);
  const CorpusSummary summary = exhaustive_check(n_max, {}, allow_n8, csv.hook());
  return emit_summary(summary, output, out_path);
}

int run_blowup(const InputFlags& in, const std::string& ts, double tol,
               const std::string& output, const std::string& out_path) {
  const std::vector<Graph> graphs = load_graphs(in);
  if (graphs.size() != 1) {
    throw std::invalid_argument("blowup takes exactly one input graph");
  }
  std::vector<int> t_list;
  for (long t : parse_long_list(ts, "blow-up factor")) {
    t_list.push_back(static_cast<int>(t));
  }
  const std::vector<BlowupRow> rows = blowup_limit_demo(graphs[0], t_list, tol);
  Sink sink(out_path);
  if (output == "json") sink.stream() << blowup_table_json(rows) << '\n';
  else if (output == "csv") sink.stream() << blowup_table_csv(rows);
  else sink.stream() << blowup_table_human(rows);
  for (const BlowupRow& r : rows) {
    if (!r.rho_scaled_check) return 1;
  }
  return 0;
}

int run_star_sweep(const std::string& ns, long from, long to, int points,
                   long cross_check_max, const std::string& output,
                   const std::string& out_path) {
  std::vector<long> grid;
  if (!ns.empty()) {
    grid = parse_long_list(ns, "n");
  } else {
    if (from < 2 || to < from || points < 2) {
      throw std::invalid_argument("need 2 <= from <= to and points >= 2");
    }
    // log-spaced grid including both endpoints
    const double ratio = static_cast<double>(to) / static_cast<double>(from);
    for (int i = 0; i < points; ++i) {
      const double x = from * std::pow(ratio, static_cast<double>(i) / (points - 1));
      const long n = std::lround(x);
      if (grid.empty() || n > grid.back()) grid.push_back(n);
    }
    if (grid.back() != to) grid.push_back(to);
  }
  const std::vector<StarSweepRow> rows = star_sweep(grid, cross_check_max);
  Sink sink(out_path);
  if (output == "json") sink.stream() << star_sweep_json(rows) << '\n';
  else if (output == "csv") sink.stream() << star_sweep_csv(rows);
  else sink.stream() << star_sweep_human(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral irregularity bound toolkit: certified rho(G) - 2m/n "
               "versus sqrt(s(G)/2) and friends"};
  app.require_subcommand(1);

  std::string output = "human";
  std::string out_path;
  double tol = 1e-9;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "output format: json, csv or human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    cmd->add_option("--out", out_path, "write output to this file");
    cmd->add_option("--tol", tol, "certified interval tolerance")
        ->check(CLI::PositiveNumber);
  };

  InputFlags analyze_in;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "certified rho interval and the bound family per graph");
  add_input_flags(analyze, &analyze_in);
  add_common(analyze);

  std::string families = "star,path,cycle,complete,complete_bipartite,circulant,gnp";
  std::string sizes = "8,16,32,50";
  long count = 100;
  std::uint64_t seed = 42;
  double gnp_p = 0.1;
  double corpus_tol = 1e-8;
  std::string per_graph_csv;
  CLI::App* verify = app.add_subcommand(
      "verify", "randomized corpus verification with deterministic seeds");
  verify->add_option("--families", families, "comma list of graph families");
  verify->add_option("--sizes", sizes, "comma list of graph sizes");
  verify->add_option("--count", count, "number of graphs")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--p", gnp_p, "gnp edge probability");
  verify->add_option("--tol", corpus_tol, "per-graph interval tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--per-graph-csv", per_graph_csv, "stream per-graph rows here");
  verify->add_option("--output", output, "summary format: json or human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  verify->add_option("--out", out_path, "write output to this file");

  int n_max = 0;
  bool allow_n8 = false;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "exhaustive check of every labeled graph on n-max vertices");
  enumerate->add_option("--n-max", n_max, "vertex count, 1..7")
      ->required()
      ->check(CLI::Range(1, 8));
  enumerate->add_flag("--allow-n8", allow_n8, "permit the 2^28-graph n = 8 run");
  enumerate->add_option("--per-graph-csv", per_graph_csv, "stream per-graph rows here");
  enumerate->add_option("--output", output, "summary format: json or human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  enumerate->add_option("--out", out_path, "write output to this file");

  InputFlags blowup_in;
  std::string ts = "2,3,5";
  CLI::App* blowup = app.add_subcommand(
      "blowup", "blow-up scaling table for one graph");
  add_input_flags(blowup, &blowup_in);
  blowup->add_option("--t", ts, "comma list of blow-up factors");
  add_common(blowup);

  std::string sweep_ns;
  long sweep_from = 5, sweep_to = 1000000;
  int sweep_points = 40;
  long cross_check_max = 10000;
  CLI::App* sweep = app.add_subcommand(
      "star-sweep", "star tightness ratios approaching sqrt(1/2)");
  sweep->add_option("--ns", sweep_ns, "explicit comma list of star orders");
  sweep->add_option("--from", sweep_from, "grid start (default 5)");
  sweep->add_option("--to", sweep_to, "grid end (default 10^6)");
  sweep->add_option("--points", sweep_points, "log-grid point count");
  sweep->add_option("--cross-check-max", cross_check_max,
                    "certify rho against the closed form up to this n");
  sweep->add_option("--output", output, "output format: json, csv or human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  sweep->add_option("--out", out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_in, tol, output, out_path);
    if (verify->parsed()) {
      return run_verify(families, sizes, count, seed, gnp_p, corpus_tol,
                        per_graph_csv, output, out_path);
    }
    if (enumerate->parsed()) {
      return run_enumerate(n_max, allow_n8, per_graph_csv, output, out_path);
    }
    if (blowup->parsed()) return run_blowup(blowup_in, ts, tol, output, out_path);
    if (sweep->parsed()) {
      return run_star_sweep(sweep_ns, sweep_from, sweep_to, sweep_points,
                            cross_check_max, output, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    // internal verification invariants; reaching here means a check refuted
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
