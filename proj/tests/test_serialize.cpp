#include <array>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "specdev/generators.hpp"
#include "specdev/serialize.hpp"

using namespace specdev;

namespace {

int count_fields(const std::string& line) {
  int fields = 1;
  for (char c : line) {
    if (c == ',') ++fields;
  }
  return fields;
}

}  // namespace

TEST_CASE("bound report JSON round-trips bit-exactly") {
  for (const Graph& g : {make_star(5), make_path(7), make_complete(4),
                         make_gnp(9, 0.4, 17)}) {
    const BoundReport rep = evaluate_bounds(g);
    const std::string text = bound_report_json(rep);
    const BoundReport back = bound_report_from_json(text);

    CHECK(back.n == rep.n);
    CHECK(back.m == rep.m);
    CHECK(back.avg_degree == rep.avg_degree);
    CHECK(back.s == rep.s);
    CHECK(back.d_ceil == rep.d_ceil);
    CHECK(back.rho.lo == rep.rho.lo);  // shortest round-trip doubles
    CHECK(back.rho.hi == rep.rho.hi);
    CHECK(back.rho.lo_exact == rep.rho.lo_exact);
    CHECK(back.rho.hi_exact == rep.rho.hi_exact);
    CHECK(back.rho.iterations == rep.rho.iterations);
    CHECK(back.gap == rep.gap);
    CHECK(back.gap_ratio == rep.gap_ratio);
    CHECK(back.bound_theorem1 == rep.bound_theorem1);
    CHECK(back.verdicts.theorem1 == rep.verdicts.theorem1);
    CHECK(back.verdicts.conclusive == rep.verdicts.conclusive);

    // serializing the parsed report reproduces the exact text
    CHECK(bound_report_json(back) == text);
    // single line for JSONL concatenation
    CHECK(text.find('\n') == std::string::npos);
  }
}

TEST_CASE("bound report JSON carries exact fractions") {
  const std::string text = bound_report_json(evaluate_bounds(make_star(5)));
  CHECK(text.find("\"s\":\"24/5\"") != std::string::npos);
  CHECK(text.find("\"avg_degree\":\"8/5\"") != std::string::npos);
  CHECK(text.find("\"verdict_theorem1\":true") != std::string::npos);

  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("n") == 5);
  CHECK(j.at("d_ceil") == 2);
}

TEST_CASE("bound report CSV shape") {
  const int header_fields = count_fields(bound_report_csv_header());
  for (const Graph& g : {make_star(5), make_gnp(6, 0.5, 3)}) {
    const std::string row = bound_report_csv_row(evaluate_bounds(g));
    CHECK(count_fields(row) == header_fields);
  }
  const std::string star_row = bound_report_csv_row(evaluate_bounds(make_star(5)));
  CHECK(star_row.find("24/5") != std::string::npos);
  CHECK(star_row.find("8/5") != std::string::npos);
}

TEST_CASE("human rendering flags failures textually") {
  const std::string ok = bound_report_human(evaluate_bounds(make_star(6)));
  CHECK(ok.find("pass") != std::string::npos);
  CHECK(ok.find("FAIL") == std::string::npos);
  CHECK(ok.find("conclusive") != std::string::npos);
}

TEST_CASE("corpus summary JSON") {
  const CorpusSummary sum = exhaustive_check(4);
  const std::string text = corpus_summary_json(sum);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("corpus_id") == "exhaustive_n4");
  CHECK(j.at("graphs_checked") == 64);
  CHECK(j.at("violations").is_array());
  CHECK(j.at("violations").empty());
  CHECK(j.at("max_gap_ratio_witness") == "C_");

  CorpusSummary with_violation = sum;
  with_violation.violations.push_back({"C_", "theorem", "fabricated for rendering"});
  const auto j2 = nlohmann::json::parse(corpus_summary_json(with_violation));
  CHECK(j2.at("violations").size() == 1);
  CHECK(j2.at("violations")[0].at("failing_check") == "theorem");

  const std::string human = corpus_summary_human(with_violation);
  CHECK(human.find("VIOLATION theorem on C_") != std::string::npos);
}

TEST_CASE("blow-up table emitters") {
  const std::array<int, 2> ts{1, 2};
  const auto rows = blowup_limit_demo(make_path(3), ts);

  const auto j = nlohmann::json::parse(blowup_table_json(rows));
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("t") == 1);
  CHECK(j[1].at("n") == 6);
  CHECK(j[1].at("m") == 8);
  CHECK(j[1].at("rho_scaled_check") == true);

  const std::string csv = blowup_table_csv(rows);
  std::istringstream lines(csv);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "t,n,m,rho_lo,rho_hi,rho_scaled_check,pre_blowup_slack,gap_ratio");
  CHECK(count_fields(row1) == count_fields(header));
  CHECK(row2.substr(0, 6) == "2,6,8,");

  CHECK(blowup_table_human(rows).find("scaling pass") != std::string::npos);
}

TEST_CASE("star sweep emitters") {
  const std::array<long, 2> ns{5, 50};
  const auto rows = star_sweep(ns);

  const auto j = nlohmann::json::parse(star_sweep_json(rows));
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("n") == 5);
  CHECK(j[0].at("s") == "24/5");

  const std::string csv = star_sweep_csv(rows);
  std::istringstream lines(csv);
  std::string header, row1;
  std::getline(lines, header);
  std::getline(lines, row1);
  CHECK(header == "n,rho,gap,s,ratio");
  CHECK(count_fields(row1) == 5);
  CHECK(row1.find("24/5") != std::string::npos);
  // ratios render with 6 decimals
  CHECK(row1.find("0.182574") != std::string::npos);

  CHECK(star_sweep_human(rows).find("0.182574") != std::string::npos);
}

TEST_CASE("per-graph plotting rows") {
  const Graph g = make_star(5);
  const DegreeStats st = degree_stats(g);
  const SpectralInterval iv = certified_interval(g);
  const std::string row = per_graph_csv_row(g, st, iv);
  CHECK(count_fields(row) == count_fields(per_graph_csv_header()));
  CHECK(row.substr(0, 4) == "Ds_,");
  CHECK(row.find("24/5") != std::string::npos);
}
