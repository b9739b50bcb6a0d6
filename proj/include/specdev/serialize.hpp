#pragma once

#include <string>
#include <vector>

#include "specdev/bounds.hpp"
#include "specdev/verify.hpp"

namespace specdev {

// Serialization conventions, shared by every emitter here:
//   - rationals are lowest-terms "p/q" strings (exact, diff-friendly),
//   - JSON doubles use shortest round-trip decimals and parse back
//     bit-exactly,
//   - CSV doubles carry 15 significant digits,
//   - JSON objects are single-line, so multi-report output is JSONL.

std::string bound_report_json(const BoundReport& rep);
BoundReport bound_report_from_json(const std::string& text);

std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& rep);
std::string bound_report_human(const BoundReport& rep);

std::string corpus_summary_json(const CorpusSummary& s);
std::string corpus_summary_human(const CorpusSummary& s);

std::string blowup_table_json(const std::vector<BlowupRow>& rows);
std::string blowup_table_csv(const std::vector<BlowupRow>& rows);
std::string blowup_table_human(const std::vector<BlowupRow>& rows);

// Star sweep ratios are reported to 6 decimals in CSV and human output;
// the JSON form keeps full precision for round-tripping.
std::string star_sweep_json(const std::vector<StarSweepRow>& rows);
std::string star_sweep_csv(const std::vector<StarSweepRow>& rows);
std::string star_sweep_human(const std::vector<StarSweepRow>& rows);

// Per-graph plotting rows for corpus streaming hooks.
std::string per_graph_csv_header();
std::string per_graph_csv_row(const Graph& g, const DegreeStats& st,
                              const SpectralInterval& iv);

}  // namespace specdev
