#include "specdev/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "specdev/graph6.hpp"

namespace specdev {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double x, const char* spec = "%.15g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

ordered_json interval_fields(const SpectralInterval& iv) {
  ordered_json j;
  j["rho_lo"] = iv.lo;
  j["rho_hi"] = iv.hi;
  j["rho_lo_exact"] = fraction_string(iv.lo_exact);
  j["rho_hi_exact"] = fraction_string(iv.hi_exact);
  j["rho_converged"] = iv.converged;
  j["rho_iterations"] = iv.iterations;
  return j;
}

}  // namespace

std::string bound_report_json(const BoundReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["avg_degree"] = fraction_string(rep.avg_degree);
  j["s"] = fraction_string(rep.s);
  j["d_ceil"] = rep.d_ceil;
  j.update(interval_fields(rep.rho));
  j["bound_nikiforov06"] = rep.bound_nikiforov06;
  j["bound_zhang"] = rep.bound_zhang;
  j["bound_rw"] = rep.bound_rw;
  j["bound_theorem1"] = rep.bound_theorem1;
  j["bound_pre_blowup"] = rep.bound_pre_blowup;
  j["gap"] = rep.gap;
  j["gap_ratio"] = rep.gap_ratio;
  j["verdict_nikiforov06"] = rep.verdicts.nikiforov06;
  j["verdict_zhang"] = rep.verdicts.zhang;
  j["verdict_rw"] = rep.verdicts.rw;
  j["verdict_theorem1"] = rep.verdicts.theorem1;
  j["verdict_pre_blowup"] = rep.verdicts.pre_blowup;
  j["conclusive"] = rep.verdicts.conclusive;
  return j.dump();
}

BoundReport bound_report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  BoundReport rep;
  rep.n = j.at("n").get<long>();
  rep.m = j.at("m").get<long>();
  rep.avg_degree = parse_fraction(j.at("avg_degree").get<std::string>());
  rep.s = parse_fraction(j.at("s").get<std::string>());
  rep.d_ceil = j.at("d_ceil").get<long>();
  rep.rho.lo = j.at("rho_lo").get<double>();
  rep.rho.hi = j.at("rho_hi").get<double>();
  rep.rho.lo_exact = parse_fraction(j.at("rho_lo_exact").get<std::string>());
  rep.rho.hi_exact = parse_fraction(j.at("rho_hi_exact").get<std::string>());
  rep.rho.converged = j.at("rho_converged").get<bool>();
  rep.rho.iterations = j.at("rho_iterations").get<long>();
  rep.bound_nikiforov06 = j.at("bound_nikiforov06").get<double>();
  rep.bound_zhang = j.at("bound_zhang").get<double>();
  rep.bound_rw = j.at("bound_rw").get<double>();
  rep.bound_theorem1 = j.at("bound_theorem1").get<double>();
  rep.bound_pre_blowup = j.at("bound_pre_blowup").get<double>();
  rep.gap = j.at("gap").get<double>();
  rep.gap_ratio = j.at("gap_ratio").get<double>();
  rep.verdicts.nikiforov06 = j.at("verdict_nikiforov06").get<bool>();
  rep.verdicts.zhang = j.at("verdict_zhang").get<bool>();
  rep.verdicts.rw = j.at("verdict_rw").get<bool>();
  rep.verdicts.theorem1 = j.at("verdict_theorem1").get<bool>();
  rep.verdicts.pre_blowup = j.at("verdict_pre_blowup").get<bool>();
  rep.verdicts.conclusive = j.at("conclusive").get<bool>();
  return rep;
}

std::string bound_report_csv_header() {
  return "n,m,avg_degree,s,d_ceil,rho_lo,rho_hi,rho_lo_exact,rho_hi_exact,"
         "rho_converged,rho_iterations,bound_nikiforov06,bound_zhang,bound_rw,"
         "bound_theorem1,bound_pre_blowup,gap,gap_ratio,verdict_nikiforov06,"
         "verdict_zhang,verdict_rw,verdict_theorem1,verdict_pre_blowup,conclusive";
}

std::string bound_report_csv_row(const BoundReport& rep) {
  std::ostringstream out;
  out << rep.n << ',' << rep.m << ',' << fraction_string(rep.avg_degree) << ','
      << fraction_string(rep.s) << ',' << rep.d_ceil << ',' << fmt(rep.rho.lo)
      << ',' << fmt(rep.rho.hi) << ',' << fraction_string(rep.rho.lo_exact)
      << ',' << fraction_string(rep.rho.hi_exact) << ','
      << (rep.rho.converged ? "true" : "false") << ',' << rep.rho.iterations
      << ',' << fmt(rep.bound_nikiforov06) << ',' << fmt(rep.bound_zhang) << ','
      << fmt(rep.bound_rw) << ',' << fmt(rep.bound_theorem1) << ','
      << fmt(rep.bound_pre_blowup) << ',' << fmt(rep.gap) << ','
      << fmt(rep.gap_ratio) << ',' << (rep.verdicts.nikiforov06 ? "true" : "false")
      << ',' << (rep.verdicts.zhang ? "true" : "false") << ','
      << (rep.verdicts.rw ? "true" : "false") << ','
      << (rep.verdicts.theorem1 ? "true" : "false") << ','
      << (rep.verdicts.pre_blowup ? "true" : "false") << ','
      << (rep.verdicts.conclusive ? "true" : "false");
  return out.str();
}

std::string bound_report_human(const BoundReport& rep) {
  std::ostringstream out;
  out << "graph: n = " << rep.n << ", m = " << rep.m << "\n"
      << "  average degree 2m/n = " << fraction_string(rep.avg_degree)
      << ", degree deviation s = " << fraction_string(rep.s)
      << ", d = ceil(2m/n) = " << rep.d_ceil << "\n"
      << "  rho in [" << fmt(rep.rho.lo) << ", " << fmt(rep.rho.hi) << "]"
      << (rep.rho.converged ? "" : "  (iteration cap hit; interval still certified)")
      << "\n"
      << "  gap rho - 2m/n >= " << fmt(rep.gap) << "   gap/sqrt(s) = "
      << fmt(rep.gap_ratio) << "\n"
      << "  bounds on the gap:\n"
      << "    sqrt(s/2)     = " << fmt(rep.bound_theorem1) << "  "
      << (rep.verdicts.theorem1 ? "pass" : "FAIL") << "\n"
      << "    sqrt(2s/3)    = " << fmt(rep.bound_rw) << "  "
      << (rep.verdicts.rw ? "pass" : "FAIL") << "\n"
      << "    sqrt(9s/10)   = " << fmt(rep.bound_zhang) << "  "
      << (rep.verdicts.zhang ? "pass" : "FAIL") << "\n"
      << "    sqrt(s)       = " << fmt(rep.bound_nikiforov06) << "  "
      << (rep.verdicts.nikiforov06 ? "pass" : "FAIL") << "\n"
      << "    1 + sqrt(s/2) = " << fmt(rep.bound_pre_blowup) << "  "
      << (rep.verdicts.pre_blowup ? "pass" : "FAIL") << "\n"
      << "  verdicts " << (rep.verdicts.conclusive ? "conclusive" : "INCONCLUSIVE")
      << "\n";
  return out.str();
}

std::string corpus_summary_json(const CorpusSummary& s) {
  ordered_json j;
  j["corpus_id"] = s.corpus_id;
  j["graphs_checked"] = s.graphs_checked;
  ordered_json viols = ordered_json::array();
  for (const Violation& v : s.violations) {
    ordered_json e;
    e["graph6"] = v.graph6;
    e["failing_check"] = v.failing_check;
    e["detail"] = v.detail;
    viols.push_back(std::move(e));
  }
  j["violations"] = std::move(viols);
  j["max_gap_ratio"] = s.max_gap_ratio;
  j["max_gap_ratio_witness"] = s.max_gap_ratio_witness;
  j["runtime_seconds"] = s.runtime_seconds;
  return j.dump();
}

std::string corpus_summary_human(const CorpusSummary& s) {
  std::ostringstream out;
  out << "corpus " << s.corpus_id << ": " << s.graphs_checked
      << " graphs checked, " << s.violations.size() << " violations\n"
      << "  max gap ratio " << fmt(s.max_gap_ratio, "%.6f") << " (witness "
      << s.max_gap_ratio_witness << "), " << fmt(s.runtime_seconds, "%.2f")
      << " s\n";
  for (const Violation& v : s.violations) {
    out << "  VIOLATION " << v.failing_check << " on " << v.graph6 << ": "
        << v.detail << "\n";
  }
  return out.str();
}

namespace {

ordered_json blowup_row_json(const BlowupRow& r) {
  ordered_json j;
  j["t"] = r.t;
  j["n"] = r.n;
  j["m"] = r.m;
  j.update(interval_fields(r.rho));
  j["rho_scaled_check"] = r.rho_scaled_check;
  j["pre_blowup_slack"] = r.pre_blowup_slack;
  j["gap_ratio"] = r.gap_ratio;
  return j;
}

}  // namespace

std::string blowup_table_json(const std::vector<BlowupRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const BlowupRow& r : rows) arr.push_back(blowup_row_json(r));
  return arr.dump();
}

std::string blowup_table_csv(const std::vector<BlowupRow>& rows) {
  std::ostringstream out;
  out << "t,n,m,rho_lo,rho_hi,rho_scaled_check,pre_blowup_slack,gap_ratio\n";
  for (const BlowupRow& r : rows) {
    out << r.t << ',' << r.n << ',' << r.m << ',' << fmt(r.rho.lo) << ','
        << fmt(r.rho.hi) << ',' << (r.rho_scaled_check ? "true" : "false")
        << ',' << fmt(r.pre_blowup_slack) << ',' << fmt(r.gap_ratio) << '\n';
  }
  return out.str();
}

std::string blowup_table_human(const std::vector<BlowupRow>& rows) {
  std::ostringstream out;
  out << "blow-up scaling (rho and the gap scale by t, the +1 slack does not):\n";
  for (const BlowupRow& r : rows) {
    out << "  t = " << r.t << ": n = " << r.n << ", m = " << r.m << ", rho in ["
        << fmt(r.rho.lo, "%.9f") << ", " << fmt(r.rho.hi, "%.9f") << "], scaling "
        << (r.rho_scaled_check ? "pass" : "FAIL") << ", slack "
        << fmt(r.pre_blowup_slack, "%.6f") << ", gap ratio "
        << fmt(r.gap_ratio, "%.6f") << "\n";
  }
  return out.str();
}

std::string star_sweep_json(const std::vector<StarSweepRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const StarSweepRow& r : rows) {
    ordered_json j;
    j["n"] = r.n;
    j["rho"] = r.rho;
    j["gap"] = r.gap;
    j["s"] = fraction_string(r.s);
    j["ratio"] = r.ratio;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

std::string star_sweep_csv(const std::vector<StarSweepRow>& rows) {
  std::ostringstream out;
  out << "n,rho,gap,s,ratio\n";
  for (const StarSweepRow& r : rows) {
    out << r.n << ',' << fmt(r.rho) << ',' << fmt(r.gap) << ','
        << fraction_string(r.s) << ',' << fmt(r.ratio, "%.6f") << '\n';
  }
  return out.str();
}

std::string star_sweep_human(const std::vector<StarSweepRow>& rows) {
  std::ostringstream out;
  out << "star K_{1,n-1} tightness sweep (ratio -> sqrt(1/2) ~ 0.707107):\n";
  for (const StarSweepRow& r : rows) {
    out << "  n = " << r.n << ": rho = " << fmt(r.rho, "%.6f") << ", gap = "
        << fmt(r.gap, "%.6f") << ", s = " << fraction_string(r.s)
        << ", ratio = " << fmt(r.ratio, "%.6f") << "\n";
  }
  return out.str();
}

std::string per_graph_csv_header() {
  return "graph6,n,m,avg_degree,s,rho_lo,rho_hi,gap,gap_ratio";
}

std::string per_graph_csv_row(const Graph& g, const DegreeStats& st,
                              const SpectralInterval& iv) {
  const double avg_d = to_double(st.avg_degree);
  const double s_d = to_double(st.s);
  const double gap = std::max(0.0, iv.lo - avg_d);
  const double ratio = st.s > 0 ? gap / std::sqrt(s_d) : 0.0;
  std::ostringstream out;
  out << to_graph6(g) << ',' << g.vertex_count() << ',' << g.edge_count() << ','
      << fraction_string(st.avg_degree) << ',' << fraction_string(st.s) << ','
      << fmt(iv.lo) << ',' << fmt(iv.hi) << ',' << fmt(gap) << ','
      << fmt(ratio);
  return out.str();
}

}  // namespace specdev
