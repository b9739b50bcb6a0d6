// Python bindings.  Exact rationals cross the boundary as lowest-terms
// "p/q" strings, matching the JSON/CSV serialization conventions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>
#include <vector>

#include "specdev/bounds.hpp"
#include "specdev/generators.hpp"
#include "specdev/graph6.hpp"
#include "specdev/serialize.hpp"
#include "specdev/verify.hpp"

namespace py = pybind11;
using namespace specdev;

namespace {

Family family_from_string(const std::string& name) {
  if (name == "star") return Family::star;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "circulant" || name == "circulant_regular") return Family::circulant_regular;
  if (name == "gnp" || name == "gnp_random") return Family::gnp_random;
  throw std::invalid_argument("unknown family '" + name + "'");
}

Polynomial poly_from_coeffs(const std::vector<long>& constant_first) {
  std::vector<BigInt> cs(constant_first.size());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = constant_first[i];
  return Polynomial(std::move(cs));
}

std::string frac(const Rational& q) { return fraction_string(q); }

py::dict verdicts_dict(const BoundVerdicts& v) {
  py::dict d;
  d["nikiforov06"] = v.nikiforov06;
  d["zhang"] = v.zhang;
  d["rw"] = v.rw;
  d["theorem1"] = v.theorem1;
  d["pre_blowup"] = v.pre_blowup;
  d["conclusive"] = v.conclusive;
  return d;
}

}  // namespace

PYBIND11_MODULE(_specdev, m) {
  m.doc() = "certified spectral irregularity bounds: rho(G) - 2m/n vs sqrt(s/2)";

  py::register_exception<Graph6ParseError>(m, "Graph6Error", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edge_list(n, edges);
          },
          py::arg("n"), py::arg("edges"),
          "Build from vertex count and a list of (u, v) pairs.")
      .def_static("from_edge_mask", &Graph::from_edge_mask, py::arg("n"),
                  py::arg("mask"),
                  "Bit k of mask is pair k in column-major order; n <= 11.")
      .def_static(
          "from_graph6", [](const std::string& text) { return from_graph6(text); },
          py::arg("text"))
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("u"))
      .def_property_readonly("degrees", &Graph::degrees)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             g.for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count()
            << ", graph6='" << to_graph6(g) << "')";
        return out.str();
      });

  m.def("star", &make_star, py::arg("n"));
  m.def("path", &make_path, py::arg("n"));
  m.def("cycle", &make_cycle, py::arg("n"));
  m.def("complete", &make_complete, py::arg("n"));
  m.def("complete_bipartite", &make_complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("circulant", &make_circulant_regular, py::arg("n"), py::arg("k"));
  m.def("gnp", &make_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("blow_up", &blow_up, py::arg("g"), py::arg("t"),
        "t copies per vertex; n' = tn, m' = t^2 m, s' = t^2 s, rho' = t rho.");
  m.def("components", &component_vertex_sets, py::arg("g"),
        "Vertex sets of the connected components.");

  py::class_<DegreeStats>(m, "DegreeStats")
      .def_readonly("degrees", &DegreeStats::degrees)
      .def_property_readonly("avg_degree",
                             [](const DegreeStats& st) { return frac(st.avg_degree); })
      .def_property_readonly("s", [](const DegreeStats& st) { return frac(st.s); })
      .def_readonly("d_ceil", &DegreeStats::d_ceil)
      .def_readonly("partition_high", &DegreeStats::partition_high)
      .def_readonly("partition_low", &DegreeStats::partition_low)
      .def_property_readonly(
          "high_side_deviation",
          [](const DegreeStats& st) { return frac(high_side_deviation(st)); })
      .def("__repr__", [](const DegreeStats& st) {
        return "DegreeStats(avg=" + frac(st.avg_degree) + ", s=" + frac(st.s) +
               ", d_ceil=" + std::to_string(st.d_ceil) + ")";
      });
  m.def("degree_stats", &degree_stats, py::arg("g"));
  m.def(
      "half_deviation_identity_holds",
      [](const Graph& g) { return half_deviation_identity_holds(degree_stats(g)); },
      py::arg("g"), "sum over W_{>=d} of (d(v) - 2m/n) == s/2, exact.");

  py::class_<SpectralInterval>(m, "SpectralInterval")
      .def_readonly("lo", &SpectralInterval::lo)
      .def_readonly("hi", &SpectralInterval::hi)
      .def_property_readonly(
          "lo_exact", [](const SpectralInterval& s) { return frac(s.lo_exact); })
      .def_property_readonly(
          "hi_exact", [](const SpectralInterval& s) { return frac(s.hi_exact); })
      .def_readonly("converged", &SpectralInterval::converged)
      .def_readonly("iterations", &SpectralInterval::iterations)
      .def("width", &SpectralInterval::width)
      .def("mid", &SpectralInterval::mid)
      .def("__repr__", [](const SpectralInterval& s) {
        std::ostringstream out;
        out.precision(17);
        out << "SpectralInterval([" << s.lo << ", " << s.hi << "], converged="
            << (s.converged ? "True" : "False") << ")";
        return out.str();
      });
  m.def(
      "certified_interval",
      [](const Graph& g, double tol, long max_iterations) {
        return certified_interval(g, {tol, max_iterations});
      },
      py::arg("g"), py::arg("tol") = 1e-9, py::arg("max_iterations") = 0,
      "Certified enclosure of the adjacency spectral radius.");

  py::class_<RowSumCheck>(m, "RowSumCheck")
      .def_property_readonly(
          "max_row", [](const RowSumCheck& c) { return c.max_row.get_str(); })
      .def_property_readonly("budget",
                             [](const RowSumCheck& c) { return frac(c.budget); })
      .def_readonly("passed", &RowSumCheck::pass)
      .def_readonly("witness", &RowSumCheck::witness);
  m.def(
      "rowsum_check",
      [](const Graph& g) { return intermediate_rowsum_check(g); }, py::arg("g"),
      "max_u r_u(A^2 - (d-1)A) <= d + s/2, exact.");

  py::class_<CaseDecomposition>(m, "CaseDecomposition")
      .def_readonly("case_id", &CaseDecomposition::case_id)
      .def_readonly("neighbors_low", &CaseDecomposition::neighbors_low)
      .def_readonly("neighbors_high", &CaseDecomposition::neighbors_high)
      .def_property_readonly(
          "slack", [](const CaseDecomposition& c) { return frac(c.slack); });
  m.def(
      "case_decomposition",
      [](const Graph& g, int u) { return per_vertex_case_decomposition(g, u); },
      py::arg("g"), py::arg("u"),
      "Which proof case vertex u falls in, with every chain line re-checked.");

  m.def(
      "poly_row_sums",
      [](const Graph& g, const std::vector<long>& coeffs) {
        std::vector<std::string> out;
        for (const BigInt& v : poly_apply_ones(g, poly_from_coeffs(coeffs))) {
          out.push_back(v.get_str());
        }
        return out;
      },
      py::arg("g"), py::arg("coeffs"),
      "Rows of f(A) * all-ones for integer coefficients (constant first).");
  m.def(
      "lemma1_check",
      [](const Graph& g, const std::vector<long>& coeffs, double tol) {
        const SpectralInterval iv = certified_interval(g, {.tol = tol});
        const Lemma1Check chk =
            lemma1_interval_check(g, poly_from_coeffs(coeffs), iv);
        py::dict d;
        d["f_mid"] = frac(chk.f_mid);
        d["bound"] = frac(chk.bound);
        d["margin"] = frac(chk.margin);
        d["passed"] = chk.pass;
        return d;
      },
      py::arg("g"), py::arg("coeffs"), py::arg("tol") = 1e-8,
      "f(rho) <= max_u r_u(f(A)) up to the certified interval margin.");

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("n", &BoundReport::n)
      .def_readonly("m", &BoundReport::m)
      .def_property_readonly(
          "avg_degree", [](const BoundReport& r) { return frac(r.avg_degree); })
      .def_property_readonly("s", [](const BoundReport& r) { return frac(r.s); })
      .def_readonly("d_ceil", &BoundReport::d_ceil)
      .def_readonly("rho", &BoundReport::rho)
      .def_readonly("bound_nikiforov06", &BoundReport::bound_nikiforov06)
      .def_readonly("bound_zhang", &BoundReport::bound_zhang)
      .def_readonly("bound_rw", &BoundReport::bound_rw)
      .def_readonly("bound_theorem1", &BoundReport::bound_theorem1)
      .def_readonly("bound_pre_blowup", &BoundReport::bound_pre_blowup)
      .def_readonly("gap", &BoundReport::gap)
      .def_readonly("gap_ratio", &BoundReport::gap_ratio)
      .def_property_readonly(
          "verdicts", [](const BoundReport& r) { return verdicts_dict(r.verdicts); })
      .def("json", [](const BoundReport& r) { return bound_report_json(r); })
      .def("__repr__", [](const BoundReport& r) { return bound_report_human(r); });
  m.def("evaluate_bounds", &evaluate_bounds, py::arg("g"), py::arg("tol") = 1e-9,
        "Certified rho interval plus the whole bound family and verdicts.");

  py::class_<ShiftBoundResult>(m, "ShiftBoundResult")
      .def_property_readonly(
          "c_best", [](const ShiftBoundResult& r) { return frac(r.c_best); })
      .def_readonly("bound", &ShiftBoundResult::bound);
  m.def("optimized_shift_bound", &optimized_shift_bound, py::arg("g"),
        "Best half-integer shift of the quadratic row-sum bound.");

  py::class_<BlowupRow>(m, "BlowupRow")
      .def_readonly("t", &BlowupRow::t)
      .def_readonly("n", &BlowupRow::n)
      .def_readonly("m", &BlowupRow::m)
      .def_readonly("rho", &BlowupRow::rho)
      .def_readonly("rho_scaled_check", &BlowupRow::rho_scaled_check)
      .def_readonly("pre_blowup_slack", &BlowupRow::pre_blowup_slack)
      .def_readonly("gap_ratio", &BlowupRow::gap_ratio);
  m.def(
      "blowup_demo",
      [](const Graph& g, const std::vector<int>& ts, double tol) {
        return blowup_limit_demo(g, ts, tol);
      },
      py::arg("g"), py::arg("ts"), py::arg("tol") = 1e-9);

  py::class_<Violation>(m, "Violation")
      .def_readonly("graph6", &Violation::graph6)
      .def_readonly("failing_check", &Violation::failing_check)
      .def_readonly("detail", &Violation::detail)
      .def("__repr__", [](const Violation& v) {
        return "Violation(" + v.failing_check + " on " + v.graph6 + ")";
      });

  py::class_<CorpusSummary>(m, "CorpusSummary")
      .def_readonly("corpus_id", &CorpusSummary::corpus_id)
      .def_readonly("graphs_checked", &CorpusSummary::graphs_checked)
      .def_readonly("violations", &CorpusSummary::violations)
      .def_readonly("max_gap_ratio", &CorpusSummary::max_gap_ratio)
      .def_readonly("max_gap_ratio_witness", &CorpusSummary::max_gap_ratio_witness)
      .def_readonly("runtime_seconds", &CorpusSummary::runtime_seconds)
      .def("json", [](const CorpusSummary& s) { return corpus_summary_json(s); })
      .def("__repr__", [](const CorpusSummary& s) { return corpus_summary_human(s); });

  m.def(
      "exhaustive_check",
      [](int n_max, bool allow_n8) { return exhaustive_check(n_max, {}, allow_n8); },
      py::arg("n_max"), py::arg("allow_n8") = false,
      "Every labeled graph on n_max vertices through the full check set.");
  m.def(
      "random_corpus_check",
      [](const std::vector<std::string>& families, const std::vector<int>& sizes,
         long count, std::uint64_t seed, double p, double tol) {
        RandomCorpusSpec spec;
        for (const std::string& f : families) {
          spec.families.push_back(family_from_string(f));
        }
        spec.sizes = sizes;
        spec.count = count;
        spec.seed = seed;
        spec.p = p;
        spec.tol = tol;
        return random_corpus_check(spec);
      },
      py::arg("families"), py::arg("sizes"), py::arg("count"), py::arg("seed") = 0,
      py::arg("p") = 0.1, py::arg("tol") = 1e-8,
      "Deterministic generated corpus through the full check set.");

  py::class_<StarSweepRow>(m, "StarSweepRow")
      .def_readonly("n", &StarSweepRow::n)
      .def_readonly("rho", &StarSweepRow::rho)
      .def_readonly("gap", &StarSweepRow::gap)
      .def_property_readonly("s", [](const StarSweepRow& r) { return frac(r.s); })
      .def_readonly("ratio", &StarSweepRow::ratio);
  m.def(
      "star_sweep",
      [](const std::vector<long>& ns, long cross_check_max_n) {
        return star_sweep(ns, cross_check_max_n);
      },
      py::arg("ns"), py::arg("cross_check_max_n") = 10000);
  m.def("star_gap_ratio", &star_gap_ratio, py::arg("n"),
        "Closed-form (rho - 2m/n)/sqrt(s) for the star on n vertices.");
}
