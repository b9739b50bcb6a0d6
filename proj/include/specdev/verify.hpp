#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "specdev/bounds.hpp"
#include "specdev/generators.hpp"
#include "specdev/graph.hpp"
#include "specdev/rational.hpp"
#include "specdev/spectral.hpp"

namespace specdev {

// Which per-graph checks a corpus run performs.  Exact-arithmetic checks
// (rowsum, half_deviation, theorem, pre_blowup, cs_lower) can only fail on
// an implementation bug; lemma1_spot and chain_order sample numerically.
struct CheckSet {
  bool theorem = true;
  bool rowsum = true;
  bool half_deviation = true;
  bool lemma1_spot = true;
  bool pre_blowup = true;
  bool cs_lower = true;
  bool chain_order = true;
};

struct Violation {
  std::string graph6;
  std::string failing_check;
  std::string detail;
};

struct CorpusSummary {
  std::string corpus_id;
  std::int64_t graphs_checked = 0;
  // Capped at 1000 recorded entries; graphs_checked still counts everything.
  std::vector<Violation> violations;
  double max_gap_ratio = 0.0;
  std::string max_gap_ratio_witness;  // graph6 of the ratio maximizer
  double runtime_seconds = 0.0;
};

// Optional per-graph streaming (CSV plotting rows and the like).  Called
// once per checked graph, after its interval is certified.
using PerGraphHook =
    std::function<void(const Graph&, const DegreeStats&, const SpectralInterval&)>;

// Every labeled graph on exactly n_max vertices, enumerated by edge-subset
// bitmask (2^(n(n-1)/2) graphs).  n_max <= 7 unless allow_n8 raises the
// budget guard to 8 (2^28 graphs; prints a warning to stderr).
CorpusSummary exhaustive_check(int n_max, const CheckSet& checks = {},
                               bool allow_n8 = false,
                               const PerGraphHook& hook = {});

// One partition cell of the exhaustive run: masks in [mask_lo, mask_hi).
// Cells merge associatively and deterministically via merge_summaries.
CorpusSummary exhaustive_check_range(int n, std::uint64_t mask_lo,
                                     std::uint64_t mask_hi,
                                     const CheckSet& checks = {},
                                     const PerGraphHook& hook = {});

// Counters add, violation lists concatenate (respecting the cap), the max
// ratio keeps its witness.  corpus_id of the result is taken from a.
CorpusSummary merge_summaries(CorpusSummary a, const CorpusSummary& b);

// Deterministic generated corpus: graph i draws family i mod |families| and
// cycles through sizes, so every (family, size) combination appears.  gnp
// seeds derive from (seed, i); identical specs give identical summaries.
struct RandomCorpusSpec {
  std::vector<Family> families;
  std::vector<int> sizes;
  long count = 0;
  std::uint64_t seed = 0;
  double p = 0.1;    // edge probability for gnp_random members
  double tol = 1e-8; // interval tolerance per graph
};

CorpusSummary random_corpus_check(const RandomCorpusSpec& spec,
                                  const CheckSet& checks = {},
                                  const PerGraphHook& hook = {});

// Tightness study on stars K_{1,n-1}: rho = sqrt(n-1) in closed form,
// s = 2(n-1)(n-2)/n exact, ratio = gap/sqrt(s).  Rows with
// n <= cross_check_max_n are cross-checked against certified_interval.
struct StarSweepRow {
  long n = 0;
  double rho = 0.0;
  double gap = 0.0;
  Rational s;
  double ratio = 0.0;
};

std::vector<StarSweepRow> star_sweep(std::span<const long> ns,
                                     long cross_check_max_n = 10000);

// Closed-form star gap ratio; 0 for n <= 2 where s = 0.  Strictly
// increasing in n from n = 5 on, approaching sqrt(1/2) from below.
double star_gap_ratio(long n);

}  // namespace specdev
