#include "specdev/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include "specdev/graph6.hpp"

namespace specdev {

namespace {

constexpr std::size_t kMaxRecordedViolations = 1000;
constexpr double kCorpusTol = 1e-8;

void record_violation(CorpusSummary& out, const Graph& g, const char* check,
                      std::string detail) {
  if (out.violations.size() >= kMaxRecordedViolations) return;
  out.violations.push_back({to_graph6(g), check, std::move(detail)});
}

// The sampled polynomial trio for row-sum lemma spot checks: the proof's
// own instance x^2 - (d-1)x, plus a cubic and a negative-leading quadratic
// to exercise both signs.
std::vector<Polynomial> lemma1_spot_polynomials(long d_ceil) {
  return {
      Polynomial(std::vector<BigInt>{BigInt(0), BigInt(1 - d_ceil), BigInt(1)}),
      Polynomial{1, -2, 0, 1},
      Polynomial{3, 0, -1},
  };
}

void run_graph_checks(const Graph& g, bool lemma1_now, double tol,
                      const CheckSet& checks, const PerGraphHook& hook,
                      CorpusSummary& out) {
  const DegreeStats st = degree_stats(g);

  if (checks.half_deviation && !half_deviation_identity_holds(st)) {
    record_violation(out, g, "half_deviation",
                     "high-side deviation " + fraction_string(high_side_deviation(st)) +
                         " != s/2 with s = " + fraction_string(st.s));
  }

  if (checks.rowsum) {
    const RowSumCheck rc = intermediate_rowsum_check(g, st);
    if (!rc.pass) {
      record_violation(out, g, "rowsum",
                       "row " + rc.max_row.get_str() + " at vertex " +
                           std::to_string(rc.witness) + " exceeds budget " +
                           fraction_string(rc.budget));
    }
  }

  const SpectralInterval iv = certified_interval(g, {.tol = tol});
  if (!iv.converged) {
    record_violation(out, g, "interval_convergence",
                     "width " + fraction_string(iv.width_exact()) + " after " +
                         std::to_string(iv.iterations) + " iterations");
  }

  const Rational gap_exact = iv.lo_exact - st.avg_degree;
  if (checks.theorem && !(2 * gap_exact * gap_exact <= st.s)) {
    record_violation(out, g, "theorem",
                     "2*(rho_lo - avg)^2 = " +
                         fraction_string(2 * gap_exact * gap_exact) +
                         " exceeds s = " + fraction_string(st.s));
  }

  if (checks.pre_blowup) {
    const Rational shifted = gap_exact - 1;
    const bool ok = gap_exact <= 1 || 2 * shifted * shifted <= st.s;
    if (!ok) {
      record_violation(out, g, "pre_blowup",
                       "rho_lo - avg = " + fraction_string(gap_exact) +
                           " exceeds 1 + sqrt(s/2), s = " + fraction_string(st.s));
    }
  }

  const double avg_d = to_double(st.avg_degree);
  if (checks.cs_lower) {
    const bool ok = iv.lo_exact >= st.avg_degree && iv.hi >= avg_d;
    if (!ok) {
      record_violation(out, g, "cs_lower",
                       "interval [" + fraction_string(iv.lo_exact) + ", " +
                           fraction_string(iv.hi_exact) + "] below average " +
                           fraction_string(st.avg_degree));
    }
  }

  const double s_d = to_double(st.s);
  if (checks.chain_order && st.s > 0) {
    const double b_half = std::sqrt(0.5 * s_d);
    const double b_twothirds = std::sqrt(2.0 * s_d / 3.0);
    const double b_ninetenths = std::sqrt(0.9 * s_d);
    const double b_one = std::sqrt(s_d);
    if (!(b_half < b_twothirds && b_twothirds < b_ninetenths && b_ninetenths < b_one)) {
      record_violation(out, g, "chain_order", "constant chain not strict at s = " +
                                                  fraction_string(st.s));
    }
  }

  if (checks.lemma1_spot && lemma1_now) {
    for (const Polynomial& f : lemma1_spot_polynomials(st.d_ceil)) {
      const Lemma1Check lc = lemma1_interval_check(g, f, iv);
      if (!lc.pass) {
        record_violation(out, g, "lemma1",
                         "f(mid) = " + fraction_string(lc.f_mid) + " exceeds bound " +
                             fraction_string(lc.bound) + " + margin " +
                             fraction_string(lc.margin));
      }
    }
  }

  if (st.s > 0) {
    const double ratio = std::max(0.0, iv.lo - avg_d) / std::sqrt(s_d);
    if (ratio > out.max_gap_ratio) {
      out.max_gap_ratio = ratio;
      out.max_gap_ratio_witness = to_graph6(g);
    }
  }

  if (hook) hook(g, st, iv);
  ++out.graphs_checked;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CorpusSummary exhaustive_check_range(int n, std::uint64_t mask_lo,
                                     std::uint64_t mask_hi,
                                     const CheckSet& checks,
                                     const PerGraphHook& hook) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= 8");
  }
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = 1ull << pairs;
  if (mask_lo > mask_hi || mask_hi > total) {
    throw std::invalid_argument("mask range outside [0, 2^" + std::to_string(pairs) + "]");
  }

  const auto t0 = std::chrono::steady_clock::now();
  CorpusSummary out;
  out.corpus_id = "exhaustive_n" + std::to_string(n) + ":" +
                  std::to_string(mask_lo) + "-" + std::to_string(mask_hi);
  for (std::uint64_t mask = mask_lo; mask < mask_hi; ++mask) {
    const Graph g = Graph::from_edge_mask(n, mask);
    run_graph_checks(g, mask % 997 == 0, kCorpusTol, checks, hook, out);
  }
  out.runtime_seconds = seconds_since(t0);
  return out;
}

CorpusSummary merge_summaries(CorpusSummary a, const CorpusSummary& b) {
  a.graphs_checked += b.graphs_checked;
  for (const Violation& v : b.violations) {
    if (a.violations.size() >= kMaxRecordedViolations) break;
    a.violations.push_back(v);
  }
  if (b.max_gap_ratio > a.max_gap_ratio) {
    a.max_gap_ratio = b.max_gap_ratio;
    a.max_gap_ratio_witness = b.max_gap_ratio_witness;
  }
  a.runtime_seconds += b.runtime_seconds;
  return a;
}

CorpusSummary exhaustive_check(int n_max, const CheckSet& checks, bool allow_n8,
                               const PerGraphHook& hook) {
  if (n_max < 1) throw std::invalid_argument("exhaustive check needs n_max >= 1");
  if (n_max > 8) {
    throw std::invalid_argument("exhaustive check caps at n_max = 8");
  }
  if (n_max == 8) {
    if (!allow_n8) {
      throw std::invalid_argument(
          "n_max = 8 enumerates 2^28 graphs; pass the override to allow it");
    }
    std::cerr << "warning: exhaustive n = 8 enumerates 268,435,456 graphs; "
                 "expect a long run\n";
  }

  const std::uint64_t total = 1ull << (n_max * (n_max - 1) / 2);
  constexpr std::uint64_t kChunk = 1ull << 14;
  CorpusSummary out;
  for (std::uint64_t lo = 0; lo < total; lo += kChunk) {
    const std::uint64_t hi = std::min(total, lo + kChunk);
    CorpusSummary part = exhaustive_check_range(n_max, lo, hi, checks, hook);
    out = merge_summaries(std::move(out), part);
  }
  out.corpus_id = "exhaustive_n" + std::to_string(n_max);
  return out;
}

namespace {

Graph corpus_member(Family family, int size, double p, std::uint64_t seed, long index) {
  switch (family) {
    case Family::star: return make_star(size);
    case Family::path: return make_path(size);
    case Family::cycle: return make_cycle(size);
    case Family::complete: return make_complete(size);
    case Family::complete_bipartite:
      return make_complete_bipartite(size / 2, size - size / 2);
    case Family::circulant_regular: {
      const int k = (std::min(size - 1, 6) / 2) * 2;  // even, < size
      return make_circulant_regular(size, k);
    }
    case Family::gnp_random:
      return make_gnp(size, p, mix64(seed + static_cast<std::uint64_t>(index)));
  }
  throw std::invalid_argument("corpus: unknown family");
}

void validate_corpus_combo(Family family, int size) {
  const char* need = nullptr;
  switch (family) {
    case Family::cycle:
      if (size < 3) need = "cycle members need size >= 3";
      break;
    case Family::complete_bipartite:
      if (size < 2) need = "complete_bipartite members need size >= 2";
      break;
    case Family::circulant_regular:
      if (size < 1) need = "circulant members need size >= 1";
      break;
    default:
      if (size < 1) need = "sizes must be >= 1";
      break;
  }
  if (need) {
    throw std::invalid_argument(std::string("corpus: ") + need + " (got " +
                                std::to_string(size) + ")");
  }
}

}  // namespace

CorpusSummary random_corpus_check(const RandomCorpusSpec& spec,
                                  const CheckSet& checks,
                                  const PerGraphHook& hook) {
  if (spec.count < 1) throw std::invalid_argument("corpus: count must be >= 1");
  if (spec.families.empty()) throw std::invalid_argument("corpus: no families given");
  if (spec.sizes.empty()) throw std::invalid_argument("corpus: no sizes given");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw std::invalid_argument("corpus: p must lie in [0, 1]");
  }
  if (!(spec.tol > 0)) throw std::invalid_argument("corpus: tol must be positive");
  for (Family f : spec.families) {
    for (int size : spec.sizes) validate_corpus_combo(f, size);
  }

  const auto t0 = std::chrono::steady_clock::now();
  CorpusSummary out;
  out.corpus_id = "random:seed=" + std::to_string(spec.seed) +
                  ":count=" + std::to_string(spec.count);
  const std::size_t nf = spec.families.size();
  for (long i = 0; i < spec.count; ++i) {
    const Family family = spec.families[static_cast<std::size_t>(i) % nf];
    const int size =
        spec.sizes[(static_cast<std::size_t>(i) / nf) % spec.sizes.size()];
    const Graph g = corpus_member(family, size, spec.p, spec.seed, i);
    run_graph_checks(g, i % 13 == 0, spec.tol, checks, hook, out);
  }
  out.runtime_seconds = seconds_since(t0);
  return out;
}

double star_gap_ratio(long n) {
  if (n <= 2) return 0.0;
  const double nm1 = static_cast<double>(n - 1);
  const double gap = std::sqrt(nm1) - 2.0 * nm1 / static_cast<double>(n);
  const double s = 2.0 * nm1 * static_cast<double>(n - 2) / static_cast<double>(n);
  return gap / std::sqrt(s);
}

std::vector<StarSweepRow> star_sweep(std::span<const long> ns,
                                     long cross_check_max_n) {
  for (long n : ns) {
    if (n < 2) {
      throw std::invalid_argument("star sweep needs n >= 2 (s = 0 below that)");
    }
  }

  std::vector<StarSweepRow> rows;
  rows.reserve(ns.size());
  for (long n : ns) {
    StarSweepRow row;
    row.n = n;
    row.rho = std::sqrt(static_cast<double>(n - 1));
    const double avg = 2.0 * static_cast<double>(n - 1) / static_cast<double>(n);
    row.gap = std::max(0.0, row.rho - avg);
    row.s = Rational(BigInt(2) * BigInt(n - 1) * BigInt(n - 2), BigInt(n));
    row.s.canonicalize();
    row.ratio = row.s > 0 ? row.gap / std::sqrt(to_double(row.s)) : 0.0;

    if (n <= cross_check_max_n && n <= kMaxVertices) {
      const SpectralInterval iv =
          certified_interval(make_star(static_cast<int>(n)), {.tol = 1e-8});
      if (!(std::abs(row.rho - iv.mid()) <= 0.5 * iv.width() + 1e-8)) {
        throw std::logic_error("star closed form disagrees with certified interval at n = " +
                               std::to_string(n));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace specdev
