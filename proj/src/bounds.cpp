#include "specdev/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace specdev {

namespace {

Polynomial rowsum_polynomial(long d) {
  // f(x) = x^2 - (d-1)x
  return Polynomial(std::vector<BigInt>{BigInt(0), BigInt(1 - d), BigInt(1)});
}

void chain_require(bool ok, const char* line) {
  // The case chains re-derive a proven inequality; a failure here means the
  // build itself is broken, not the input.
  if (!ok) throw std::logic_error(std::string("case chain violated: ") + line);
}

}  // namespace

RowSumCheck intermediate_rowsum_check(const Graph& g, const DegreeStats& st) {
  std::vector<BigInt> rows = poly_apply_ones(g, rowsum_polynomial(st.d_ceil));
  RowSumCheck out;
  int argmax = 0;
  for (int u = 1; u < g.vertex_count(); ++u) {
    if (rows[u] > rows[argmax]) argmax = u;
  }
  out.max_row = rows[argmax];
  out.budget = Rational(st.d_ceil) + st.s / 2;
  out.pass = Rational(out.max_row) <= out.budget;
  out.witness = out.pass ? -1 : argmax;
  return out;
}

RowSumCheck intermediate_rowsum_check(const Graph& g) {
  return intermediate_rowsum_check(g, degree_stats(g));
}

CaseDecomposition per_vertex_case_decomposition(const Graph& g,
                                                const DegreeStats& st, int u) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n) {
    throw std::invalid_argument("vertex " + std::to_string(u) +
                                " out of range [0," + std::to_string(n) + ")");
  }
  const long d = st.d_ceil;
  const long deg_u = g.degree(u);

  std::int64_t ru_a2 = 0;       // sum over N(u) of d(v)
  std::int64_t low_sum = 0;     // degree sum of N(u) ∩ W_{<=d-1}
  std::int64_t excess_nb = 0;   // sum over N(u) ∩ W_{>=d} of d(v) - d
  long low_cnt = 0, high_cnt = 0;
  g.for_each_neighbor(u, [&](int v) {
    const long dv = g.degree(v);
    ru_a2 += dv;
    if (dv >= d) {
      ++high_cnt;
      excess_nb += dv - d;
    } else {
      ++low_cnt;
      low_sum += dv;
    }
  });

  std::int64_t excess_total = 0;  // sum over W_{>=d} of d(v) - d
  for (int v : st.partition_high) excess_total += g.degree(v) - d;

  const Rational half_s = st.s / 2;
  const Rational budget = Rational(d) + half_s;

  // Shared opening lines: split the neighbor degree sum, then bound the low
  // side by d-1 per vertex and rewrite the high side around d.
  const std::int64_t high_sum = ru_a2 - low_sum;
  const std::int64_t line2 =
      (d - 1) * low_cnt + excess_nb + static_cast<std::int64_t>(d) * high_cnt;
  chain_require(low_sum <= (d - 1) * low_cnt, "low-side degrees exceed d-1 each");
  chain_require(high_sum == excess_nb + static_cast<std::int64_t>(d) * high_cnt,
                "high-side rewrite is not an identity");
  chain_require(ru_a2 <= line2, "split bound below the row sum");

  CaseDecomposition out;
  out.neighbors_low = low_cnt;
  out.neighbors_high = high_cnt;

  if (deg_u <= d - 1) {
    out.case_id = 1;
    // u is outside W_{>=d}, so the neighbor excess extends to the full set.
    const std::int64_t line3 = static_cast<std::int64_t>(d) * deg_u + excess_total;
    chain_require(line2 <= line3, "extension to W_{>=d} shrank the bound");
    const Rational line4 = Rational((d - 1) * deg_u + (d - 1)) + half_s;
    chain_require(Rational(BigInt(line3)) <= line4,
                  "d*d(u) + excess exceeds (d-1)d(u) + d-1 + s/2");
    const Rational line5 = Rational((d - 1) * deg_u) + budget;
    chain_require(line4 < line5, "strict final step failed");
  } else {
    out.case_id = 2;
    // u itself sits in W_{>=d}; its own excess d(u)-d leaves the sum.
    const std::int64_t line3 =
        static_cast<std::int64_t>(d) * deg_u + excess_total - (deg_u - d);
    chain_require(line2 <= line3, "extension to W_{>=d} minus u shrank the bound");
    const std::int64_t line4 =
        (d - 1) * deg_u + deg_u + excess_total - (deg_u - d);
    chain_require(line3 == line4, "d*d(u) regrouping is not an identity");
    const std::int64_t line5 = (d - 1) * deg_u + d + excess_total;
    chain_require(line4 == line5, "excess regrouping is not an identity");
    const Rational line6 = Rational((d - 1) * deg_u) + budget;
    chain_require(Rational(BigInt(line5)) <= line6, "total excess exceeds s/2");
  }

  out.slack = budget - Rational(BigInt(ru_a2 - (d - 1) * deg_u));
  chain_require(out.slack >= 0, "negative slack");
  return out;
}

CaseDecomposition per_vertex_case_decomposition(const Graph& g, int u) {
  return per_vertex_case_decomposition(g, degree_stats(g), u);
}

BoundReport evaluate_bounds(const Graph& g, double tol) {
  DegreeStats st = degree_stats(g);

  BoundReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.avg_degree = st.avg_degree;
  rep.s = st.s;
  rep.d_ceil = st.d_ceil;
  rep.rho = certified_interval(g, {.tol = tol});

  const double s_d = to_double(st.s);
  const double avg_d = to_double(st.avg_degree);
  rep.bound_nikiforov06 = std::sqrt(s_d);
  rep.bound_zhang = std::sqrt(0.9 * s_d);
  rep.bound_rw = std::sqrt(2.0 * s_d / 3.0);
  rep.bound_theorem1 = std::sqrt(0.5 * s_d);
  rep.bound_pre_blowup = 1.0 + rep.bound_theorem1;

  rep.gap = std::max(0.0, rep.rho.lo - avg_d);
  rep.gap_ratio = st.s > 0 ? rep.gap / std::sqrt(s_d) : 0.0;

  const double lhs = rep.rho.lo - avg_d;
  const double w = rep.rho.width();
  rep.verdicts.nikiforov06 = lhs <= rep.bound_nikiforov06 + w;
  rep.verdicts.zhang = lhs <= rep.bound_zhang + w;
  rep.verdicts.rw = lhs <= rep.bound_rw + w;
  rep.verdicts.pre_blowup = lhs <= rep.bound_pre_blowup + w;

  // Headline verdict in exact arithmetic: (lo - 2m/n)^2 <= s/2.  lo_exact is
  // clamped at 2m/n, so the gap is a nonnegative rational.
  const Rational gap_exact = rep.rho.lo_exact - st.avg_degree;
  rep.verdicts.theorem1 =
      lhs <= rep.bound_theorem1 + w && 2 * gap_exact * gap_exact <= st.s;

  rep.verdicts.conclusive = rep.rho.converged;
  return rep;
}

std::vector<BlowupRow> blowup_limit_demo(const Graph& g, std::span<const int> ts,
                                         double tol) {
  const SpectralInterval base = certified_interval(g, {.tol = tol});
  std::vector<BlowupRow> rows;
  rows.reserve(ts.size());
  for (int t : ts) {
    const Graph gt = blow_up(g, t);
    DegreeStats st = degree_stats(gt);
    BlowupRow row;
    row.t = t;
    row.n = gt.vertex_count();
    row.m = gt.edge_count();
    row.rho = certified_interval(gt, {.tol = tol});
    row.rho_scaled_check = std::abs(row.rho.mid() - t * base.mid()) <=
                           row.rho.width() + t * base.width() + 1e-12;
    const double s_d = to_double(st.s);
    const double avg_d = to_double(st.avg_degree);
    row.pre_blowup_slack = 1.0 + std::sqrt(0.5 * s_d) - (row.rho.mid() - avg_d);
    row.gap_ratio =
        st.s > 0 ? std::max(0.0, row.rho.lo - avg_d) / std::sqrt(s_d) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

ShiftBoundResult optimized_shift_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::int64_t> a2_rows(n, 0);
  for (int u = 0; u < n; ++u) {
    std::int64_t sum = 0;
    g.for_each_neighbor(u, [&](int v) { sum += g.degree(v); });
    a2_rows[u] = sum;
  }

  ShiftBoundResult best;
  bool have = false;
  // c = k/2 for k = 0..2*max_degree; contains every integer shift up to the
  // maximum degree, in particular d-1.
  for (long k = 0; k <= 2L * g.max_degree(); ++k) {
    std::int64_t doubled_max = 0;  // max_u 2*r_u(A^2 - (k/2)A), clamped at 0
    for (int u = 0; u < n; ++u) {
      doubled_max = std::max(doubled_max, 2 * a2_rows[u] - k * g.degree(u));
    }
    const double bound =
        shifted_quadratic_root(0.5 * k, 0.5 * static_cast<double>(doubled_max));
    if (!have || bound < best.bound) {
      have = true;
      best.bound = bound;
      best.c_best = Rational(k, 2);
      best.c_best.canonicalize();
    }
  }
  return best;
}

}  // namespace specdev
