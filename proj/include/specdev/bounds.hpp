#pragma once

#include <span>
#include <vector>

#include "specdev/graph.hpp"
#include "specdev/rational.hpp"
#include "specdev/spectral.hpp"

namespace specdev {

// The core row-sum inequality: max_u r_u(A^2 - (d-1)A) <= d + s/2 with
// d = ceil(2m/n).  Everything exact; a failure would refute the theorem, so
// witness records the offending vertex for inspection.
struct RowSumCheck {
  BigInt max_row;
  Rational budget;
  bool pass = false;
  int witness = -1;  // -1 when pass
};

RowSumCheck intermediate_rowsum_check(const Graph& g);
RowSumCheck intermediate_rowsum_check(const Graph& g, const DegreeStats& st);

// One vertex of the two-case proof of the row-sum inequality.  Case 1 is
// d(u) <= d-1, case 2 is d(u) >= d.  Every intermediate line of the case's
// inequality chain is re-evaluated exactly and asserted internally; a
// violation throws (it cannot occur for a correct build).
struct CaseDecomposition {
  int case_id = 0;
  long neighbors_low = 0;   // |N(u) ∩ W_{<=d-1}|
  long neighbors_high = 0;  // |N(u) ∩ W_{>=d}|
  Rational slack;           // budget - r_u(A^2 - (d-1)A), always >= 0
};

CaseDecomposition per_vertex_case_decomposition(const Graph& g, int u);
CaseDecomposition per_vertex_case_decomposition(const Graph& g,
                                                const DegreeStats& st, int u);

struct BoundVerdicts {
  bool nikiforov06 = false;  // sqrt(s)
  bool zhang = false;        // sqrt(9s/10)
  bool rw = false;           // sqrt(2s/3)
  bool theorem1 = false;     // sqrt(s/2), exact squared comparison
  bool pre_blowup = false;   // 1 + sqrt(s/2)
  bool conclusive = false;   // false when the rho interval failed to converge
};

// Everything needed to compare rho(G) - 2m/n against the bound family.
// gap uses rho.lo, so gap <= true gap + 0 and gap_ratio is a certified
// lower estimate of (rho - avg)/sqrt(s).
struct BoundReport {
  long n = 0;
  long m = 0;
  Rational avg_degree;
  Rational s;
  long d_ceil = 0;
  SpectralInterval rho;
  double bound_nikiforov06 = 0.0;
  double bound_zhang = 0.0;
  double bound_rw = 0.0;
  double bound_theorem1 = 0.0;
  double bound_pre_blowup = 0.0;
  double gap = 0.0;
  double gap_ratio = 0.0;
  BoundVerdicts verdicts;
};

// Verdict for bound B is a certified non-refutation: rho.lo - avg <= B + width.
// The headline verdict additionally checks (rho.lo_exact - 2m/n)^2 <= s/2 in
// exact rationals, which can only fail if the theorem itself is false.
BoundReport evaluate_bounds(const Graph& g, double tol = 1e-9);

// One blow-up factor of the limit argument: G^(t) must satisfy
// rho(G^(t)) = t*rho(G) within combined interval widths, and the gap ratio
// (rho - avg)/sqrt(s) is invariant in t while the "+1" slack of the
// pre-blow-up bound stays put, shrinking relative to the t-scaled terms.
struct BlowupRow {
  long t = 0;
  long n = 0;
  long m = 0;
  SpectralInterval rho;
  bool rho_scaled_check = false;
  double pre_blowup_slack = 0.0;  // (1 + sqrt(s_t/2)) - (mid(rho_t) - avg_t)
  double gap_ratio = 0.0;
};

std::vector<BlowupRow> blowup_limit_demo(const Graph& g, std::span<const int> ts,
                                         double tol = 1e-9);

// Minimizes the root of x^2 - cx - max_u r_u(A^2 - cA) over half-integer
// shifts c in [0, max_degree].  The grid contains the default shift d-1, so
// the result never exceeds the d-1 bound.
struct ShiftBoundResult {
  Rational c_best;
  double bound = 0.0;
};

ShiftBoundResult optimized_shift_bound(const Graph& g);

}  // namespace specdev
