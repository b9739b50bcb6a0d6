#pragma once

#include <vector>

#include "specdev/graph.hpp"
#include "specdev/polynomial.hpp"
#include "specdev/rational.hpp"

namespace specdev {

// f(A)*1 via Horner, using only matrix-vector products (A^2 is never formed).
// Entry u is the u-th row sum of f(A); exact integers throughout.
std::vector<BigInt> poly_apply_ones(const Graph& g, const Polynomial& f);

// max_u (f(A)*1)_u.  For every polynomial f, f(rho(G)) <= this value.
BigInt row_sum_poly_bound(const Graph& g, const Polynomial& f);

// Certified enclosure lo <= rho(G) <= hi.  The exact endpoints are the
// certificate: lo_exact is a Rayleigh quotient x'Ax/x'x of an explicit
// integer vector, hi_exact a Collatz-Wielandt ratio max_i (Ax)_i/x_i of a
// strictly positive per-component integer vector.  The doubles are the exact
// values rounded outward.
struct SpectralInterval {
  double lo = 0.0;
  double hi = 0.0;
  Rational lo_exact{0};
  Rational hi_exact{0};
  bool converged = true;
  long iterations = 0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  Rational width_exact() const { return hi_exact - lo_exact; }
  Rational mid_exact() const { return (lo_exact + hi_exact) / 2; }
};

struct CertifyOptions {
  double tol = 1e-9;
  long max_iterations = 0;  // 0: 10 * n * ceil(log2(1/tol))
};

// Power iteration on A+I per connected component (the shift keeps bipartite
// components from oscillating), then an exact certificate from an integer
// snapshot of the iterate.  Hitting the iteration cap flags converged=false
// but still returns a valid, merely wider, enclosure.  lo_exact >= 2m/n
// always (all-ones Rayleigh quotient).
SpectralInterval certified_interval(const Graph& g, const CertifyOptions& opts = {});

// Larger root of x^2 - c*x - M, discriminant clamped at zero.
double shifted_quadratic_root(double c, double M);

// Larger root of x^2 - (d-1)x - C: any rho with rho^2 - (d-1)rho <= C
// satisfies rho <= this root.  Monotone in d and C.
double quadratic_radius_bound(long d, const Rational& C);

// Falsification test of the row-sum lemma f(rho) <= row_sum_poly_bound
// against a certified interval.  Entirely exact: pass fails only if
// f(mid) - margin > bound, which would be a genuine counterexample.
// margin = sup|f'| over [0, hi] times half the interval width.
struct Lemma1Check {
  Rational f_mid;
  Rational bound;
  Rational margin;
  bool pass = false;
};

Lemma1Check lemma1_interval_check(const Graph& g, const Polynomial& f,
                                  const SpectralInterval& rho);

}  // namespace specdev
