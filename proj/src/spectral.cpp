#include "specdev/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace specdev {

std::vector<BigInt> poly_apply_ones(const Graph& g, const Polynomial& f) {
  const int n = g.vertex_count();
  std::vector<BigInt> v(n, f.coeff(f.degree()));
  if (f.is_zero()) return std::vector<BigInt>(n, BigInt(0));
  std::vector<BigInt> av(n);
  for (int k = f.degree() - 1; k >= 0; --k) {
    for (int u = 0; u < n; ++u) {
      BigInt sum(0);
      g.for_each_neighbor(u, [&](int w) { sum += v[w]; });
      av[u] = std::move(sum);
    }
    const BigInt c = f.coeff(k);
    for (int u = 0; u < n; ++u) v[u] = av[u] + c;
  }
  return v;
}

BigInt row_sum_poly_bound(const Graph& g, const Polynomial& f) {
  std::vector<BigInt> rows = poly_apply_ones(g, f);
  return *std::max_element(rows.begin(), rows.end());
}

namespace {

constexpr double kCertScale = 17592186044416.0;  // 2^44

struct ComponentInterval {
  Rational lo{0};
  Rational hi{0};
  bool converged = false;
  long iterations = 0;
};

// Exact Rayleigh and Collatz-Wielandt certificates for an integer vector z
// supported on one component.  z entries are <= 2^44 and strictly positive,
// so every accumulator below fits in a signed 128-bit integer.
void certify_from_vector(const Graph& g, const std::vector<int>& comp,
                         const std::vector<std::int64_t>& z, Rational* lo,
                         Rational* hi) {
  __int128 num = 0;
  __int128 den = 0;
  for (int v : comp) {
    den += static_cast<__int128>(z[v]) * z[v];
    g.for_each_neighbor(v, [&](int u) {
      if (u > v) num += 2 * static_cast<__int128>(z[v]) * z[u];
    });
  }
  *lo = Rational(bigint_from_i128(num), bigint_from_i128(den));
  lo->canonicalize();

  __int128 best_num = 0;
  __int128 best_den = 1;
  for (int v : comp) {
    __int128 row = 0;
    g.for_each_neighbor(v, [&](int u) { row += z[u]; });
    if (row * best_den > best_num * z[v]) {
      best_num = row;
      best_den = z[v];
    }
  }
  *hi = Rational(bigint_from_i128(best_num), bigint_from_i128(best_den));
  hi->canonicalize();
}

ComponentInterval certify_component(const Graph& g, const std::vector<int>& comp,
                                    double tol, long cap,
                                    std::vector<double>& x,
                                    std::vector<double>& y) {
  ComponentInterval out;
  if (comp.size() == 1) {
    out.converged = true;
    return out;  // isolated vertex: rho contribution is exactly 0
  }

  double peak = 0.0;
  for (int v : comp) peak = std::max(peak, static_cast<double>(g.degree(v)));
  for (int v : comp) x[v] = g.degree(v) / peak;

  const Rational tol_exact = exact(tol);
  double threshold = 0.45 * tol;
  bool have_cert = false;

  while (true) {
    while (out.iterations < cap) {
      double rmin = 0.0, rmax = 0.0, ymax = 0.0;
      bool first = true;
      for (int v : comp) {
        double s = x[v];
        g.for_each_neighbor(v, [&](int u) { s += x[u]; });
        y[v] = s;
        const double r = s / x[v];
        if (first) {
          rmin = rmax = r;
          first = false;
        } else {
          rmin = std::min(rmin, r);
          rmax = std::max(rmax, r);
        }
        ymax = std::max(ymax, s);
      }
      for (int v : comp) x[v] = y[v] / ymax;
      ++out.iterations;
      if (rmax - rmin <= threshold) break;
    }

    std::vector<std::int64_t> z(g.vertex_count(), 0);
    for (int v : comp) {
      z[v] = std::max<std::int64_t>(1, std::llround(x[v] * kCertScale));
    }
    Rational lo, hi;
    certify_from_vector(g, comp, z, &lo, &hi);
    if (have_cert) {
      // Both enclosures hold, so their intersection does too.
      out.lo = std::max(out.lo, lo);
      out.hi = std::min(out.hi, hi);
    } else {
      out.lo = lo;
      out.hi = hi;
      have_cert = true;
    }
    if (out.hi - out.lo <= tol_exact) {
      out.converged = true;
      return out;
    }
    if (out.iterations >= cap) return out;
    threshold *= 0.25;
  }
}

}  // namespace

SpectralInterval certified_interval(const Graph& g, const CertifyOptions& opts) {
  if (!(opts.tol > 0)) throw std::invalid_argument("certified_interval: tol must be positive");
  const int n = g.vertex_count();
  long cap = opts.max_iterations;
  if (cap <= 0) {
    cap = 10L * n * static_cast<long>(std::ceil(std::log2(1.0 / opts.tol)));
    cap = std::max(cap, 10L);
  }

  SpectralInterval out;
  // All-ones Rayleigh quotient: rho >= 2m/n on the whole graph.
  out.lo_exact = Rational(BigInt(2 * g.edge_count()), BigInt(n));
  out.lo_exact.canonicalize();
  out.hi_exact = out.lo_exact;

  std::vector<double> x(n), y(n);
  for (const auto& comp : component_vertex_sets(g)) {
    ComponentInterval ci = certify_component(g, comp, opts.tol, cap, x, y);
    out.lo_exact = std::max(out.lo_exact, ci.lo);
    out.hi_exact = std::max(out.hi_exact, ci.hi);
    out.converged = out.converged && ci.converged;
    out.iterations += ci.iterations;
  }

  out.lo = double_down(out.lo_exact);
  out.hi = double_up(out.hi_exact);
  return out;
}

double shifted_quadratic_root(double c, double M) {
  const double disc = std::max(0.0, 0.25 * c * c + M);
  return 0.5 * c + std::sqrt(disc);
}

double quadratic_radius_bound(long d, const Rational& C) {
  if (d < 1) throw std::invalid_argument("quadratic_radius_bound: d must be positive");
  if (C < 0) throw std::invalid_argument("quadratic_radius_bound: C must be nonnegative");
  return shifted_quadratic_root(static_cast<double>(d - 1), to_double(C));
}

Lemma1Check lemma1_interval_check(const Graph& g, const Polynomial& f,
                                  const SpectralInterval& rho) {
  Lemma1Check out;
  out.bound = Rational(row_sum_poly_bound(g, f));
  out.f_mid = f(rho.mid_exact());
  out.margin = derivative_bound(f, rho.hi_exact) * rho.width_exact() / 2;
  out.pass = out.f_mid <= out.bound + out.margin;
  return out;
}

}  // namespace specdev
