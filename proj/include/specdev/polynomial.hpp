#pragma once

#include <initializer_list>
#include <vector>

#include "specdev/rational.hpp"

namespace specdev {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. Trailing zero coefficients are trimmed, so the
/// leading coefficient is nonzero unless this is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<long> constant_first);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k (zero beyond the degree).
  BigInt coeff(int k) const;

  Rational operator()(const Rational& x) const;  // exact Horner
  double operator()(double x) const;

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Upper bound for sup |f'(x)| over x in [0, r] (r >= 0):
/// sum_k k*|c_k|*r^(k-1). Exact; used to propagate interval width through f.
Rational derivative_bound(const Polynomial& f, const Rational& r);

}  // namespace specdev
