#include "specdev/polynomial.hpp"

#include <stdexcept>

namespace specdev {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial::Polynomial(std::initializer_list<long> constant_first) {
  for (long c : constant_first) coeffs_.emplace_back(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(coeffs_[k] * static_cast<long>(k));
  }
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) sum[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) sum[k] += b.coeffs_[k];
  return Polynomial(std::move(sum));
}

Rational derivative_bound(const Polynomial& f, const Rational& r) {
  if (r < 0) throw std::invalid_argument("derivative_bound needs r >= 0");
  Rational total(0);
  Rational power(1);  // r^(k-1)
  for (int k = 1; k <= f.degree(); ++k) {
    Rational c(f.coeff(k));
    total += Rational(k) * abs(c) * power;
    power *= r;
  }
  return total;
}

}  // namespace specdev
