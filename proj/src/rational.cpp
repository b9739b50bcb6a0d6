#include "specdev/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace specdev {

std::string fraction_string(const Rational& q) {
  // mpq arithmetic results are canonical, but hand-built values like
  // Rational(8, 10) need not be; reduce a copy so the contract holds.
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Rational exact(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  return Rational(x);
}

double double_down(const Rational& q) {
  double d = q.get_d();
  constexpr double inf = std::numeric_limits<double>::infinity();
  while (std::isfinite(d) && Rational(d) > q) d = std::nextafter(d, -inf);
  // tighten: get_d truncates toward zero, so negative values start low
  for (;;) {
    double u = std::nextafter(d, inf);
    if (std::isfinite(u) && Rational(u) <= q) d = u;
    else break;
  }
  return d;
}

double double_up(const Rational& q) {
  double d = q.get_d();
  constexpr double inf = std::numeric_limits<double>::infinity();
  while (std::isfinite(d) && Rational(d) < q) d = std::nextafter(d, inf);
  for (;;) {
    double u = std::nextafter(d, -inf);
    if (std::isfinite(u) && Rational(u) >= q) d = u;
    else break;
  }
  return d;
}

long ceil_to_long(const Rational& q) {
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  if (!c.fits_slong_p()) throw std::overflow_error("ceil does not fit in long");
  return c.get_si();
}

BigInt bigint_from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 64);
  hi += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
  if (neg) hi = -hi;
  return hi;
}

}  // namespace specdev
