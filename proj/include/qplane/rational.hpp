#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "qplane/errors.hpp"

namespace qplane {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat_of(long long n, long long d = 1) {
  Rational r(static_cast<long>(n), static_cast<long>(d));
  r.canonicalize();
  return r;
}

inline Rational rat_parse(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_pow(const Rational& base, long long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) fail(Errc::DivisionByZero, "0 raised to a negative power");
    return Rational(0);
  }
  Integer num, den;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ae);
  Rational r;
  if (e > 0) {
    r = Rational(num, den);
  } else {
    r = Rational(den, num);
  }
  r.canonicalize();
  return r;
}

/// Trial-division factorization of a positive integer. Any cofactor left
/// after the 2^16 bound is kept as a single (pseudo-prime) factor; unit
/// coefficients entered by hand stay far below that.
inline std::map<Integer, long long> factor_positive(Integer n) {
  std::map<Integer, long long> out;
  if (n <= 1) return out;
  for (Integer p = 2; p * p <= n && p < 65536; ++p) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out[p] += 1;
      n /= p;
    }
  }
  if (n > 1) out[n] += 1;
  return out;
}

/// Signed-exponent factorization of a nonzero rational (numerator minus
/// denominator exponents). Sign handled separately by callers.
inline std::map<Integer, long long> factor_rational_abs(const Rational& r) {
  Integer num = abs(r.get_num());
  Integer den = r.get_den();
  auto out = factor_positive(num);
  for (auto& [p, e] : factor_positive(den)) out[p] -= e;
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace qplane
