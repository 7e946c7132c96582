#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qplane/indeterminates.hpp"
#include "qplane/rational.hpp"

namespace qplane {

/// Exponent vector of a (non-Laurent) monomial, indexed by indeterminate.
/// Trailing zeros are trimmed so equal monomials compare equal.
using Expo = std::vector<int>;

inline Expo expo_trim(Expo e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

inline long long expo_degree(const Expo& e) {
  long long d = 0;
  for (int x : e) d += x;
  return d;
}

/// Graded lexicographic order: total degree first, then lex with the
/// earliest indeterminate (q) most significant.
struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    long long da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      int ai = i < a.size() ? a[i] : 0;
      int bi = i < b.size() ? b[i] : 0;
      if (ai != bi) return ai < bi;
    }
    return false;
  }
};

inline bool expo_divides(const Expo& a, const Expo& b) {  // a | b componentwise
  for (size_t i = 0; i < a.size(); ++i) {
    int bi = i < b.size() ? b[i] : 0;
    if (a[i] > bi) return false;
  }
  return true;
}

inline Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int ai = i < a.size() ? a[i] : 0;
    int bi = i < b.size() ? b[i] : 0;
    r[i] = ai - bi;
  }
  return expo_trim(r);
}

inline Expo expo_add(const Expo& a, const Expo& b) {
  Expo r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int ai = i < a.size() ? a[i] : 0;
    int bi = i < b.size() ? b[i] : 0;
    r[i] = ai + bi;
  }
  return expo_trim(r);
}

/// Sparse multivariate polynomial with rational coefficients over the
/// global indeterminate table. Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Expo, Rational, GrlexLess>;

  Poly() = default;

  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Expo{}, c);
    return p;
  }
  static Poly variable(int idx, int exp = 1) {
    if (exp < 0) fail(Errc::ParseError, "Poly::variable exponent must be >= 0");
    if (exp == 0) return constant(1);
    Poly p;
    Expo e(static_cast<size_t>(idx) + 1, 0);
    e[static_cast<size_t>(idx)] = exp;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }
  static Poly term(const Rational& c, Expo e) {
    Poly p;
    if (c != 0) p.terms_.emplace(expo_trim(std::move(e)), c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_value() const {  // only valid when is_constant()
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  const Expo& leading_expo() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  long long total_degree() const { return terms_.empty() ? -1 : expo_degree(leading_expo()); }

  int degree_in(int v) const {
    int d = 0;
    for (auto& [e, c] : terms_)
      if (static_cast<size_t>(v) < e.size()) d = std::max(d, e[static_cast<size_t>(v)]);
    return d;
  }

  // Largest indeterminate index that occurs, or -1 for constants.
  int max_var() const {
    int m = -1;
    for (auto& [e, c] : terms_) {
      for (size_t i = e.size(); i-- > 0;) {
        if (e[i] != 0) {
          m = std::max(m, static_cast<int>(i));
          break;
        }
      }
    }
    return m;
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) r.add_term(expo_add(ea, eb), ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
  }

  Poly pow(unsigned long long n) const {
    Poly r = constant(1);
    Poly b = *this;
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  void add_term(const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Exact multivariate division; nullopt when the division leaves a
  /// remainder. Single-divisor division is canonical, so exactness of
  /// the quotient is decided correctly.
  static std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    Poly q, r = a;
    while (!r.is_zero()) {
      const Expo& er = r.leading_expo();
      const Expo& eb = b.leading_expo();
      if (!expo_divides(eb, er)) return std::nullopt;
      Rational c = r.leading_coeff() / b.leading_coeff();
      Expo e = expo_sub(er, eb);
      Poly t = Poly::term(c, e);
      q += t;
      r -= t * b;
    }
    return q;
  }

  std::string str() const;

  // -- integer normal forms used by the gcd ----------------------------

  /// Writes *this = scale * P with P integer, content 1 and positive
  /// leading coefficient. Zero maps to (1, 0).
  std::pair<Rational, Poly> int_primitive() const {
    if (is_zero()) return {Rational(1), Poly()};
    Integer den_lcm = 1;
    for (auto& [e, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer num_gcd = 0;
    for (auto& [e, c] : terms_) {
      Integer n = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (leading_coeff() < 0) scale = -scale;
    Poly p;
    for (auto& [e, c] : terms_) p.terms_.emplace(e, c / scale);
    return {scale, p};
  }

  static Poly gcd(const Poly& a, const Poly& b);

 private:
  TermMap terms_;

  // View as univariate in v: degree -> coefficient polynomial.
  std::map<int, Poly> coeffs_in(int v) const {
    std::map<int, Poly> out;
    for (auto& [e, c] : terms_) {
      int d = static_cast<size_t>(v) < e.size() ? e[static_cast<size_t>(v)] : 0;
      Expo rest = e;
      if (static_cast<size_t>(v) < rest.size()) rest[static_cast<size_t>(v)] = 0;
      out[d].add_term(expo_trim(std::move(rest)), c);
    }
    return out;
  }

  static Poly from_coeffs_in(int v, const std::map<int, Poly>& cs) {
    Poly out;
    for (auto& [d, p] : cs) {
      Poly vd = d == 0 ? Poly::constant(1) : Poly::variable(v, d);
      out += p * vd;
    }
    return out;
  }

  // gcd over integer-primitive polynomials, result integer-primitive.
  static Poly gcd_primitive(Poly a, Poly b);
  static Poly prem(Poly a, const Poly& b, int v);
  static Poly content_in(const Poly& p, int v);
};

inline std::string poly_coeff_str(const Rational& c, bool with_vars) {
  if (!with_vars) return rat_str(c);
  if (c == 1) return "";
  if (c == -1) return "-";
  return rat_str(c);
}

inline std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print leading term first (graded-lex descending)
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Expo& e = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    std::vector<std::string> factors;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = var_name(static_cast<int>(i));
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << rat_str(c);
    } else {
      if (c != 1) os << rat_str(c) << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
    first = false;
  }
  return os.str();
}

inline Poly Poly::content_in(const Poly& p, int v) {
  Poly g;
  for (auto& [d, c] : p.coeffs_in(v)) g = gcd_primitive(g, c.int_primitive().second);
  return g;
}

/// Pseudo-remainder of a by b with respect to v (both nonzero in v).
inline Poly Poly::prem(Poly a, const Poly& b, int v) {
  int db = b.degree_in(v);
  auto bc = b.coeffs_in(v);
  Poly lb = bc.rbegin()->second;
  while (!a.is_zero()) {
    int da = a.degree_in(v);
    if (da < db) break;
    auto ac = a.coeffs_in(v);
    Poly la = ac.rbegin()->second;
    // a <- lb*a - la*b*v^(da-db)
    a = lb * a - la * b * Poly::variable(v, da - db);
  }
  return a;
}

inline Poly Poly::gcd_primitive(Poly a, Poly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) {
    // both integer-primitive, so a constant operand forces content gcd 1
    return Poly::constant(1);
  }
  int v = std::max(a.max_var(), b.max_var());

  // univariate over Q: plain monic Euclid, much cheaper than PRS
  {
    bool a_uni = true, b_uni = true;
    for (auto& [d, c] : a.coeffs_in(v)) a_uni = a_uni && c.is_constant();
    for (auto& [d, c] : b.coeffs_in(v)) b_uni = b_uni && c.is_constant();
    if (a_uni && b_uni) {
      Poly r0 = a, r1 = b;
      while (!r1.is_zero()) {
        // r0 mod r1 by leading-term elimination in v
        Poly r = r0;
        int d1 = r1.degree_in(v);
        Rational lc1 = r1.coeffs_in(v).rbegin()->second.constant_value();
        while (!r.is_zero() && r.degree_in(v) >= d1) {
          int dr = r.degree_in(v);
          Rational lcr = r.coeffs_in(v).rbegin()->second.constant_value();
          r -= r1 * Poly::variable(v, dr - d1).scaled(lcr / lc1);
        }
        r0 = r1;
        r1 = r;
      }
      return r0.int_primitive().second;
    }
  }

  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly pa = *divide_exact(a, ca);
  Poly pb = *divide_exact(b, cb);
  Poly cg = gcd_primitive(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, v);
    if (!r.is_zero()) {
      Poly cr = content_in(r, v);
      r = *divide_exact(r, cr);
    }
    pa = pb;
    pb = r;
  }
  Poly pg = *divide_exact(pa, content_in(pa, v));
  return (cg * pg).int_primitive().second;
}

inline Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.int_primitive().second;
  if (b.is_zero()) return a.int_primitive().second;
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);

  // split off the common monomial factor first; supports are tiny
  auto min_expo = [](const Poly& p) {
    Expo m = p.terms().begin()->first;
    for (auto& [e, c] : p.terms()) {
      for (size_t i = 0; i < m.size(); ++i) {
        int ei = i < e.size() ? e[i] : 0;
        m[i] = std::min(m[i], ei);
      }
    }
    return expo_trim(std::move(m));
  };
  Expo ma = min_expo(a), mb = min_expo(b);
  Expo mg(std::max(ma.size(), mb.size()), 0);
  for (size_t i = 0; i < mg.size(); ++i) {
    int ai = i < ma.size() ? ma[i] : 0;
    int bi = i < mb.size() ? mb[i] : 0;
    mg[i] = std::min(ai, bi);
  }
  mg = expo_trim(std::move(mg));

  Poly a1 = *divide_exact(a, Poly::term(Rational(1), ma));
  Poly b1 = *divide_exact(b, Poly::term(Rational(1), mb));
  Poly g = gcd_primitive(a1.int_primitive().second, b1.int_primitive().second);
  return g * Poly::term(Rational(1), mg);
}

inline std::complex<double> poly_eval(const Poly& p,
                                      const std::map<int, std::complex<double>>& assign) {
  std::complex<double> acc(0.0, 0.0);
  for (auto& [e, c] : p.terms()) {
    std::complex<double> t(c.get_d(), 0.0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = assign.find(static_cast<int>(i));
      if (it == assign.end())
        fail(Errc::ConfigError, "no numeric value assigned to '" + var_name(static_cast<int>(i)) + "'");
      std::complex<double> base = it->second;
      for (int k = 0; k < e[i]; ++k) t *= base;
    }
    acc += t;
  }
  return acc;
}

}  // namespace qplane
