#pragma once

#include <cctype>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qplane/polynomial.hpp"

namespace qplane {

/// Options for numeric evaluation: the q guard and the denominator
/// collapse threshold.
struct EvalOptions {
  double denom_eps = 1e-9;
  int root_of_unity_bound = 64;
  double unit_circle_tol = 1e-12;
};

/// Element of the coefficient field: a multivariate rational function
/// over Q in the registered indeterminates, stored in canonical form
/// (fraction reduced, denominator monic under graded lex). Equality of
/// canonical forms is structural.
class Scalar {
 public:
  Scalar() = default;  // zero
  Scalar(const Poly& num, const Poly& den) { assign(num, den); }

  static Scalar of_int(long long n) { return Scalar(Poly::constant(rat_of(n)), Poly::constant(1)); }
  static Scalar of_rational(const Rational& r) { return Scalar(Poly::constant(r), Poly::constant(1)); }
  static Scalar variable(int idx) { return Scalar(Poly::variable(idx), Poly::constant(1)); }
  static Scalar q() { return variable(kVarQ); }
  static Scalar q_pow(long long e) {
    if (e > 1000000 || e < -1000000)
      fail(Errc::ConfigError, "q exponent out of the supported range");
    if (e >= 0) return Scalar(Poly::variable(kVarQ, static_cast<int>(e)), Poly::constant(1));
    return Scalar(Poly::constant(1), Poly::variable(kVarQ, static_cast<int>(-e)));
  }
  static Scalar one() { return of_int(1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly g = Poly::gcd(a.den_, b.den_);
    if (g.is_one()) return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly bdg = *Poly::divide_exact(b.den_, g);
    Poly adg = *Poly::divide_exact(a.den_, g);
    Poly t = a.num_ * bdg + b.num_ * adg;
    Scalar r;
    r.assign_reduced_by(t, a.den_ * bdg, g);
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator-(const Scalar& a) {
    Scalar r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    // cross-cancel first so the final product is already reduced
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    Poly n = *Poly::divide_exact(a.num_, g1) * *Poly::divide_exact(b.num_, g2);
    Poly d = *Poly::divide_exact(a.den_, g2) * *Poly::divide_exact(b.den_, g1);
    Scalar r;
    r.set_monic(std::move(n), std::move(d));
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "scalar division by zero");
    return a * b.inv();
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero scalar");
    Scalar r;
    r.set_monic(den_, num_);
    return r;
  }

  Scalar pow(long long e) const {
    if (e == 0) return one();
    const Scalar base = e < 0 ? inv() : *this;
    unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
    Scalar r;
    r.num_ = base.num_.pow(n);
    r.den_ = base.den_.pow(n);
    r.make_monic();  // reduced fraction powers stay reduced
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    if (num_.is_zero()) return "0";
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  static Scalar parse(const std::string& text);

  /// Substitution homomorphism into complex numbers. Enforces the
  /// root-of-unity guard on the value assigned to q and rejects numeric
  /// denominator collapse.
  std::complex<double> eval(const std::map<int, std::complex<double>>& assign,
                            const EvalOptions& opts = EvalOptions()) const {
    auto qv = assign.find(kVarQ);
    if (qv != assign.end()) check_q_guard(qv->second, opts);
    std::complex<double> d = poly_eval(den_, assign);
    if (std::abs(d) <= opts.denom_eps)
      fail(Errc::NumericDenominatorVanishes, "denominator ~ 0 at the given point");
    return poly_eval(num_, assign) / d;
  }

  static void check_q_guard(std::complex<double> qval, const EvalOptions& opts = EvalOptions()) {
    double m = std::abs(qval);
    if (m == 0.0) fail(Errc::RootOfUnityQ, "q must be nonzero");
    if (std::abs(m - 1.0) > opts.unit_circle_tol) return;  // |q| != 1 is safe
    std::complex<double> p(1.0, 0.0);
    for (int n = 1; n <= opts.root_of_unity_bound; ++n) {
      p *= qval;
      if (std::abs(p - std::complex<double>(1.0, 0.0)) <= opts.unit_circle_tol)
        fail(Errc::RootOfUnityQ, "q^" + std::to_string(n) + " = 1 within tolerance");
    }
  }

  /// Substitute a scalar value for one indeterminate (field homomorphism
  /// fixing the others).
  Scalar subst(int v, const Scalar& value) const {
    auto sub_poly = [&](const Poly& p) {
      Scalar acc;
      for (auto& [e, c] : p.terms()) {
        Expo rest = e;
        int d = 0;
        if (static_cast<size_t>(v) < rest.size()) {
          d = rest[static_cast<size_t>(v)];
          rest[static_cast<size_t>(v)] = 0;
        }
        Scalar t(Poly::term(c, expo_trim(std::move(rest))), Poly::constant(1));
        acc += t * value.pow(d);
      }
      return acc;
    };
    return sub_poly(num_) / sub_poly(den_);
  }

 private:
  Poly num_;                     // zero scalar: num = 0
  Poly den_ = Poly::constant(1);  // monic, nonzero

  void assign(const Poly& n, const Poly& d) {
    if (d.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
    if (n.is_zero()) {
      num_ = Poly();
      den_ = Poly::constant(1);
      return;
    }
    Poly g = Poly::gcd(n, d);
    set_monic(*Poly::divide_exact(n, g), *Poly::divide_exact(d, g));
  }

  // num/den already coprime after dividing by g' := gcd(t, g).
  void assign_reduced_by(const Poly& t, const Poly& d, const Poly& g) {
    if (t.is_zero()) {
      num_ = Poly();
      den_ = Poly::constant(1);
      return;
    }
    Poly g2 = Poly::gcd(t, g);
    set_monic(*Poly::divide_exact(t, g2), *Poly::divide_exact(d, g2));
  }

  void set_monic(Poly n, Poly d) {
    num_ = std::move(n);
    den_ = std::move(d);
    make_monic();
  }
  void make_monic() {
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
      num_ = num_.scaled(1 / lc);
      den_ = den_.scaled(1 / lc);
    }
  }
};

// ---------------------------------------------------------------------------
// Units: invertible scalars, i.e. nonzero-rational multiples of Laurent
// monomials in the indeterminates. These carry the weight constants and
// the automorphism parameters, and support the exact lattice questions
// (is alpha^m = beta^n solvable?) the classification needs.
// ---------------------------------------------------------------------------

class Unit {
 public:
  Unit() : coeff_(1) {}
  explicit Unit(const Rational& c, std::map<int, long long> exps = {})
      : coeff_(c), exps_(std::move(exps)) {
    if (coeff_ == 0) fail(Errc::NotAUnit, "unit coefficient must be nonzero");
    prune();
  }
  static Unit one() { return Unit(); }
  static Unit of_rational(const Rational& c) { return Unit(c); }
  static Unit variable(int idx, long long e = 1) { return Unit(Rational(1), {{idx, e}}); }
  static Unit q_pow(long long e) { return variable(kVarQ, e); }

  const Rational& coeff() const { return coeff_; }
  const std::map<int, long long>& exps() const { return exps_; }
  bool is_one() const { return coeff_ == 1 && exps_.empty(); }

  friend Unit operator*(const Unit& a, const Unit& b) {
    Unit r;
    r.coeff_ = a.coeff_ * b.coeff_;
    r.exps_ = a.exps_;
    for (auto& [v, e] : b.exps_) r.exps_[v] += e;
    r.prune();
    return r;
  }
  Unit inv() const {
    Unit r;
    r.coeff_ = 1 / coeff_;
    for (auto& [v, e] : exps_) r.exps_[v] = -e;
    return r;
  }
  Unit pow(long long n) const {
    Unit r;
    r.coeff_ = rat_pow(coeff_, n);
    if (n != 0)
      for (auto& [v, e] : exps_) r.exps_[v] = e * n;
    return r;
  }
  friend bool operator==(const Unit& a, const Unit& b) {
    return a.coeff_ == b.coeff_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Unit& a, const Unit& b) { return !(a == b); }

  Scalar to_scalar() const {
    Poly n = Poly::constant(coeff_);
    Poly d = Poly::constant(1);
    for (auto& [v, e] : exps_) {
      if (e > 0)
        n *= Poly::variable(v, static_cast<int>(e));
      else
        d *= Poly::variable(v, static_cast<int>(-e));
    }
    return Scalar(n, d);
  }

  static std::optional<Unit> from_scalar(const Scalar& s) {
    if (s.is_zero() || !s.num().is_monomial() || !s.den().is_monomial()) return std::nullopt;
    const auto& [en, cn] = *s.num().terms().begin();
    const auto& [ed, cd] = *s.den().terms().begin();
    std::map<int, long long> exps;
    for (size_t i = 0; i < en.size(); ++i)
      if (en[i]) exps[static_cast<int>(i)] += en[i];
    for (size_t i = 0; i < ed.size(); ++i)
      if (ed[i]) exps[static_cast<int>(i)] -= ed[i];
    return Unit(cn / cd, std::move(exps));
  }

  static Unit parse(const std::string& text) {
    auto u = from_scalar(Scalar::parse(text));
    if (!u) fail(Errc::NotAUnit, "'" + text + "' is not an invertible scalar");
    return *u;
  }

  std::string str() const { return to_scalar().str(); }

 private:
  Rational coeff_;
  std::map<int, long long> exps_;
  void prune() {
    for (auto it = exps_.begin(); it != exps_.end();) {
      if (it->second == 0)
        it = exps_.erase(it);
      else
        ++it;
    }
  }
};

/// Smallest nonzero (m, n), both components nonzero, with alpha^m = beta^n,
/// or nullopt when only trivial relations exist. Decided exactly on the
/// combined lattice of indeterminate exponents, prime exponents of the
/// rational coefficients, and the sign (mod 2).
inline std::optional<std::pair<long long, long long>> unit_power_relation(const Unit& alpha,
                                                                          const Unit& beta) {
  // coordinates: indeterminates, then primes; values (A_i, B_i)
  std::vector<std::pair<long long, long long>> coords;
  {
    std::map<int, std::pair<long long, long long>> vars;
    for (auto& [v, e] : alpha.exps()) vars[v].first = e;
    for (auto& [v, e] : beta.exps()) vars[v].second = e;
    for (auto& [v, ab] : vars) coords.push_back(ab);
    std::map<Integer, std::pair<long long, long long>> primes;
    for (auto& [p, e] : factor_rational_abs(alpha.coeff())) primes[p].first = e;
    for (auto& [p, e] : factor_rational_abs(beta.coeff())) primes[p].second = e;
    for (auto& [p, ab] : primes) coords.push_back(ab);
  }
  long long sign_a = alpha.coeff() < 0 ? 1 : 0;
  long long sign_b = beta.coeff() < 0 ? 1 : 0;

  long long m = 0, n = 0;
  bool pinned = false;
  for (auto& [A, B] : coords) {
    if (A == 0 && B == 0) continue;
    if (A == 0 || B == 0) return std::nullopt;  // forces m = 0 or n = 0
    if (!pinned) {
      long long g = std::gcd(A < 0 ? -A : A, B < 0 ? -B : B);
      m = B / g;
      n = A / g;
      if (m < 0) {
        m = -m;
        n = -n;
      }
      pinned = true;
    } else if (m * A != n * B) {
      return std::nullopt;
    }
  }
  if (!pinned) {
    m = 1;
    n = 1;  // alpha, beta in {1,-1}: possibly after doubling below
  }
  if ((m * sign_a - n * sign_b) % 2 != 0) {
    m *= 2;
    n *= 2;
  }
  return std::make_pair(m, n);
}

/// (gamma^p - 1)/(gamma - 1): the telescoping constant in the power images.
inline Scalar geom_ratio(const Unit& gamma, long long p) {
  if (gamma.is_one()) fail(Errc::DegenerateRatio, "geom_ratio requires gamma != 1");
  Scalar g = gamma.to_scalar();
  return (g.pow(p) - Scalar::one()) / (g - Scalar::one());
}

// ---------------------------------------------------------------------------
// Expression parser shared by every textual surface. The grammar is
//   expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
//   factor := '-'* base ('^' signed-int)? ; base := INT | NAME | '(' expr ')'
// Algebra is a traits type mapping literals/names into the target ring.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  enum Kind { Number, Name, Op, End } kind;
  std::string text;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Name, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, c)});
      ++i;
      continue;
    }
    fail(Errc::ParseError, "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Token::End, ""});
  return out;
}

template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;
  explicit ExprParser(const std::string& text) : toks_(tokenize(text)) {}

  Value parse() {
    Value v = expr();
    if (!at_end()) fail(Errc::ParseError, "trailing input near '" + cur().text + "'");
    return v;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  bool at_end() const { return cur().kind == Token::End; }
  bool accept_op(const char* op) {
    if (cur().kind == Token::Op && cur().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_op(const char* op) {
    if (!accept_op(op)) fail(Errc::ParseError, std::string("expected '") + op + "'");
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept_op("+"))
        v = Algebra::add(v, term());
      else if (accept_op("-"))
        v = Algebra::sub(v, term());
      else
        return v;
    }
  }
  Value term() {
    Value v = factor();
    for (;;) {
      if (accept_op("*"))
        v = Algebra::mul(v, factor());
      else if (accept_op("/"))
        v = Algebra::div(v, factor());
      else if (cur().kind == Token::Name || cur().kind == Token::Number ||
               (cur().kind == Token::Op && cur().text == "("))
        v = Algebra::mul(v, factor());  // juxtaposition, e.g. "x^2 y"
      else
        return v;
    }
  }
  Value factor() {
    bool neg = false;
    while (true) {
      if (accept_op("-"))
        neg = !neg;
      else if (accept_op("+"))
        ;
      else
        break;
    }
    Value v = base();
    if (accept_op("^")) v = Algebra::pow(v, signed_int());
    return neg ? Algebra::neg(v) : v;
  }
  Value base() {
    if (accept_op("(")) {
      Value v = expr();
      expect_op(")");
      return v;
    }
    if (cur().kind == Token::Number) {
      Value v = Algebra::number(cur().text);
      ++pos_;
      return v;
    }
    if (cur().kind == Token::Name) {
      Value v = Algebra::name(cur().text);
      ++pos_;
      return v;
    }
    fail(Errc::ParseError, "expected a number, name or '('");
  }
  long long signed_int() {
    bool paren = accept_op("(");
    bool neg = accept_op("-");
    if (cur().kind != Token::Number) fail(Errc::ParseError, "expected integer exponent");
    long long v = std::stoll(cur().text);
    ++pos_;
    if (paren) expect_op(")");
    return neg ? -v : v;
  }
};

struct ScalarAlgebra {
  using Value = Scalar;
  static Value number(const std::string& t) { return Scalar::of_rational(rat_parse(t)); }
  static Value name(const std::string& t) { return Scalar::variable(var(t)); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value div(const Value& a, const Value& b) { return a / b; }
  static Value neg(const Value& a) { return -a; }
  static Value pow(const Value& a, long long e) { return a.pow(e); }
};

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) {
  return detail::ExprParser<detail::ScalarAlgebra>(text).parse();
}

}  // namespace qplane
