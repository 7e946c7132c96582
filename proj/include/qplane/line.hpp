#pragma once

#include <map>
#include <sstream>
#include <string>

#include "qplane/scalar.hpp"

namespace qplane {

/// Laurent polynomial in one commuting variable z.
class LineElement {
 public:
  LineElement() = default;

  static LineElement zero() { return {}; }
  static LineElement one() { return term(Scalar::one(), 0); }
  static LineElement z(long long e = 1) { return term(Scalar::one(), e); }
  static LineElement term(const Scalar& c, long long p) {
    LineElement r;
    r.add_term(p, c);
    return r;
  }

  const std::map<long long, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Scalar coeff(long long p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(long long p, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LineElement operator+(LineElement a, const LineElement& b) {
    for (auto& [p, c] : b.terms_) a.add_term(p, c);
    return a;
  }
  friend LineElement operator-(LineElement a, const LineElement& b) {
    for (auto& [p, c] : b.terms_) a.add_term(p, -c);
    return a;
  }
  friend LineElement operator-(const LineElement& a) {
    LineElement r;
    for (auto& [p, c] : a.terms_) r.terms_.emplace(p, -c);
    return r;
  }
  LineElement& operator+=(const LineElement& o) { return *this = *this + o; }
  LineElement& operator-=(const LineElement& o) { return *this = *this - o; }

  friend LineElement operator*(const LineElement& a, const LineElement& b) {
    LineElement r;
    for (auto& [pa, ca] : a.terms_)
      for (auto& [pb, cb] : b.terms_) r.add_term(pa + pb, ca * cb);
    return r;
  }
  LineElement& operator*=(const LineElement& o) { return *this = *this * o; }

  LineElement scaled(const Scalar& c) const {
    LineElement r;
    if (c.is_zero()) return r;
    for (auto& [p, cc] : terms_) r.add_term(p, cc * c);
    return r;
  }

  LineElement monomial_pow(long long i) const {
    if (terms_.size() != 1) fail(Errc::NotAMonomial, "monomial_pow needs a single term");
    if (i == 0) return one();
    const auto& [p, c] = *terms_.begin();
    return term(c.pow(i), p * i);
  }

  LineElement invert() const {
    if (terms_.size() != 1) fail(Errc::NotAUnit, "only monomials are invertible");
    return monomial_pow(-1);
  }

  friend bool operator==(const LineElement& a, const LineElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LineElement& a, const LineElement& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      if (p != 0) {
        os << " * z";
        if (p != 1) os << "^" << p;
      }
      first = false;
    }
    return os.str();
  }

  static LineElement parse(const std::string& text);

 private:
  std::map<long long, Scalar> terms_;
};

namespace detail {

struct LineAlgebra {
  using Value = LineElement;
  static Value number(const std::string& t) {
    return LineElement::term(Scalar::of_rational(rat_parse(t)), 0);
  }
  static Value name(const std::string& t) {
    if (t == "z") return LineElement::z();
    return LineElement::term(Scalar::variable(var(t)), 0);
  }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value div(const Value& a, const Value& b) { return a * b.invert(); }
  static Value neg(const Value& a) { return -a; }
  static Value pow(const Value& a, long long e) {
    if (a.is_monomial()) return a.monomial_pow(e);
    if (e < 0) fail(Errc::NotAUnit, "negative power of a non-monomial");
    LineElement r = LineElement::one();
    for (long long i = 0; i < e; ++i) r *= a;
    return r;
  }
};

}  // namespace detail

inline LineElement LineElement::parse(const std::string& text) {
  return detail::ExprParser<detail::LineAlgebra>(text).parse();
}

}  // namespace qplane
