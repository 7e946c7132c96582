#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qplane/scalar.hpp"

namespace qplane {

/// Element of the Laurent extension of the quantum plane, stored in
/// normal order: sum of c_ij * x^i y^j with all x-powers to the left.
/// The defining relation y*x = q*x*y makes monomial products pick up
/// the reordering constant q^{jk}:
///   (x^i y^j)(x^k y^l) = q^{jk} x^{i+k} y^{j+l}.
class PlaneElement {
 public:
  using Key = std::pair<long long, long long>;

  PlaneElement() = default;

  static PlaneElement zero() { return {}; }
  static PlaneElement one() { return term(Scalar::one(), 0, 0); }
  static PlaneElement x(long long e = 1) { return term(Scalar::one(), e, 0); }
  static PlaneElement y(long long e = 1) { return term(Scalar::one(), 0, e); }
  static PlaneElement term(const Scalar& c, long long i, long long j) {
    PlaneElement p;
    p.add_term(i, j, c);
    return p;
  }

  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Scalar coeff(long long i, long long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(long long i, long long j, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend PlaneElement operator+(PlaneElement a, const PlaneElement& b) {
    for (auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
    return a;
  }
  friend PlaneElement operator-(PlaneElement a, const PlaneElement& b) {
    for (auto& [k, c] : b.terms_) a.add_term(k.first, k.second, -c);
    return a;
  }
  friend PlaneElement operator-(const PlaneElement& a) {
    PlaneElement r;
    for (auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  PlaneElement& operator+=(const PlaneElement& o) { return *this = *this + o; }
  PlaneElement& operator-=(const PlaneElement& o) { return *this = *this - o; }

  friend PlaneElement operator*(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement r;
    for (auto& [ka, ca] : a.terms_)
      for (auto& [kb, cb] : b.terms_) {
        Scalar c = ca * cb * Scalar::q_pow(ka.second * kb.first);
        r.add_term(ka.first + kb.first, ka.second + kb.second, c);
      }
    return r;
  }
  PlaneElement& operator*=(const PlaneElement& o) { return *this = *this * o; }

  PlaneElement scaled(const Scalar& c) const {
    PlaneElement r;
    if (c.is_zero()) return r;
    for (auto& [k, cc] : terms_) r.add_term(k.first, k.second, cc * c);
    return r;
  }

  friend bool operator==(const PlaneElement& a, const PlaneElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PlaneElement& a, const PlaneElement& b) { return !(a == b); }

  /// Power of a single term c x^r y^s:
  ///   (x^r y^s)^i = q^{i(i-1)/2 * rs} x^{ri} y^{si}.
  /// Valid for every integer i: nonzero scalars are invertible, so the
  /// units of the ring are exactly the monomials.
  PlaneElement monomial_pow(long long i) const {
    if (terms_.size() != 1) fail(Errc::NotAMonomial, "monomial_pow needs a single term");
    if (i == 0) return one();
    const auto& [k, c] = *terms_.begin();
    long long r = k.first, s = k.second;
    Scalar twist = Scalar::q_pow(i * (i - 1) / 2 * r * s);
    return term(c.pow(i) * twist, r * i, s * i);
  }

  /// Inverse of a unit (single-term element).
  PlaneElement invert() const {
    if (terms_.size() != 1) fail(Errc::NotAUnit, "only monomials are invertible");
    return monomial_pow(-1);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      if (k.first != 0) {
        os << " * x";
        if (k.first != 1) os << "^" << k.first;
      }
      if (k.second != 0) {
        os << (k.first != 0 ? " " : " * ") << "y";
        if (k.second != 1) os << "^" << k.second;
      }
      first = false;
    }
    return os.str();
  }

  static PlaneElement parse(const std::string& text);

 private:
  std::map<Key, Scalar> terms_;
};

namespace detail {

struct PlaneAlgebra {
  using Value = PlaneElement;
  static Value number(const std::string& t) {
    return PlaneElement::term(Scalar::of_rational(rat_parse(t)), 0, 0);
  }
  static Value name(const std::string& t) {
    if (t == "x") return PlaneElement::x();
    if (t == "y") return PlaneElement::y();
    return PlaneElement::term(Scalar::variable(var(t)), 0, 0);
  }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value div(const Value& a, const Value& b) { return a * b.invert(); }
  static Value neg(const Value& a) { return -a; }
  static Value pow(const Value& a, long long e) {
    if (a.is_monomial()) return a.monomial_pow(e);
    if (e < 0) fail(Errc::NotAUnit, "negative power of a non-monomial");
    PlaneElement r = PlaneElement::one();
    for (long long i = 0; i < e; ++i) r *= a;
    return r;
  }
};

}  // namespace detail

inline PlaneElement PlaneElement::parse(const std::string& text) {
  return detail::ExprParser<detail::PlaneAlgebra>(text).parse();
}

}  // namespace qplane
