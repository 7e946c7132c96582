#pragma once

#include <optional>
#include <string>

#include "qplane/line.hpp"
#include "qplane/plane.hpp"

namespace qplane {

/// Integer matrix [[k,l],[m,n]] with determinant 1. Entry names follow
/// the automorphism convention: x maps onto exponents (k,m), y onto (l,n).
struct SL2 {
  long long k = 1, l = 0, m = 0, n = 1;

  static SL2 identity() { return {1, 0, 0, 1}; }
  long long det() const { return k * n - l * m; }
  long long trace() const { return k + n; }

  friend SL2 operator*(const SL2& a, const SL2& b) {
    return {a.k * b.k + a.l * b.m, a.k * b.l + a.l * b.n,
            a.m * b.k + a.n * b.m, a.m * b.l + a.n * b.n};
  }
  SL2 inverse() const { return {n, -l, -m, k}; }  // det = 1
  friend bool operator==(const SL2&, const SL2&) = default;
};

inline void require_sl2(const SL2& s) {
  if (s.det() != 1) fail(Errc::ConfigError, "matrix determinant must be 1");
}

/// Algebra automorphism of the Laurent-extended quantum plane,
///   x -> alpha x^k y^m,  y -> beta x^l y^n,
/// an element of SL(2,Z) acting on unit pairs.
struct Auto {
  SL2 sigma;
  Unit alpha, beta;

  static Auto identity() { return {SL2::identity(), Unit::one(), Unit::one()}; }
  static Auto units_only(const Unit& a, const Unit& b) { return {SL2::identity(), a, b}; }
  static Auto matrix_only(const SL2& s) { return {s, Unit::one(), Unit::one()}; }

  PlaneElement image_x() const {
    return PlaneElement::term(alpha.to_scalar(), sigma.k, sigma.m);
  }
  PlaneElement image_y() const {
    return PlaneElement::term(beta.to_scalar(), sigma.l, sigma.n);
  }

  bool is_identity() const {
    return sigma == SL2::identity() && alpha.is_one() && beta.is_one();
  }
  friend bool operator==(const Auto& a, const Auto& b) {
    return a.sigma == b.sigma && a.alpha == b.alpha && a.beta == b.beta;
  }
};

/// Multiplicative, linear extension of the generator images.
inline PlaneElement apply(const Auto& phi, const PlaneElement& p) {
  PlaneElement ix = phi.image_x();
  PlaneElement iy = phi.image_y();
  PlaneElement out;
  for (auto& [key, c] : p.terms()) {
    PlaneElement t = ix.monomial_pow(key.first) * iy.monomial_pow(key.second);
    out += t.scaled(c);
  }
  return out;
}

namespace detail {
inline Unit monomial_coeff_unit(const PlaneElement& m) {
  auto u = Unit::from_scalar(m.terms().begin()->second);
  if (!u) fail(Errc::NotAUnit, "expected a unit coefficient");
  return *u;
}
}  // namespace detail

/// compose(a, b) applied to any element equals apply(a, apply(b, .)).
/// The unit pair of the composite picks up exact q-power twists from
/// reordering, so it is read off the composed images of x and y.
inline Auto compose(const Auto& a, const Auto& b) {
  Auto r;
  r.sigma = a.sigma * b.sigma;
  r.alpha = detail::monomial_coeff_unit(apply(a, b.image_x()));
  r.beta = detail::monomial_coeff_unit(apply(a, b.image_y()));
  return r;
}

inline Auto inverse(const Auto& phi) {
  Auto cand = Auto::matrix_only(phi.sigma.inverse());
  Unit ux = detail::monomial_coeff_unit(apply(phi, cand.image_x()));
  Unit uy = detail::monomial_coeff_unit(apply(phi, cand.image_y()));
  cand.alpha = ux.inv();
  cand.beta = uy.inv();
  return cand;
}

/// Smallest n <= max_order with phi^n = id (structural comparison), or
/// nullopt when the bound is exhausted. The matrix part is checked first
/// with plain integer products; composing the automorphism itself only
/// happens along a finite matrix cycle, so the exact q-power twists stay
/// small. Matrices whose powers leave the guarded entry range cannot close
/// a cycle within the bound and report as exceeding it.
inline std::optional<int> order(const Auto& phi, int max_order) {
  if (max_order < 1) fail(Errc::ConfigError, "order bound must be >= 1");
  constexpr long long kEntryGuard = 1LL << 30;

  int matrix_order = 0;
  SL2 acc = phi.sigma;
  for (int n = 1; n <= max_order; ++n) {
    if (acc == SL2::identity()) {
      matrix_order = n;
      break;
    }
    for (long long e : {acc.k, acc.l, acc.m, acc.n})
      if (e > kEntryGuard || e < -kEntryGuard) return std::nullopt;
    acc = acc * phi.sigma;
  }
  if (matrix_order == 0) return std::nullopt;

  Auto power = phi;
  for (int n = 1; n < matrix_order; ++n) power = compose(power, phi);
  // power has matrix I; a units-only automorphism has order 1, 2 (signs)
  // or infinity on the unit lattice
  auto torsion = [](const Unit& u) -> std::optional<int> {
    if (u.is_one()) return 1;
    if (u.exps().empty() && u.coeff() == -1) return 2;
    return std::nullopt;
  };
  auto oa = torsion(power.alpha), ob = torsion(power.beta);
  if (!oa || !ob) return std::nullopt;
  int total = matrix_order * std::max(*oa, *ob);
  if (total > max_order) return std::nullopt;
  return total;
}

/// The semidirect conjugation (sp): sigma (alpha,beta) sigma^{-1} =
/// (alpha^k beta^m, alpha^l beta^n). The same formula defines the action
/// of an arbitrary integral matrix on unit pairs.
inline std::pair<Unit, Unit> unit_pair_action(const Unit& alpha, const Unit& beta,
                                              const SL2& s) {
  return {alpha.pow(s.k) * beta.pow(s.m), alpha.pow(s.l) * beta.pow(s.n)};
}

// ---------------------------------------------------------------------------
// sigma^N in closed form for hyperbolic matrices. With lam the eigenvalue
// of modulus > 1 and t = tr sigma, all four entry constants live in the
// quadratic ring Q[lam]/(lam^2 - t lam + 1):
//   sigma^N = [[ a lam^N + (1-a) lam^-N ,  b (lam^N - lam^-N)        ],
//              [ a(1-a)/b (lam^N-lam^-N), (1-a) lam^N + a lam^-N     ]].
// ---------------------------------------------------------------------------

/// Element u + v*lam of Q[lam]/(lam^2 - t*lam + 1).
struct QuadElem {
  Rational u, v;
  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

class QuadRing {
 public:
  explicit QuadRing(long long trace) : t_(trace) {}

  QuadElem of(const Rational& r) const { return {r, Rational(0)}; }
  QuadElem lambda() const { return {Rational(0), Rational(1)}; }
  QuadElem lambda_inv() const { return {rat_of(t_), rat_of(-1)}; }  // t - lam

  QuadElem add(const QuadElem& a, const QuadElem& b) const { return {a.u + b.u, a.v + b.v}; }
  QuadElem sub(const QuadElem& a, const QuadElem& b) const { return {a.u - b.u, a.v - b.v}; }
  QuadElem mul(const QuadElem& a, const QuadElem& b) const {
    // lam^2 = t lam - 1
    return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u + rat_of(t_) * a.v * b.v};
  }
  QuadElem scale(const QuadElem& a, const Rational& c) const { return {a.u * c, a.v * c}; }
  QuadElem pow_lambda(long long n) const {
    QuadElem base = n >= 0 ? lambda() : lambda_inv();
    long long cnt = n >= 0 ? n : -n;
    QuadElem acc = of(1);
    for (long long i = 0; i < cnt; ++i) acc = mul(acc, base);
    return acc;
  }

 private:
  long long t_;
};

/// Closed form for integer powers of a hyperbolic SL(2,Z) matrix.
class SigmaPowerForm {
 public:
  explicit SigmaPowerForm(const SL2& s) : sigma_(s), ring_(s.trace()) {
    require_sl2(s);
    long long t = s.trace();
    if (t <= 2 && t >= -2)
      fail(Errc::NotHyperbolic, "|trace| must exceed 2, got " + std::to_string(t));
    // lam - lam^-1 = 2 lam - t; its square is the discriminant t^2 - 4,
    // so (2 lam - t)^-1 = (2 lam - t)/(t^2 - 4) and every constant below
    // stays inside the quadratic ring.
    Rational disc = rat_of(t * t - 4);
    QuadElem two_lam_minus_t{rat_of(-t), rat_of(2)};
    QuadElem inv_diff = ring_.scale(two_lam_minus_t, 1 / disc);
    a_ = ring_.mul(ring_.add(ring_.of(rat_of(s.k - t)), ring_.lambda()), inv_diff);
    b_ = ring_.scale(inv_diff, rat_of(s.l));
    c_ = ring_.scale(inv_diff, rat_of(s.m));
    d_ = ring_.sub(ring_.of(1), a_);
  }

  const QuadElem& a() const { return a_; }
  const QuadElem& b() const { return b_; }
  const QuadElem& c() const { return c_; }
  const QuadElem& d() const { return d_; }
  const QuadRing& ring() const { return ring_; }

  SL2 power(long long N) const {
    QuadElem ln = ring_.pow_lambda(N);
    QuadElem lmn = ring_.pow_lambda(-N);
    QuadElem diff = ring_.sub(ln, lmn);
    auto entry = [&](const QuadElem& hi, const QuadElem& lo) {
      QuadElem v = ring_.add(ring_.mul(hi, ln), ring_.mul(lo, lmn));
      if (v.v != 0 || v.u.get_den() != 1)
        fail(Errc::ConfigError, "sigma power entry is not an integer");
      return v.u.get_num().get_si();
    };
    SL2 out;
    out.k = entry(a_, d_);  // a lam^N + (1-a) lam^-N
    out.n = entry(d_, a_);
    QuadElem bv = ring_.mul(b_, diff);
    QuadElem cv = ring_.mul(c_, diff);
    if (bv.v != 0 || cv.v != 0 || bv.u.get_den() != 1 || cv.u.get_den() != 1)
      fail(Errc::ConfigError, "sigma power entry is not an integer");
    out.l = bv.u.get_num().get_si();
    out.m = cv.u.get_num().get_si();
    return out;
  }

 private:
  SL2 sigma_;
  QuadRing ring_;
  QuadElem a_, b_, c_, d_;
};

inline SL2 sigma_power(const SL2& s, long long N) { return SigmaPowerForm(s).power(N); }

// ---------------------------------------------------------------------------
// Automorphisms of C[z^{+-1}]: z -> gamma z or z -> gamma z^{-1}.
// ---------------------------------------------------------------------------

struct LineAuto {
  Unit gamma;
  bool invert = false;

  static LineAuto identity() { return {Unit::one(), false}; }
  bool is_identity() const { return !invert && gamma.is_one(); }
  friend bool operator==(const LineAuto& a, const LineAuto& b) {
    return a.invert == b.invert && a.gamma == b.gamma;
  }
};

inline LineElement apply(const LineAuto& phi, const LineElement& p) {
  LineElement out;
  for (auto& [e, c] : p.terms()) {
    Scalar g = phi.gamma.pow(e).to_scalar();
    out.add_term(phi.invert ? -e : e, c * g);
  }
  return out;
}

inline LineAuto compose(const LineAuto& a, const LineAuto& b) {
  // a(b(z)) = gamma_a^(+-1 as needed) ...; read off the image of z
  LineElement img = apply(a, apply(b, LineElement::z()));
  const auto& [e, c] = *img.terms().begin();
  auto u = Unit::from_scalar(c);
  return {*u, e < 0};
}

inline LineAuto inverse(const LineAuto& phi) {
  if (phi.invert) return phi;  // involution
  return {phi.gamma.inv(), false};
}

}  // namespace qplane
