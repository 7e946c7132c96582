#pragma once

// Independent oracles the unit and acceptance tests check against. These
// deliberately avoid the closed-form code paths in the library: power
// images are built one Leibniz step at a time, polynomial division is
// re-done longhand, and matrix powers are iterated products.

#include "qplane/qplane.hpp"

namespace qptest {

using namespace qplane;

// pi(g)(var^p) built by splitting off one factor per step:
//   e(x^{p+1}) = x e(x^p) + e(x) k(x^p)
//   f(x^{p+1}) = f(x) x^p + kinv(x) f(x^p)
// and for negative powers the unit rules give the base step.
inline PlaneElement iterated_power_image(const Action& act, Gen which, PlaneVar v,
                                         long long p) {
  const PlaneElement gen = v == PlaneVar::X ? PlaneElement::x() : PlaneElement::y();
  const PlaneElement gen_inv = gen.invert();
  const PlaneElement img = which == Gen::E ? (v == PlaneVar::X ? act.e_x : act.e_y)
                                           : (v == PlaneVar::X ? act.f_x : act.f_y);
  auto K = [&](const PlaneElement& e) { return apply_gen(act, Gen::K, e); };
  auto Ki = [&](const PlaneElement& e) { return apply_gen(act, Gen::Kinv, e); };

  PlaneElement neg_base;  // image of gen^-1 from the unit rule
  if (which == Gen::E)
    neg_base = (-(gen_inv * img)) * K(gen).invert();
  else
    neg_base = (-(Ki(gen).invert() * img)) * gen_inv;

  PlaneElement cur;  // image of gen^s, starting at s = 0
  if (p >= 0) {
    for (long long s = 0; s < p; ++s) {
      PlaneElement gs = gen.monomial_pow(s);
      cur = which == Gen::E ? gen * cur + img * K(gs) : img * gs + Ki(gen) * cur;
    }
  } else {
    for (long long s = 0; s > p; --s) {
      PlaneElement gs = gen.monomial_pow(s);
      cur = which == Gen::E ? gen_inv * cur + neg_base * K(gs)
                            : neg_base * gs + Ki(gen_inv) * cur;
    }
  }
  return cur;
}

inline LineElement iterated_power_image(const LineAction& act, Gen which, long long p) {
  const LineElement z = LineElement::z();
  const LineElement zi = LineElement::z(-1);
  const LineElement img = which == Gen::E ? act.e_z : act.f_z;
  auto K = [&](const LineElement& e) { return apply_gen(act, Gen::K, e); };
  auto Ki = [&](const LineElement& e) { return apply_gen(act, Gen::Kinv, e); };

  LineElement neg_base;
  if (which == Gen::E)
    neg_base = (-(zi * img)) * K(z).invert();
  else
    neg_base = (-(Ki(z).invert() * img)) * zi;

  LineElement cur;
  if (p >= 0) {
    for (long long s = 0; s < p; ++s) {
      LineElement zs = LineElement::z(s);
      cur = which == Gen::E ? z * cur + img * K(zs) : img * zs + Ki(z) * cur;
    }
  } else {
    for (long long s = 0; s > p; --s) {
      LineElement zs = LineElement::z(s);
      cur = which == Gen::E ? zi * cur + neg_base * K(zs) : neg_base * zs + Ki(zi) * cur;
    }
  }
  return cur;
}

// Longhand division of univariate-in-q polynomials; nullopt on a remainder.
inline std::optional<Scalar> divide_in_q(const Scalar& a, const Scalar& b) {
  if (!a.den().is_one() || !b.den().is_one()) return std::nullopt;
  Poly r = a.num(), d = b.num(), quot;
  int dd = d.degree_in(kVarQ);
  while (!r.is_zero() && r.degree_in(kVarQ) >= dd) {
    int dr = r.degree_in(kVarQ);
    Rational lr, ld;
    for (auto& [e, c] : r.terms())
      if ((e.empty() ? 0 : e[0]) == dr) lr = c;
    for (auto& [e, c] : d.terms())
      if ((e.empty() ? 0 : e[0]) == dd) ld = c;
    Poly t = Poly::term(lr / ld, dr - dd > 0 ? Expo{dr - dd} : Expo{});
    quot += t;
    r -= t * d;
  }
  if (!r.is_zero()) return std::nullopt;
  return Scalar(quot, Poly::constant(1));
}

inline SL2 iterated_matrix_power(const SL2& s, long long N) {
  SL2 acc = SL2::identity();
  SL2 base = N >= 0 ? s : s.inverse();
  for (long long i = 0; i < (N >= 0 ? N : -N); ++i) acc = acc * base;
  return acc;
}

}  // namespace qptest
