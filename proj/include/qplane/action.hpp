#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qplane/autgroup.hpp"
#include "qplane/pbw.hpp"

namespace qplane {

/// Candidate U_q(sl2)-module-algebra structure on the Laurent-extended
/// quantum plane: k acts by the automorphism `k`, and e, f are determined
/// by their images on the generators via the twisted Leibniz rules
///   e(ab) = a e(b) + e(a) k(b),      f(ab) = f(a) b + kinv(a) f(b)
/// together with the unit rules
///   e(u^-1) = -u^-1 e(u) k(u)^-1,    f(u^-1) = -kinv(u)^-1 f(u) u^-1.
struct Action {
  Auto k;
  PlaneElement e_x, e_y, f_x, f_y;
  std::map<std::string, std::string> params;  // provenance only, not compared

  friend bool operator==(const Action& a, const Action& b) {
    return a.k == b.k && a.e_x == b.e_x && a.e_y == b.e_y && a.f_x == b.f_x && a.f_y == b.f_y;
  }
  friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }

  bool is_weight() const { return k.sigma == SL2::identity(); }
};

/// The same data on C[z^{+-1}].
struct LineAction {
  LineAuto k;
  LineElement e_z, f_z;
  std::map<std::string, std::string> params;

  friend bool operator==(const LineAction& a, const LineAction& b) {
    return a.k == b.k && a.e_z == b.e_z && a.f_z == b.f_z;
  }
  friend bool operator!=(const LineAction& a, const LineAction& b) { return !(a == b); }
};

namespace detail {

// e on x^p (p of either sign), the telescoping sums obtained by iterating
// the Leibniz rule and, for p < 0, differentiating x x^-1 = 1:
//   p > 0:  sum_{r=0}^{p-1} x^{p-1-r} e(x) k(x)^r
//   p < 0: -sum_{r=0}^{-p-1} x^{p+r} e(x) k(x)^{-r-1}
inline PlaneElement e_power(const PlaneElement& var_mono, const PlaneElement& e_img,
                            const PlaneElement& k_img, long long p) {
  PlaneElement out;
  if (p > 0) {
    for (long long r = 0; r < p; ++r)
      out += var_mono.monomial_pow(p - 1 - r) * e_img * k_img.monomial_pow(r);
  } else if (p < 0) {
    for (long long r = 0; r < -p; ++r)
      out -= var_mono.monomial_pow(p + r) * e_img * k_img.monomial_pow(-r - 1);
  }
  return out;
}

// f on x^p:
//   p > 0:  sum_{r=0}^{p-1} kinv(x)^r f(x) x^{p-1-r}
//   p < 0: -sum_{r=0}^{-p-1} kinv(x)^{p+r} f(x) x^{-r-1}
inline PlaneElement f_power(const PlaneElement& var_mono, const PlaneElement& f_img,
                            const PlaneElement& kinv_img, long long p) {
  PlaneElement out;
  if (p > 0) {
    for (long long r = 0; r < p; ++r)
      out += kinv_img.monomial_pow(r) * f_img * var_mono.monomial_pow(p - 1 - r);
  } else if (p < 0) {
    for (long long r = 0; r < -p; ++r)
      out -= kinv_img.monomial_pow(p + r) * f_img * var_mono.monomial_pow(-r - 1);
  }
  return out;
}

}  // namespace detail

/// Image of an arbitrary element under the action of one generator.
inline PlaneElement apply_gen(const Action& act, Gen g, const PlaneElement& p) {
  switch (g) {
    case Gen::K: return apply(act.k, p);
    case Gen::Kinv: return apply(inverse(act.k), p);
    default: break;
  }
  const Auto kinv = inverse(act.k);
  const PlaneElement kx = act.k.image_x(), ky = act.k.image_y();
  const PlaneElement kix = kinv.image_x(), kiy = kinv.image_y();
  PlaneElement out;
  for (auto& [key, c] : p.terms()) {
    auto [i, j] = key;
    PlaneElement img;
    if (g == Gen::E) {
      // e(x^i y^j) = x^i e(y^j) + e(x^i) k(y^j)
      img = PlaneElement::x(i) * detail::e_power(PlaneElement::y(), act.e_y, ky, j) +
            detail::e_power(PlaneElement::x(), act.e_x, kx, i) * ky.monomial_pow(j);
    } else {
      // f(x^i y^j) = f(x^i) y^j + kinv(x^i) f(y^j)
      img = detail::f_power(PlaneElement::x(), act.f_x, kix, i) * PlaneElement::y(j) +
            kix.monomial_pow(i) * detail::f_power(PlaneElement::y(), act.f_y, kiy, j);
    }
    out += img.scaled(c);
  }
  return out;
}

/// Linear extension over PBW basis elements: f^i k^j e^l acts by e l times,
/// then k j times (signed), then f i times.
inline PlaneElement apply_pbw(const Action& act, const PBWElement& u, const PlaneElement& p) {
  PlaneElement out;
  for (auto& [key, c] : u.terms()) {
    PlaneElement cur = p;
    for (long long s = 0; s < key.e; ++s) cur = apply_gen(act, Gen::E, cur);
    for (long long s = 0; s < (key.k > 0 ? key.k : -key.k); ++s)
      cur = apply_gen(act, key.k > 0 ? Gen::K : Gen::Kinv, cur);
    for (long long s = 0; s < key.f; ++s) cur = apply_gen(act, Gen::F, cur);
    out += cur.scaled(c);
  }
  return out;
}

// line versions -------------------------------------------------------------

inline LineElement apply_gen(const LineAction& act, Gen g, const LineElement& p) {
  if (g == Gen::K) return apply(act.k, p);
  if (g == Gen::Kinv) return apply(inverse(act.k), p);
  const LineAuto kinv = inverse(act.k);
  const LineElement kz = apply(act.k, LineElement::z());
  const LineElement kiz = apply(kinv, LineElement::z());
  LineElement out;
  for (auto& [e, c] : p.terms()) {
    LineElement img;
    if (g == Gen::E) {
      if (e > 0)
        for (long long r = 0; r < e; ++r)
          img += LineElement::z(e - 1 - r) * act.e_z * kz.monomial_pow(r);
      else if (e < 0)
        for (long long r = 0; r < -e; ++r)
          img -= LineElement::z(e + r) * act.e_z * kz.monomial_pow(-r - 1);
    } else {
      if (e > 0)
        for (long long r = 0; r < e; ++r)
          img += kiz.monomial_pow(r) * act.f_z * LineElement::z(e - 1 - r);
      else if (e < 0)
        for (long long r = 0; r < -e; ++r)
          img -= kiz.monomial_pow(e + r) * act.f_z * LineElement::z(-r - 1);
    }
    out += img.scaled(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classified families.
// ---------------------------------------------------------------------------

/// Generic weight family: weights alpha, beta with alpha^u beta^v = q^2,
/// no relation alpha^m = beta^n for nonzero m, n, parameter a:
///   e(x) = a q^{uv+3} (1 - alpha q^v)/(1-q^2)^2 x^{u+1} y^v
///   e(y) = a q^{uv+3} (q^u - beta)/(1-q^2)^2 x^u y^{v+1}
///   f(x) = -(alpha^-1 - q^-v)/a x^{1-u} y^{-v}
///   f(y) = -(beta^-1 q^-u - 1)/a x^{-u} y^{1-v}
inline Action generic_family(long long u, long long v, const Unit& alpha, const Unit& beta,
                             const Unit& a) {
  if (alpha.pow(u) * beta.pow(v) != Unit::q_pow(2))
    fail(Errc::WeightRelationViolated, "alpha^u beta^v = q^2 fails on the unit lattice");
  if (auto rel = unit_power_relation(alpha, beta))
    fail(Errc::GenericityViolated,
         "alpha^" + std::to_string(rel->first) + " = beta^" + std::to_string(rel->second));

  const Scalar al = alpha.to_scalar(), be = beta.to_scalar(), av = a.to_scalar();
  const Scalar one = Scalar::one();
  const Scalar denom = (one - Scalar::q_pow(2)).pow(2);
  const Scalar e_pref = av * Scalar::q_pow(u * v + 3) / denom;

  Action act;
  act.k = Auto::units_only(alpha, beta);
  act.e_x = PlaneElement::term(e_pref * (one - al * Scalar::q_pow(v)), u + 1, v);
  act.e_y = PlaneElement::term(e_pref * (Scalar::q_pow(u) - be), u, v + 1);
  act.f_x = PlaneElement::term(-(al.inv() - Scalar::q_pow(-v)) / av, 1 - u, -v);
  act.f_y = PlaneElement::term(-(be.inv() * Scalar::q_pow(-u) - one) / av, -u, 1 - v);
  act.params = {{"family", "generic"},
                {"u", std::to_string(u)},
                {"v", std::to_string(v)},
                {"alpha", alpha.str()},
                {"beta", beta.str()},
                {"a", a.str()}};
  return act;
}

/// sigma = -I family: k(x) = alpha^-1 x^-1, k(y) = beta^-1 y^-1, e = f = 0.
inline Action minus_identity_family(const Unit& alpha, const Unit& beta) {
  Action act;
  act.k = Auto{SL2{-1, 0, 0, -1}, alpha.inv(), beta.inv()};
  act.params = {{"family", "minus_identity"}, {"alpha", alpha.str()}, {"beta", beta.str()}};
  return act;
}

/// Weight basis attached to the sigma = -I family:
///   u_ij = alpha^i beta^j x^i y^j + x^-i y^-j   (k-eigenvalue +1)
///   v_ij = alpha^i beta^j x^i y^j - x^-i y^-j   (k-eigenvalue -1)
inline std::pair<PlaneElement, PlaneElement> weight_basis(const Unit& alpha, const Unit& beta,
                                                          long long i, long long j) {
  if (i <= 0 || j <= 0) fail(Errc::ConfigError, "weight basis needs i, j > 0");
  Scalar w = (alpha.pow(i) * beta.pow(j)).to_scalar();
  PlaneElement high = PlaneElement::term(w, i, j);
  PlaneElement low = PlaneElement::term(Scalar::one(), -i, -j);
  return {high + low, high - low};
}

enum class LineFamilyKind { Scaling, Sign, Inverting };  // cases 1, 1', 2

/// Symmetries on C[z^{+-1}]:
///  - Scaling (case 1): gamma^{r-1} = q^2; k(z) = gamma z,
///      e(z) = a/(q^2-1) z^r,
///      f(z) = q^3 (gamma-1)(gamma^-1-1)/(q^2-1) a^-1 z^{2-r}.
///    The f coefficient is pinned by applying ef - fe = (k - k^-1)/(q - q^-1)
///    to z; the product of the two leading constants comes out as
///    -q (gamma-1)^2 / (gamma (q-q^-1)^2).
///  - Sign: k(z) = (+-1) z, e = f = 0.
///  - Inverting (case 2): k(z) = gamma z^-1, e = f = 0.
inline LineAction line_family(LineFamilyKind kind, const Unit& gamma, const Unit& a,
                              long long r) {
  LineAction act;
  switch (kind) {
    case LineFamilyKind::Scaling: {
      if (gamma.pow(r - 1) != Unit::q_pow(2))
        fail(Errc::RelationViolated, "gamma^(r-1) = q^2 fails on the unit lattice");
      Scalar g = gamma.to_scalar(), av = a.to_scalar();
      const Scalar one = Scalar::one();
      act.k = LineAuto{gamma, false};
      act.e_z = LineElement::term(av / (Scalar::q_pow(2) - one), r);
      act.f_z = LineElement::term(
          Scalar::q_pow(3) * (g - one) * (g.inv() - one) / (Scalar::q_pow(2) - one) / av, 2 - r);
      act.params = {{"family", "line_scaling"}, {"gamma", gamma.str()}, {"a", a.str()},
                    {"r", std::to_string(r)}};
      return act;
    }
    case LineFamilyKind::Sign: {
      if (!(gamma == Unit::one() || gamma == Unit::of_rational(rat_of(-1))))
        fail(Errc::RelationViolated, "sign family needs gamma in {1,-1}");
      act.k = LineAuto{gamma, false};
      act.params = {{"family", "line_sign"}, {"gamma", gamma.str()}};
      return act;
    }
    case LineFamilyKind::Inverting: {
      act.k = LineAuto{gamma, true};
      act.params = {{"family", "line_inverting"}, {"gamma", gamma.str()}};
      return act;
    }
  }
  fail(Errc::ConfigError, "unknown line family kind");
}

// ---------------------------------------------------------------------------
// Conjugation by automorphisms: pi'(h) = phi pi(h) phi^-1.
// ---------------------------------------------------------------------------

inline Action conjugate(const Action& act, const Auto& phi) {
  const Auto phi_inv = inverse(phi);
  Action out;
  out.k = compose(phi, compose(act.k, phi_inv));
  out.e_x = apply(phi, apply_gen(act, Gen::E, apply(phi_inv, PlaneElement::x())));
  out.e_y = apply(phi, apply_gen(act, Gen::E, apply(phi_inv, PlaneElement::y())));
  out.f_x = apply(phi, apply_gen(act, Gen::F, apply(phi_inv, PlaneElement::x())));
  out.f_y = apply(phi, apply_gen(act, Gen::F, apply(phi_inv, PlaneElement::y())));
  out.params = act.params;
  out.params["conjugated"] = "true";
  return out;
}

inline LineAction conjugate(const LineAction& act, const LineAuto& psi) {
  const LineAuto psi_inv = inverse(psi);
  LineAction out;
  out.k = compose(psi, compose(act.k, psi_inv));
  out.e_z = apply(psi, apply_gen(act, Gen::E, apply(psi_inv, LineElement::z())));
  out.f_z = apply(psi, apply_gen(act, Gen::F, apply(psi_inv, LineElement::z())));
  out.params = act.params;
  out.params["conjugated"] = "true";
  return out;
}

// ---------------------------------------------------------------------------
// Weight-action coefficient constraints (the yx = qxy projection):
//   a_{i+1,j} (q^i - beta) = b_{i,j+1} (1 - alpha q^j)
//   c_{i+1,j} (1 - beta^-1 q^i) = d_{i,j+1} (q^j - alpha^-1)
// ---------------------------------------------------------------------------

struct RatioWitness {
  std::string relation;  // "ab" or "cd"
  long long i = 0, j = 0;
  Scalar lhs, rhs;
  bool pass = true;
};

struct RatioReport {
  bool pass = true;
  std::vector<RatioWitness> witnesses;
};

inline RatioReport ratio_check(const Action& act) {
  if (!act.is_weight()) fail(Errc::NotAWeightAction, "ratio_check needs sigma = I");
  const Scalar al = act.k.alpha.to_scalar(), be = act.k.beta.to_scalar();
  RatioReport rep;
  auto run = [&](const char* name, const PlaneElement& first, const PlaneElement& second,
                 bool inv_weights) {
    // collect index pairs (i,j) to probe from both supports
    std::set<std::pair<long long, long long>> idx;
    for (auto& [k, c] : first.terms()) idx.insert({k.first - 1, k.second});
    for (auto& [k, c] : second.terms()) idx.insert({k.first, k.second - 1});
    for (auto& [i, j] : idx) {
      Scalar lhs, rhs;
      if (!inv_weights) {
        lhs = first.coeff(i + 1, j) * (Scalar::q_pow(i) - be);
        rhs = second.coeff(i, j + 1) * (Scalar::one() - al * Scalar::q_pow(j));
      } else {
        lhs = first.coeff(i + 1, j) * (Scalar::one() - be.inv() * Scalar::q_pow(i));
        rhs = second.coeff(i, j + 1) * (Scalar::q_pow(j) - al.inv());
      }
      RatioWitness w{name, i, j, lhs, rhs, lhs == rhs};
      rep.pass = rep.pass && w.pass;
      rep.witnesses.push_back(std::move(w));
    }
  };
  run("ab", act.e_x, act.e_y, false);
  run("cd", act.f_x, act.f_y, true);
  return rep;
}

// ---------------------------------------------------------------------------
// Closed-form images of powers.
// ---------------------------------------------------------------------------

enum class PlaneVar { X, Y };

namespace detail {

inline Scalar safe_ratio(const Scalar& num, const Scalar& den) {
  if (den.is_zero()) fail(Errc::DegenerateRatio, "vanishing closed-form denominator");
  return num / den;
}

}  // namespace detail

/// Weight-case closed forms (sigma = I), per support term:
///   e(x^p): a_{ij} (alpha^p q^{jp} - 1)/(alpha q^j - 1) x^{p-1+i} y^j
///   e(y^p): b_{ij} (beta^p - q^{ip})/(beta - q^i)       x^i y^{p-1+j}
///   f(x^p): c_{ij} (alpha^-p - q^{jp})/(alpha^-1 - q^j) x^{p-1+i} y^j
///   f(y^p): d_{ij} (beta^-p q^{ip} - 1)/(beta^-1 q^i - 1) x^i y^{p-1+j}
/// For general sigma only the e-images have displayed closed forms, the
/// telescoping sums of e_power above.
inline PlaneElement closed_form_power(const Action& act, Gen which, PlaneVar var, long long p) {
  if (which != Gen::E && which != Gen::F)
    fail(Errc::ConfigError, "closed forms exist for e and f only");
  if (p == 0) return PlaneElement::zero();

  if (act.is_weight()) {
    const Scalar al = act.k.alpha.to_scalar(), be = act.k.beta.to_scalar();
    const PlaneElement& img = which == Gen::E ? (var == PlaneVar::X ? act.e_x : act.e_y)
                                              : (var == PlaneVar::X ? act.f_x : act.f_y);
    PlaneElement out;
    for (auto& [key, c] : img.terms()) {
      auto [i, j] = key;
      Scalar ratio;
      if (which == Gen::E && var == PlaneVar::X)
        ratio = detail::safe_ratio(al.pow(p) * Scalar::q_pow(j * p) - Scalar::one(),
                                   al * Scalar::q_pow(j) - Scalar::one());
      else if (which == Gen::E && var == PlaneVar::Y)
        ratio = detail::safe_ratio(be.pow(p) - Scalar::q_pow(i * p), be - Scalar::q_pow(i));
      else if (which == Gen::F && var == PlaneVar::X)
        ratio = detail::safe_ratio(al.pow(-p) - Scalar::q_pow(j * p), al.inv() - Scalar::q_pow(j));
      else
        ratio = detail::safe_ratio(be.pow(-p) * Scalar::q_pow(i * p) - Scalar::one(),
                                   be.inv() * Scalar::q_pow(i) - Scalar::one());
      long long oi = var == PlaneVar::X ? p - 1 + i : i;
      long long oj = var == PlaneVar::X ? j : p - 1 + j;
      out.add_term(oi, oj, c * ratio);
    }
    return out;
  }

  if (which == Gen::E) {
    PlaneElement mono = var == PlaneVar::X ? PlaneElement::x() : PlaneElement::y();
    const PlaneElement& e_img = var == PlaneVar::X ? act.e_x : act.e_y;
    PlaneElement k_img =
        var == PlaneVar::X ? act.k.image_x() : act.k.image_y();
    return detail::e_power(mono, e_img, k_img, p);
  }
  fail(Errc::NotAWeightAction, "no displayed closed form for f with sigma != I");
}

/// Line closed forms:
///   e(z^p) = (gamma^p - 1)/(gamma - 1)     z^{p-1} e(z)
///   f(z^p) = (gamma^-p - 1)/(gamma^-1 - 1) z^{p-1} f(z)
/// (the f ratio telescopes over gamma^-1 because kinv drives its Leibniz
/// rule; both reduce to the plain image at p = 1).
inline LineElement closed_form_power(const LineAction& act, Gen which, long long p) {
  if (which != Gen::E && which != Gen::F)
    fail(Errc::ConfigError, "closed forms exist for e and f only");
  const LineElement& img = which == Gen::E ? act.e_z : act.f_z;
  if (p == 0 || img.is_zero()) return LineElement::zero();
  if (act.k.invert) fail(Errc::NotAWeightAction, "scaling k-action required");
  Scalar ratio = which == Gen::E ? geom_ratio(act.k.gamma, p) : geom_ratio(act.k.gamma.inv(), p);
  return LineElement::z(p - 1).scaled(ratio) * img;
}

// ---------------------------------------------------------------------------
// Canonical single-image mutations for sensitivity tests.
// ---------------------------------------------------------------------------

enum class ActionImage { EX, EY, FX, FY };
enum class MutationKind { ScaleByQ, Negate, ShiftXExp };

inline Action mutate(const Action& act, ActionImage image, MutationKind kind) {
  Action out = act;
  PlaneElement& target = image == ActionImage::EX   ? out.e_x
                         : image == ActionImage::EY ? out.e_y
                         : image == ActionImage::FX ? out.f_x
                                                    : out.f_y;
  PlaneElement replaced;
  for (auto& [key, c] : target.terms()) {
    switch (kind) {
      case MutationKind::ScaleByQ: replaced.add_term(key.first, key.second, c * Scalar::q()); break;
      case MutationKind::Negate: replaced.add_term(key.first, key.second, -c); break;
      case MutationKind::ShiftXExp: replaced.add_term(key.first + 1, key.second, c); break;
    }
  }
  target = replaced;
  out.params["mutated"] = "true";
  return out;
}

}  // namespace qplane
