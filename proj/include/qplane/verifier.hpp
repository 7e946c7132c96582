#pragma once

#include <string>
#include <vector>

#include "qplane/action.hpp"

namespace qplane {

/// One verified identity on one witness monomial, both sides kept verbatim.
struct CheckRecord {
  std::string axiom;
  long long i = 0, j = 0;  // witness exponents (j unused for line checks)
  std::string lhs, rhs;
  bool pass = true;
};

struct Report {
  bool pass = true;
  std::vector<CheckRecord> checks;

  void record(const std::string& axiom, long long i, long long j, const std::string& lhs,
              const std::string& rhs, bool ok) {
    pass = pass && ok;
    checks.push_back({axiom, i, j, lhs, rhs, ok});
  }
  const CheckRecord* first_failure() const {
    for (auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

namespace detail {

// Axiom identifiers, shared between the two verifiers.
inline constexpr const char* kAxKKinv = "k_kinv_identity";
inline constexpr const char* kAxKE = "ke_eq_q2_ek";
inline constexpr const char* kAxKF = "kf_eq_qm2_fk";
inline constexpr const char* kAxEFFE = "ef_minus_fe";
inline constexpr const char* kAxUnit = "unit_counit";
inline constexpr const char* kAxLeibniz = "leibniz_defining_relation";

}  // namespace detail

/// Degree-bounded check that `act` satisfies every defining relation of a
/// U_q(sl2)-module algebra. Operator identities (a)-(d) are tested on the
/// monomial basis x^i y^j, |i|,|j| <= N; with linearity this covers the
/// spanned subspace, not the whole algebra — a bounded check, not a proof.
///   (a) k kinv = id
///   (b) k e = q^2 e k
///   (c) k f = q^-2 f k
///   (d) e f - f e = (k - kinv)/(q - q^-1)
///   (e) g(1) = eps(g) 1
///   (f) the Leibniz rule applied to the pair (y, x) is compatible with
///       y x = q x y for each generator.
inline Report verify_module_algebra(const Action& act, int N) {
  if (N < 1) fail(Errc::ConfigError, "degree bound must be >= 1");
  Report rep;
  const Scalar casimir = (Scalar::q() - Scalar::q_pow(-1)).inv();

  for (long long i = -N; i <= N; ++i) {
    for (long long j = -N; j <= N; ++j) {
      const PlaneElement m = PlaneElement::term(Scalar::one(), i, j);
      auto E = [&](const PlaneElement& p) { return apply_gen(act, Gen::E, p); };
      auto F = [&](const PlaneElement& p) { return apply_gen(act, Gen::F, p); };
      auto K = [&](const PlaneElement& p) { return apply_gen(act, Gen::K, p); };
      auto Ki = [&](const PlaneElement& p) { return apply_gen(act, Gen::Kinv, p); };

      {
        PlaneElement lhs = K(Ki(m));
        rep.record(detail::kAxKKinv, i, j, lhs.str(), m.str(), lhs == m);
      }
      {
        PlaneElement lhs = K(E(m));
        PlaneElement rhs = E(K(m)).scaled(Scalar::q_pow(2));
        rep.record(detail::kAxKE, i, j, lhs.str(), rhs.str(), lhs == rhs);
      }
      {
        PlaneElement lhs = K(F(m));
        PlaneElement rhs = F(K(m)).scaled(Scalar::q_pow(-2));
        rep.record(detail::kAxKF, i, j, lhs.str(), rhs.str(), lhs == rhs);
      }
      {
        PlaneElement lhs = E(F(m)) - F(E(m));
        PlaneElement rhs = (K(m) - Ki(m)).scaled(casimir);
        rep.record(detail::kAxEFFE, i, j, lhs.str(), rhs.str(), lhs == rhs);
      }
    }
  }

  // (e) unit axiom: e, f kill 1; k, kinv fix it.
  {
    const PlaneElement one = PlaneElement::one();
    bool ok = apply_gen(act, Gen::E, one).is_zero() && apply_gen(act, Gen::F, one).is_zero() &&
              apply_gen(act, Gen::K, one) == one && apply_gen(act, Gen::Kinv, one) == one;
    rep.record(detail::kAxUnit, 0, 0, "pi(g)(1)", "eps(g) 1", ok);
  }

  // (f) Leibniz consistency on the pair (y, x) against y x = q x y, with
  // both sides expanded by the rule before any normalization.
  {
    const PlaneElement X = PlaneElement::x(), Y = PlaneElement::y();
    const PlaneElement kx = apply_gen(act, Gen::K, X), ky = apply_gen(act, Gen::K, Y);
    const PlaneElement kix = apply_gen(act, Gen::Kinv, X), kiy = apply_gen(act, Gen::Kinv, Y);

    PlaneElement e_yx = Y * act.e_x + act.e_y * kx;
    PlaneElement e_xy = X * act.e_y + act.e_x * ky;
    bool ok_e = e_yx == e_xy.scaled(Scalar::q());
    rep.record(std::string(detail::kAxLeibniz) + "_e", 1, 1, e_yx.str(), e_xy.str(), ok_e);

    PlaneElement f_yx = act.f_y * X + kiy * act.f_x;
    PlaneElement f_xy = act.f_x * Y + kix * act.f_y;
    bool ok_f = f_yx == f_xy.scaled(Scalar::q());
    rep.record(std::string(detail::kAxLeibniz) + "_f", 1, 1, f_yx.str(), f_xy.str(), ok_f);

    PlaneElement k_yx = ky * kx;
    PlaneElement k_xy = kx * ky;
    bool ok_k = k_yx == k_xy.scaled(Scalar::q());
    rep.record(std::string(detail::kAxLeibniz) + "_k", 1, 1, k_yx.str(), k_xy.str(), ok_k);
  }
  return rep;
}

/// Same axiom suite on C[z^{+-1}], over z^p with |p| <= N. The defining
/// relation checked by the Leibniz axiom is z z^-1 = 1.
inline Report verify_line_action(const LineAction& act, int N) {
  if (N < 1) fail(Errc::ConfigError, "degree bound must be >= 1");
  Report rep;
  const Scalar casimir = (Scalar::q() - Scalar::q_pow(-1)).inv();

  for (long long p = -N; p <= N; ++p) {
    const LineElement m = LineElement::z(p);
    auto E = [&](const LineElement& v) { return apply_gen(act, Gen::E, v); };
    auto F = [&](const LineElement& v) { return apply_gen(act, Gen::F, v); };
    auto K = [&](const LineElement& v) { return apply_gen(act, Gen::K, v); };
    auto Ki = [&](const LineElement& v) { return apply_gen(act, Gen::Kinv, v); };

    {
      LineElement lhs = K(Ki(m));
      rep.record(detail::kAxKKinv, p, 0, lhs.str(), m.str(), lhs == m);
    }
    {
      LineElement lhs = K(E(m));
      LineElement rhs = E(K(m)).scaled(Scalar::q_pow(2));
      rep.record(detail::kAxKE, p, 0, lhs.str(), rhs.str(), lhs == rhs);
    }
    {
      LineElement lhs = K(F(m));
      LineElement rhs = F(K(m)).scaled(Scalar::q_pow(-2));
      rep.record(detail::kAxKF, p, 0, lhs.str(), rhs.str(), lhs == rhs);
    }
    {
      LineElement lhs = E(F(m)) - F(E(m));
      LineElement rhs = (K(m) - Ki(m)).scaled(casimir);
      rep.record(detail::kAxEFFE, p, 0, lhs.str(), rhs.str(), lhs == rhs);
    }
  }

  {
    const LineElement one = LineElement::one();
    bool ok = apply_gen(act, Gen::E, one).is_zero() && apply_gen(act, Gen::F, one).is_zero() &&
              apply_gen(act, Gen::K, one) == one && apply_gen(act, Gen::Kinv, one) == one;
    rep.record(detail::kAxUnit, 0, 0, "pi(g)(1)", "eps(g) 1", ok);
  }

  // Leibniz on the pair (z, z^-1): the rule must reproduce eps(g) 1.
  {
    const LineElement Z = LineElement::z(), Zi = LineElement::z(-1);
    const LineElement ez = act.e_z, fz = act.f_z;
    const LineElement e_zi = apply_gen(act, Gen::E, Zi), f_zi = apply_gen(act, Gen::F, Zi);
    LineElement e_pair = Z * e_zi + ez * apply_gen(act, Gen::K, Zi);
    rep.record(std::string(detail::kAxLeibniz) + "_e", 1, -1, e_pair.str(), "0",
               e_pair.is_zero());
    LineElement f_pair = fz * Zi + apply_gen(act, Gen::Kinv, Z) * f_zi;
    rep.record(std::string(detail::kAxLeibniz) + "_f", 1, -1, f_pair.str(), "0",
               f_pair.is_zero());
    LineElement k_pair = apply_gen(act, Gen::K, Z) * apply_gen(act, Gen::K, Zi);
    rep.record(std::string(detail::kAxLeibniz) + "_k", 1, -1, k_pair.str(), "1",
               k_pair == LineElement::one());
  }
  return rep;
}

/// For weight actions, relation (b) on a support pair (i,j) of the e-images
/// is the weight-matching condition alpha^i beta^j = q^2 * (weight of the
/// source generator); similarly (c) with q^-2. Returns whether every
/// support pair matches, the formulation the verifier's operator check must
/// agree with.
inline bool weight_support_condition(const Action& act) {
  if (!act.is_weight()) fail(Errc::NotAWeightAction, "weight condition needs sigma = I");
  const Unit &al = act.k.alpha, &be = act.k.beta;
  auto holds = [&](const PlaneElement& img, const Unit& target) {
    for (auto& [key, c] : img.terms())
      if (al.pow(key.first) * be.pow(key.second) != target) return false;
    return true;
  };
  return holds(act.e_x, Unit::q_pow(2) * al) && holds(act.e_y, Unit::q_pow(2) * be) &&
         holds(act.f_x, Unit::q_pow(-2) * al) && holds(act.f_y, Unit::q_pow(-2) * be);
}

}  // namespace qplane
