#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qplane/verifier.hpp"

namespace qplane {

/// Square candidate-support window {(i,j): |i|,|j| <= B}.
struct SupportBox {
  int B;
  explicit SupportBox(int bound) : B(bound) {
    if (bound < 1) fail(Errc::ConfigError, "support bound must be >= 1");
  }
  bool contains(long long i, long long j) const {
    return i >= -B && i <= B && j >= -B && j <= B;
  }
};

namespace solvedetail {

using Key = PlaneElement::Key;

// Affine expression in the solver unknowns over the Scalar field.
struct LinExpr {
  std::map<int, Scalar> coef;
  Scalar cst;

  bool trivial() const { return coef.empty() && cst.is_zero(); }

  void add_coef(int u, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coef.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coef.erase(it);
    }
  }
  void add(const LinExpr& o, const Scalar& scale) {
    if (scale.is_zero()) return;
    for (auto& [u, c] : o.coef) add_coef(u, c * scale);
    cst += o.cst * scale;
  }
  LinExpr scaled(const Scalar& s) const {
    LinExpr r;
    r.add(*this, s);
    return r;
  }
};

// Element of the plane algebra whose coefficients are affine in unknowns.
using SymElem = std::map<Key, LinExpr>;

inline void sym_add_term(SymElem& e, Key k, const LinExpr& x, const Scalar& scale) {
  if (x.trivial() || scale.is_zero()) return;
  e[k].add(x, scale);
  if (e[k].trivial()) e.erase(k);
}

inline SymElem sym_scaled(const SymElem& e, const Scalar& s) {
  SymElem r;
  for (auto& [k, x] : e) sym_add_term(r, k, x, s);
  return r;
}

inline void sym_accumulate(SymElem& into, const SymElem& other, const Scalar& scale) {
  for (auto& [k, x] : other) sym_add_term(into, k, x, scale);
}

// concrete * symbolic and symbolic * concrete, tracking the q^{jk} twist.
inline SymElem sym_mul_left(const PlaneElement& a, const SymElem& b) {
  SymElem r;
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, x] : b) {
      Scalar c = ca * Scalar::q_pow(ka.second * kb.first);
      sym_add_term(r, {ka.first + kb.first, ka.second + kb.second}, x, c);
    }
  return r;
}
inline SymElem sym_mul_right(const SymElem& a, const PlaneElement& b) {
  SymElem r;
  for (auto& [ka, x] : a)
    for (auto& [kb, cb] : b.terms()) {
      Scalar c = cb * Scalar::q_pow(ka.second * kb.first);
      sym_add_term(r, {ka.first + kb.first, ka.second + kb.second}, x, c);
    }
  return r;
}

inline SymElem sym_apply_auto(const Auto& phi, const SymElem& e) {
  SymElem r;
  PlaneElement ix = phi.image_x(), iy = phi.image_y();
  for (auto& [k, x] : e) {
    PlaneElement m = ix.monomial_pow(k.first) * iy.monomial_pow(k.second);
    const auto& [mk, mc] = *m.terms().begin();
    sym_add_term(r, mk, x, mc);
  }
  return r;
}

// Images of powers with a symbolic generator image in the middle slot,
// mirroring detail::e_power / detail::f_power.
inline SymElem sym_e_power(const PlaneElement& var_mono, const SymElem& e_img,
                           const PlaneElement& k_img, long long p) {
  SymElem out;
  if (p > 0) {
    for (long long r = 0; r < p; ++r)
      sym_accumulate(out,
                     sym_mul_right(sym_mul_left(var_mono.monomial_pow(p - 1 - r), e_img),
                                   k_img.monomial_pow(r)),
                     Scalar::one());
  } else if (p < 0) {
    for (long long r = 0; r < -p; ++r)
      sym_accumulate(out,
                     sym_mul_right(sym_mul_left(var_mono.monomial_pow(p + r), e_img),
                                   k_img.monomial_pow(-r - 1)),
                     -Scalar::one());
  }
  return out;
}

inline SymElem sym_f_power(const PlaneElement& var_mono, const SymElem& f_img,
                           const PlaneElement& kinv_img, long long p) {
  SymElem out;
  if (p > 0) {
    for (long long r = 0; r < p; ++r)
      sym_accumulate(out,
                     sym_mul_right(sym_mul_left(kinv_img.monomial_pow(r), f_img),
                                   var_mono.monomial_pow(p - 1 - r)),
                     Scalar::one());
  } else if (p < 0) {
    for (long long r = 0; r < -p; ++r)
      sym_accumulate(out,
                     sym_mul_right(sym_mul_left(kinv_img.monomial_pow(p + r), f_img),
                                   var_mono.monomial_pow(-r - 1)),
                     -Scalar::one());
  }
  return out;
}

// Full symbolic e/f application to a concrete element.
struct SymAction {
  Auto k;
  Auto k_inv;
  SymElem e_x, e_y, f_x, f_y;

  SymElem apply_e(const PlaneElement& p) const {
    SymElem out;
    const PlaneElement kx = k.image_x(), ky = k.image_y();
    for (auto& [key, c] : p.terms()) {
      SymElem part = sym_mul_left(PlaneElement::x(key.first),
                                  sym_e_power(PlaneElement::y(), e_y, ky, key.second));
      sym_accumulate(part,
                     sym_mul_right(sym_e_power(PlaneElement::x(), e_x, kx, key.first),
                                   ky.monomial_pow(key.second)),
                     Scalar::one());
      sym_accumulate(out, part, c);
    }
    return out;
  }
  SymElem apply_f(const PlaneElement& p) const {
    SymElem out;
    const PlaneElement kix = k_inv.image_x(), kiy = k_inv.image_y();
    for (auto& [key, c] : p.terms()) {
      SymElem part = sym_mul_right(sym_f_power(PlaneElement::x(), f_x, kix, key.first),
                                   PlaneElement::y(key.second));
      sym_accumulate(part,
                     sym_mul_left(kix.monomial_pow(key.first),
                                  sym_f_power(PlaneElement::y(), f_y, kiy, key.second)),
                     Scalar::one());
      sym_accumulate(out, part, c);
    }
    return out;
  }
};

// Sparse reduced row echelon over the Scalar field.
struct LinearSolution {
  bool consistent = true;
  std::vector<int> frees;
  std::map<int, LinExpr> basic;  // pivot unknown -> expression in frees
};

inline LinearSolution solve_linear(const std::vector<LinExpr>& rows_in,
                                   const std::set<int>& unknowns) {
  std::map<int, LinExpr> pivot_rows;  // var -> row with coef[var] == 1
  LinearSolution sol;
  for (const LinExpr& incoming : rows_in) {
    LinExpr row = incoming;
    // substitute known pivots until none of row's vars is a pivot
    for (;;) {
      int hit = -1;
      for (auto& [u, c] : row.coef)
        if (pivot_rows.count(u)) {
          hit = u;
          break;
        }
      if (hit < 0) break;
      Scalar c = row.coef[hit];
      row.coef.erase(hit);
      LinExpr adj = pivot_rows[hit];
      adj.coef.erase(hit);
      row.add(adj, -c);  // pivot var = -(rest), i.e. row += c*(-(rest)) - c*var
    }
    if (row.coef.empty()) {
      if (!row.cst.is_zero()) {
        sol.consistent = false;
        return sol;
      }
      continue;
    }
    int pv = row.coef.begin()->first;
    Scalar inv = row.coef.begin()->second.inv();
    row = row.scaled(inv);
    // eliminate pv from earlier pivot rows
    for (auto& [u, prow] : pivot_rows) {
      auto it = prow.coef.find(pv);
      if (it == prow.coef.end()) continue;
      Scalar c = it->second;
      prow.coef.erase(it);
      LinExpr adj = row;
      adj.coef.erase(pv);
      prow.add(adj, -c);
    }
    pivot_rows.emplace(pv, std::move(row));
  }
  for (int u : unknowns)
    if (!pivot_rows.count(u)) sol.frees.push_back(u);
  for (auto& [u, row] : pivot_rows) {
    LinExpr expr;  // u = -(rest + cst)
    for (auto& [v, c] : row.coef)
      if (v != u) expr.add_coef(v, -c);
    expr.cst = -row.cst;
    sol.basic.emplace(u, std::move(expr));
  }
  return sol;
}

}  // namespace solvedetail

// ---------------------------------------------------------------------------
// Admissible supports: which candidate exponents survive the k-twisted
// weight equations (ke), (kf) alone.
// ---------------------------------------------------------------------------

enum class ImageSlot { EX = 0, EY = 1, FX = 2, FY = 3 };

struct AdmissibleSupport {
  std::set<PlaneElement::Key> e_x, e_y, f_x, f_y;
  const std::set<PlaneElement::Key>& of(ImageSlot s) const {
    switch (s) {
      case ImageSlot::EX: return e_x;
      case ImageSlot::EY: return e_y;
      case ImageSlot::FX: return f_x;
      case ImageSlot::FY: return f_y;
    }
    return e_x;
  }
};

namespace solvedetail {

// Unknown ids: slot-major over the per-slot candidate lists.
struct UnknownTable {
  std::vector<std::pair<ImageSlot, Key>> list;
  std::map<std::pair<int, Key>, int> index;

  int add(ImageSlot s, Key k) {
    int id = static_cast<int>(list.size());
    list.push_back({s, k});
    index.emplace(std::make_pair(static_cast<int>(s), k), id);
    return id;
  }
  std::optional<int> find(ImageSlot s, Key k) const {
    auto it = index.find({static_cast<int>(s), k});
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  std::set<int> ids_of(ImageSlot s) const {
    std::set<int> out;
    for (size_t i = 0; i < list.size(); ++i)
      if (list[i].first == s) out.insert(static_cast<int>(i));
    return out;
  }
  std::set<int> all_ids() const {
    std::set<int> out;
    for (size_t i = 0; i < list.size(); ++i) out.insert(static_cast<int>(i));
    return out;
  }
};

inline SymElem sym_image(const UnknownTable& tab, ImageSlot s) {
  SymElem e;
  for (size_t i = 0; i < tab.list.size(); ++i)
    if (tab.list[i].first == s) {
      LinExpr x;
      x.add_coef(static_cast<int>(i), Scalar::one());
      e.emplace(tab.list[i].second, std::move(x));
    }
  return e;
}

inline void equations_from(const SymElem& lhs_minus_rhs, std::vector<LinExpr>& out) {
  for (auto& [k, x] : lhs_minus_rhs) out.push_back(x);
}

// (ke) on x and y: k(e(x)) - q^2 e(k(x)) = 0, plus the same for y.
// (kf) analogously with q^-2. The qpr rows encode the Leibniz expansion of
// g(yx - q xy) = 0 for g = e, f.
inline std::vector<LinExpr> linear_rows_e(const SymAction& sa) {
  std::vector<LinExpr> rows;
  const Scalar q2 = Scalar::q_pow(2);
  {
    SymElem lhs = sym_apply_auto(sa.k, sa.e_x);
    SymElem rhs = sa.apply_e(apply(sa.k, PlaneElement::x()));
    sym_accumulate(lhs, rhs, -q2);
    equations_from(lhs, rows);
  }
  {
    SymElem lhs = sym_apply_auto(sa.k, sa.e_y);
    SymElem rhs = sa.apply_e(apply(sa.k, PlaneElement::y()));
    sym_accumulate(lhs, rhs, -q2);
    equations_from(lhs, rows);
  }
  return rows;
}

inline std::vector<LinExpr> linear_rows_f(const SymAction& sa) {
  std::vector<LinExpr> rows;
  const Scalar qm2 = Scalar::q_pow(-2);
  {
    SymElem lhs = sym_apply_auto(sa.k, sa.f_x);
    SymElem rhs = sa.apply_f(apply(sa.k, PlaneElement::x()));
    sym_accumulate(lhs, rhs, -qm2);
    equations_from(lhs, rows);
  }
  {
    SymElem lhs = sym_apply_auto(sa.k, sa.f_y);
    SymElem rhs = sa.apply_f(apply(sa.k, PlaneElement::y()));
    sym_accumulate(lhs, rhs, -qm2);
    equations_from(lhs, rows);
  }
  return rows;
}

inline std::vector<LinExpr> qpr_rows_e(const SymAction& sa) {
  // y e(x) + e(y) k(x) - q [x e(y) + e(x) k(y)] = 0
  std::vector<LinExpr> rows;
  SymElem lhs = sym_mul_left(PlaneElement::y(), sa.e_x);
  sym_accumulate(lhs, sym_mul_right(sa.e_y, sa.k.image_x()), Scalar::one());
  sym_accumulate(lhs, sym_mul_left(PlaneElement::x(), sa.e_y), -Scalar::q());
  sym_accumulate(lhs, sym_mul_right(sa.e_x, sa.k.image_y()), -Scalar::q());
  equations_from(lhs, rows);
  return rows;
}

inline std::vector<LinExpr> qpr_rows_f(const SymAction& sa) {
  // f(y) x + kinv(y) f(x) - q [f(x) y + kinv(x) f(y)] = 0
  std::vector<LinExpr> rows;
  SymElem lhs = sym_mul_right(sa.f_y, PlaneElement::x());
  sym_accumulate(lhs, sym_mul_left(sa.k_inv.image_y(), sa.f_x), Scalar::one());
  sym_accumulate(lhs, sym_mul_right(sa.f_x, PlaneElement::y()), -Scalar::q());
  sym_accumulate(lhs, sym_mul_left(sa.k_inv.image_x(), sa.f_y), -Scalar::q());
  equations_from(lhs, rows);
  return rows;
}

}  // namespace solvedetail

/// Candidate exponents compatible with the k-twisted weight equations.
/// A point is excluded exactly when the (ke)/(kf) linear system forces its
/// coefficient to zero; for weight automorphisms this reduces to the
/// condition alpha^i beta^j = q^{+-2} * (weight of the source generator).
inline AdmissibleSupport admissible_support(const Auto& k_auto, const SupportBox& box) {
  using namespace solvedetail;
  UnknownTable tab;
  for (int s = 0; s < 4; ++s)
    for (long long i = -box.B; i <= box.B; ++i)
      for (long long j = -box.B; j <= box.B; ++j)
        tab.add(static_cast<ImageSlot>(s), {i, j});

  SymAction sa;
  sa.k = k_auto;
  sa.k_inv = inverse(k_auto);
  sa.e_x = sym_image(tab, ImageSlot::EX);
  sa.e_y = sym_image(tab, ImageSlot::EY);
  sa.f_x = sym_image(tab, ImageSlot::FX);
  sa.f_y = sym_image(tab, ImageSlot::FY);

  std::vector<LinExpr> rows_e = linear_rows_e(sa);
  std::vector<LinExpr> rows_f = linear_rows_f(sa);

  std::set<int> e_ids = tab.ids_of(ImageSlot::EX);
  for (int u : tab.ids_of(ImageSlot::EY)) e_ids.insert(u);
  std::set<int> f_ids = tab.ids_of(ImageSlot::FX);
  for (int u : tab.ids_of(ImageSlot::FY)) f_ids.insert(u);

  LinearSolution se = solve_linear(rows_e, e_ids);
  LinearSolution sf = solve_linear(rows_f, f_ids);

  AdmissibleSupport out;
  auto keep = [&](const LinearSolution& s, int id) {
    auto it = s.basic.find(id);
    return it == s.basic.end() || !it->second.trivial();
  };
  for (size_t i = 0; i < tab.list.size(); ++i) {
    auto [slot, key] = tab.list[i];
    const LinearSolution& s = (slot == ImageSlot::EX || slot == ImageSlot::EY) ? se : sf;
    if (!keep(s, static_cast<int>(i))) continue;
    switch (slot) {
      case ImageSlot::EX: out.e_x.insert(key); break;
      case ImageSlot::EY: out.e_y.insert(key); break;
      case ImageSlot::FX: out.f_x.insert(key); break;
      case ImageSlot::FY: out.f_y.insert(key); break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The bounded-support solver.
// ---------------------------------------------------------------------------

struct SolveOptions {
  bool prune = true;
  int budget_unknowns = 256;
  int verify_N = 0;  // 0: reuse the box bound
  std::vector<std::string> param_names = {"a", "b", "g", "h", "w"};
};

namespace solvedetail {

inline Scalar eval_expr(const LinExpr& x, const std::map<int, Scalar>& frees) {
  Scalar acc = x.cst;
  for (auto& [u, c] : x.coef) {
    auto it = frees.find(u);
    if (it == frees.end()) fail(Errc::ConfigError, "unresolved unknown in solver expression");
    acc += c * it->second;
  }
  return acc;
}

inline PlaneElement build_image(const UnknownTable& tab, ImageSlot slot,
                                const std::map<int, Scalar>& values) {
  PlaneElement out;
  for (size_t i = 0; i < tab.list.size(); ++i) {
    if (tab.list[i].first != slot) continue;
    auto it = values.find(static_cast<int>(i));
    if (it == values.end()) continue;
    out.add_term(tab.list[i].second.first, tab.list[i].second.second, it->second);
  }
  return out;
}

// fresh parameter names that do not collide with the automorphism's units
inline std::vector<std::string> fresh_params(const Auto& k_auto,
                                             const std::vector<std::string>& prefs,
                                             size_t need) {
  std::set<int> used;
  for (auto& [v, e] : k_auto.alpha.exps()) used.insert(v);
  for (auto& [v, e] : k_auto.beta.exps()) used.insert(v);
  std::vector<std::string> out;
  for (const auto& name : prefs) {
    if (out.size() >= need) break;
    int idx = Indeterminates::instance().intern(name);
    if (idx == kVarQ || used.count(idx)) continue;
    out.push_back(name);
  }
  int suffix = 1;
  while (out.size() < need) out.push_back("p" + std::to_string(suffix++));
  return out;
}

}  // namespace solvedetail

/// Every returned Action has the given k-automorphism, support inside the
/// box, and passes verify_module_algebra at the box bound. Families are
/// reported with fresh indeterminate parameters in place of free
/// coefficients (one Action per parametrized family). An empty result means
/// exactly that no solution has support inside the box — nothing more.
inline std::vector<Action> solve(const Auto& k_auto, const SupportBox& box,
                                 const SolveOptions& opts = SolveOptions()) {
  using namespace solvedetail;

  AdmissibleSupport adm;
  if (opts.prune) {
    adm = admissible_support(k_auto, box);
  } else {
    for (long long i = -box.B; i <= box.B; ++i)
      for (long long j = -box.B; j <= box.B; ++j) {
        adm.e_x.insert({i, j});
        adm.e_y.insert({i, j});
        adm.f_x.insert({i, j});
        adm.f_y.insert({i, j});
      }
  }

  UnknownTable tab;
  for (auto s : {ImageSlot::EX, ImageSlot::EY, ImageSlot::FX, ImageSlot::FY})
    for (auto& k : adm.of(s)) tab.add(s, k);
  if (static_cast<int>(tab.list.size()) > opts.budget_unknowns)
    fail(Errc::SolverBudgetExceeded,
         std::to_string(tab.list.size()) + " unknowns exceed the budget");

  SymAction sa;
  sa.k = k_auto;
  sa.k_inv = inverse(k_auto);
  sa.e_x = sym_image(tab, ImageSlot::EX);
  sa.e_y = sym_image(tab, ImageSlot::EY);
  sa.f_x = sym_image(tab, ImageSlot::FX);
  sa.f_y = sym_image(tab, ImageSlot::FY);

  // e-side linear block
  std::vector<LinExpr> rows_e = linear_rows_e(sa);
  for (auto& r : qpr_rows_e(sa)) rows_e.push_back(r);
  std::set<int> e_ids = tab.ids_of(ImageSlot::EX);
  for (int u : tab.ids_of(ImageSlot::EY)) e_ids.insert(u);
  LinearSolution se = solve_linear(rows_e, e_ids);

  if (se.frees.size() > 4)
    fail(Errc::SolverBudgetExceeded,
         "e-side kernel has " + std::to_string(se.frees.size()) + " free directions");

  std::set<int> f_ids = tab.ids_of(ImageSlot::FX);
  for (int u : tab.ids_of(ImageSlot::FY)) f_ids.insert(u);

  const Scalar casimir = (Scalar::q() - Scalar::q_pow(-1)).inv();
  std::vector<Action> results;

  // Enumerate zero/free patterns over the e-kernel directions: all-free
  // first (the generic stratum), then each proper degeneration, down to
  // e = 0. Structural dedup keeps the list canonical.
  size_t nfree = se.frees.size();
  for (size_t mask_count = 0; mask_count <= nfree; ++mask_count) {
    std::vector<std::vector<int>> masks;  // indices of frees set to zero
    // enumerate subsets of size mask_count in deterministic order
    std::function<void(size_t, std::vector<int>&)> rec = [&](size_t start,
                                                             std::vector<int>& cur) {
      if (cur.size() == mask_count) {
        masks.push_back(cur);
        return;
      }
      for (size_t i = start; i < nfree; ++i) {
        cur.push_back(static_cast<int>(i));
        rec(i + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(0, cur);

    for (auto& zeroed : masks) {
      // assign scalars to the e-side frees
      std::set<size_t> zs(zeroed.begin(), zeroed.end());
      size_t live = nfree - zeroed.size();
      std::vector<std::string> params =
          fresh_params(k_auto, opts.param_names, live + f_ids.size());
      size_t pi = 0;
      std::map<int, Scalar> e_vals;
      for (size_t i = 0; i < nfree; ++i)
        e_vals[se.frees[i]] =
            zs.count(i) ? Scalar() : Unit::variable(var(params[pi++])).to_scalar();
      for (auto& [u, expr] : se.basic) e_vals[u] = eval_expr(expr, e_vals);

      Action cand;
      cand.k = k_auto;
      cand.e_x = build_image(tab, ImageSlot::EX, e_vals);
      cand.e_y = build_image(tab, ImageSlot::EY, e_vals);

      // f-side: (kf), qpr-f, and (effe) on x and y with e concrete
      std::vector<LinExpr> rows_f = linear_rows_f(sa);
      for (auto& r : qpr_rows_f(sa)) rows_f.push_back(r);

      Action e_only = cand;  // e images fixed, f images zero for applying e
      for (const PlaneElement& gen : {PlaneElement::x(), PlaneElement::y()}) {
        // e(f(gen)) symbolic: apply concrete e to each symbolic f-monomial
        SymElem ef;
        SymElem f_of_gen = sa.apply_f(gen);
        for (auto& [key, expr] : f_of_gen) {
          PlaneElement e_img =
              apply_gen(e_only, Gen::E, PlaneElement::term(Scalar::one(), key.first, key.second));
          for (auto& [k2, c2] : e_img.terms()) sym_add_term(ef, k2, expr, c2);
        }
        // f(e(gen)) symbolic: e(gen) concrete, f symbolic
        SymElem fe = sa.apply_f(apply_gen(e_only, Gen::E, gen));
        // rhs concrete
        PlaneElement rhs = (apply(k_auto, gen) - apply(sa.k_inv, gen)).scaled(casimir);
        SymElem eq = ef;
        sym_accumulate(eq, fe, -Scalar::one());
        for (auto& [key, c] : rhs.terms()) {
          LinExpr constant;
          constant.cst = c;
          sym_add_term(eq, key, constant, -Scalar::one());
        }
        equations_from(eq, rows_f);
      }

      LinearSolution sf = solve_linear(rows_f, f_ids);
      if (!sf.consistent) continue;

      std::map<int, Scalar> f_vals;
      for (int u : sf.frees) f_vals[u] = Unit::variable(var(params[pi++])).to_scalar();
      bool bad = false;
      try {
        for (auto& [u, expr] : sf.basic) f_vals[u] = eval_expr(expr, f_vals);
      } catch (const Error&) {
        bad = true;
      }
      if (bad) continue;
      cand.f_x = build_image(tab, ImageSlot::FX, f_vals);
      cand.f_y = build_image(tab, ImageSlot::FY, f_vals);

      int bound = opts.verify_N > 0 ? opts.verify_N : box.B;
      if (!verify_module_algebra(cand, bound).pass) continue;

      cand.params["solver"] = "bounded-box";
      bool dup = false;
      for (auto& r : results) dup = dup || r == cand;
      if (!dup) results.push_back(std::move(cand));
    }
  }
  return results;
}

// ---------------------------------------------------------------------------
// Finite-order obstruction: if the k-automorphism has finite order d > 2,
// k^d = 1 forces q^{2d} e = e and q^{-2d} f = f, so e = f = 0, and then
// ef - fe = (k - k^-1)/(q - q^-1) fails because k^2 != id.
// ---------------------------------------------------------------------------

enum class Obstruction { NoSymmetryPossible, Inconclusive };

struct ObstructionVerdict {
  Obstruction verdict = Obstruction::Inconclusive;
  std::optional<int> k_order;
  std::string reason;
};

inline ObstructionVerdict finite_order_obstruction(const Auto& k_auto, int max_order = 24) {
  ObstructionVerdict v;
  v.k_order = order(k_auto, max_order);
  if (!v.k_order) {
    v.reason = "order exceeds bound " + std::to_string(max_order);
    return v;
  }
  if (*v.k_order <= 2) {
    v.reason = "order " + std::to_string(*v.k_order) + " <= 2, symmetries may exist";
    return v;
  }
  v.verdict = Obstruction::NoSymmetryPossible;
  v.reason = "k has finite order " + std::to_string(*v.k_order) +
             " > 2: e and f must vanish and the ef - fe relation fails";
  return v;
}

// ---------------------------------------------------------------------------
// Family matching and numeric draws.
// ---------------------------------------------------------------------------

/// Whether two one-parameter families coincide up to reparametrization:
/// substituting got_param := mu(want_param) into `got` must reproduce
/// `want` exactly, where mu is fixed by one nonzero coefficient ratio.
inline bool same_family_up_to_parameter(const Action& got, const Action& want,
                                        const std::string& got_param) {
  if (!(got.k == want.k)) return false;
  int pv = Indeterminates::instance().intern(got_param);

  const PlaneElement* got_imgs[4] = {&got.e_x, &got.e_y, &got.f_x, &got.f_y};
  const PlaneElement* want_imgs[4] = {&want.e_x, &want.e_y, &want.f_x, &want.f_y};

  // locate a reference coefficient, linear and homogeneous in the parameter
  Scalar mu;
  bool have_mu = false;
  for (int s = 0; s < 4 && !have_mu; ++s) {
    for (auto& [key, c] : got_imgs[s]->terms()) {
      Scalar slope = c.subst(pv, Scalar::one());
      if (slope.is_zero()) continue;
      if (c != slope * Scalar::variable(pv)) continue;  // not linear homogeneous
      Scalar target = want_imgs[s]->coeff(key.first, key.second);
      if (target.is_zero()) return false;
      mu = target / slope;
      have_mu = true;
      break;
    }
  }
  if (!have_mu) return got == want;  // parameter-free: plain comparison

  auto subst_elem = [&](const PlaneElement& p) {
    PlaneElement out;
    for (auto& [key, c] : p.terms()) out.add_term(key.first, key.second, c.subst(pv, mu));
    return out;
  };
  for (int s = 0; s < 4; ++s)
    if (subst_elem(*got_imgs[s]) != *want_imgs[s]) return false;
  return true;
}

/// Seeded rational draw in [1/3, 3], avoiding 1, -1 and equal pairs; uses
/// raw engine output (not std distributions) so results are identical on
/// every platform.
inline Rational draw_rational(std::mt19937_64& rng) {
  for (;;) {
    long long den = 1 + static_cast<long long>(rng() % 12);
    long long num = 1 + static_cast<long long>(rng() % (3 * den));
    Rational r = rat_of(num, den);
    if (3 * num >= den && num <= 3 * den && r != 1) return r;
  }
}

inline std::pair<Unit, Unit> draw_unit_pair(std::mt19937_64& rng) {
  for (;;) {
    Rational a = draw_rational(rng);
    Rational b = draw_rational(rng);
    if (a == b) continue;
    return {Unit::of_rational(a), Unit::of_rational(b)};
  }
}

}  // namespace qplane
