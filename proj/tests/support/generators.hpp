#pragma once

// Seeded random generators for property-style tests. All draws go through
// raw engine output so runs are reproducible across platforms.

#include <random>

#include "qplane/qplane.hpp"

namespace qptest {

using namespace qplane;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// small polynomial in q and t with coefficients in [-3, 3]
inline Poly random_poly(std::mt19937_64& rng, int max_terms = 3, int max_deg = 2) {
  Poly p;
  int terms = static_cast<int>(pick(rng, 1, max_terms));
  int tvar = var("t");
  for (int i = 0; i < terms; ++i) {
    long long c = pick(rng, -3, 3);
    Expo e(static_cast<size_t>(tvar) + 1, 0);
    e[0] = static_cast<int>(pick(rng, 0, max_deg));
    e[static_cast<size_t>(tvar)] = static_cast<int>(pick(rng, 0, max_deg));
    p.add_term(expo_trim(std::move(e)), rat_of(c));
  }
  return p;
}

inline Scalar random_scalar(std::mt19937_64& rng) {
  Poly num = random_poly(rng);
  Poly den;
  do {
    den = random_poly(rng, 2, 1);
  } while (den.is_zero());
  if (num.is_zero()) return Scalar();
  return Scalar(num, den);
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng) {
  Scalar s;
  do {
    s = random_scalar(rng);
  } while (s.is_zero());
  return s;
}

inline Unit random_unit(std::mt19937_64& rng) {
  Rational c = rat_of(pick(rng, 1, 5), pick(rng, 1, 5));
  if (pick(rng, 0, 1)) c = -c;
  std::map<int, long long> exps;
  exps[kVarQ] = pick(rng, -2, 2);
  exps[var("t")] = pick(rng, -2, 2);
  return Unit(c, std::move(exps));
}

inline PlaneElement random_plane(std::mt19937_64& rng, int max_terms = 3, int box = 4) {
  PlaneElement p;
  int terms = static_cast<int>(pick(rng, 1, max_terms));
  for (int i = 0; i < terms; ++i)
    p.add_term(pick(rng, -box, box), pick(rng, -box, box), random_scalar(rng));
  return p;
}

inline PlaneElement random_nonzero_plane(std::mt19937_64& rng, int max_terms = 3, int box = 4) {
  PlaneElement p;
  do {
    p = random_plane(rng, max_terms, box);
  } while (p.is_zero());
  return p;
}

inline LineElement random_line(std::mt19937_64& rng, int max_terms = 3, int box = 5) {
  LineElement p;
  int terms = static_cast<int>(pick(rng, 1, max_terms));
  for (int i = 0; i < terms; ++i) p.add_term(pick(rng, -box, box), random_scalar(rng));
  return p;
}

// random SL(2,Z) matrix as a short word in the two standard generators
inline SL2 random_sl2(std::mt19937_64& rng, int max_len = 5) {
  const SL2 S{0, -1, 1, 0};
  const SL2 T{1, 1, 0, 1};
  const SL2 Tinv = T.inverse();
  SL2 m = SL2::identity();
  int len = static_cast<int>(pick(rng, 0, max_len));
  for (int i = 0; i < len; ++i) {
    switch (pick(rng, 0, 2)) {
      case 0: m = m * S; break;
      case 1: m = m * T; break;
      default: m = m * Tinv; break;
    }
  }
  return m;
}

inline Word random_word(std::mt19937_64& rng, int max_len = 6) {
  Word w;
  int len = static_cast<int>(pick(rng, 0, max_len));
  for (int i = 0; i < len; ++i)
    w.push_back(static_cast<Gen>(pick(rng, 0, 3)));
  return w;
}

}  // namespace qptest
