#pragma once

#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qplane/scalar.hpp"

namespace qplane {

/// Chevalley generators of U_q(sl2).
enum class Gen { K, Kinv, E, F };

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::K: return "k";
    case Gen::Kinv: return "kinv";
    case Gen::E: return "e";
    case Gen::F: return "f";
  }
  return "?";
}

using Word = std::vector<Gen>;

/// One summand of a free-word expression: coeff * g1 g2 ... gn.
struct WordTerm {
  Scalar coeff;
  Word word;
};

/// PBW basis index: f^i k^j e^l with i, l >= 0 and j signed.
struct PBWKey {
  long long f = 0;
  long long k = 0;
  long long e = 0;
  friend bool operator==(const PBWKey&, const PBWKey&) = default;
  friend bool operator<(const PBWKey& a, const PBWKey& b) {
    if (a.f != b.f) return a.f < b.f;
    if (a.k != b.k) return a.k < b.k;
    return a.e < b.e;
  }
};

/// Element of U_q(sl2) in PBW normal form: sum of c * f^i k^j e^l.
class PBWElement {
 public:
  PBWElement() = default;

  static PBWElement zero() { return {}; }
  static PBWElement one() { return term(Scalar::one(), {0, 0, 0}); }
  static PBWElement generator(Gen g) {
    switch (g) {
      case Gen::K: return term(Scalar::one(), {0, 1, 0});
      case Gen::Kinv: return term(Scalar::one(), {0, -1, 0});
      case Gen::E: return term(Scalar::one(), {0, 0, 1});
      case Gen::F: return term(Scalar::one(), {1, 0, 0});
    }
    return zero();
  }
  static PBWElement term(const Scalar& c, PBWKey k) {
    PBWElement r;
    r.add_term(k, c);
    return r;
  }

  const std::map<PBWKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(PBWKey k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(const PBWKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend PBWElement operator+(PBWElement a, const PBWElement& b) {
    for (auto& [k, c] : b.terms_) a.add_term(k, c);
    return a;
  }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) {
    for (auto& [k, c] : b.terms_) a.add_term(k, -c);
    return a;
  }
  PBWElement& operator+=(const PBWElement& o) { return *this = *this + o; }
  PBWElement scaled(const Scalar& c) const {
    PBWElement r;
    if (c.is_zero()) return r;
    for (auto& [k, cc] : terms_) r.add_term(k, cc * c);
    return r;
  }

  friend bool operator==(const PBWElement& a, const PBWElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

  /// Expand a basis key back into a word (used when multiplying).
  static Word key_word(const PBWKey& k) {
    Word w;
    for (long long i = 0; i < k.f; ++i) w.push_back(Gen::F);
    for (long long i = 0; i < (k.k > 0 ? k.k : -k.k); ++i)
      w.push_back(k.k > 0 ? Gen::K : Gen::Kinv);
    for (long long i = 0; i < k.e; ++i) w.push_back(Gen::E);
    return w;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      if (k.f != 0) os << " f" << (k.f == 1 ? "" : "^" + std::to_string(k.f));
      if (k.k != 0) os << " k" << (k.k == 1 ? "" : "^" + std::to_string(k.k));
      if (k.e != 0) os << " e" << (k.e == 1 ? "" : "^" + std::to_string(k.e));
      first = false;
    }
    return os.str();
  }

 private:
  std::map<PBWKey, Scalar> terms_;
};

/// Rewrites an arbitrary word expression into PBW normal form f^i k^j e^l.
/// The rewriting system (order F < K, Kinv < E):
///   k kinv -> 1,  kinv k -> 1,
///   e k    -> q^-2 k e,     e kinv -> q^2 kinv e,
///   k f    -> q^-2 f k,     kinv f -> q^2 f kinv,
///   e f    -> f e + (k - kinv)/(q - q^-1).
/// Terminates and is confluent; tests spot-check order independence.
inline PBWElement pbw_normalize(const std::vector<WordTerm>& input) {
  auto rank = [](Gen g) {
    switch (g) {
      case Gen::F: return 0;
      case Gen::K:
      case Gen::Kinv: return 1;
      case Gen::E: return 2;
    }
    return 0;
  };
  const Scalar qq = Scalar::q_pow(2);
  const Scalar qm = Scalar::q_pow(-2);
  const Scalar casimir_den = Scalar::q() - Scalar::q_pow(-1);

  PBWElement out;
  std::deque<WordTerm> work(input.begin(), input.end());
  while (!work.empty()) {
    WordTerm t = std::move(work.front());
    work.pop_front();
    if (t.coeff.is_zero()) continue;

    size_t pos = t.word.size();
    for (size_t i = 0; i + 1 < t.word.size(); ++i) {
      Gen a = t.word[i], b = t.word[i + 1];
      bool cancel = (a == Gen::K && b == Gen::Kinv) || (a == Gen::Kinv && b == Gen::K);
      if (cancel || rank(a) > rank(b)) {
        pos = i;
        break;
      }
    }
    if (pos == t.word.size()) {  // sorted: collapse into a basis key
      PBWKey k;
      for (Gen g : t.word) {
        if (g == Gen::F) k.f++;
        if (g == Gen::K) k.k++;
        if (g == Gen::Kinv) k.k--;
        if (g == Gen::E) k.e++;
      }
      out.add_term(k, t.coeff);
      continue;
    }

    Gen a = t.word[pos], b = t.word[pos + 1];
    auto with_pair = [&](Scalar c, std::vector<Gen> repl) {
      WordTerm nt;
      nt.coeff = std::move(c);
      nt.word.assign(t.word.begin(), t.word.begin() + static_cast<long>(pos));
      nt.word.insert(nt.word.end(), repl.begin(), repl.end());
      nt.word.insert(nt.word.end(), t.word.begin() + static_cast<long>(pos) + 2, t.word.end());
      work.push_back(std::move(nt));
    };

    if ((a == Gen::K && b == Gen::Kinv) || (a == Gen::Kinv && b == Gen::K)) {
      with_pair(t.coeff, {});
    } else if (a == Gen::E && b == Gen::K) {
      with_pair(t.coeff * qm, {Gen::K, Gen::E});
    } else if (a == Gen::E && b == Gen::Kinv) {
      with_pair(t.coeff * qq, {Gen::Kinv, Gen::E});
    } else if (a == Gen::K && b == Gen::F) {
      with_pair(t.coeff * qm, {Gen::F, Gen::K});
    } else if (a == Gen::Kinv && b == Gen::F) {
      with_pair(t.coeff * qq, {Gen::F, Gen::Kinv});
    } else {  // e f -> f e + (k - kinv)/(q - q^-1)
      with_pair(t.coeff, {Gen::F, Gen::E});
      with_pair(t.coeff / casimir_den, {Gen::K});
      with_pair(-(t.coeff / casimir_den), {Gen::Kinv});
    }
  }
  return out;
}

inline PBWElement pbw_normalize(const Word& w, const Scalar& coeff = Scalar::one()) {
  return pbw_normalize(std::vector<WordTerm>{{coeff, w}});
}

inline PBWElement pbw_mul(const PBWElement& a, const PBWElement& b) {
  std::vector<WordTerm> terms;
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms()) {
      Word w = PBWElement::key_word(ka);
      Word wb = PBWElement::key_word(kb);
      w.insert(w.end(), wb.begin(), wb.end());
      terms.push_back({ca * cb, std::move(w)});
    }
  return pbw_normalize(terms);
}

inline PBWElement pbw_pow(const PBWElement& a, long long n) {
  PBWElement r = PBWElement::one();
  for (long long i = 0; i < n; ++i) r = pbw_mul(r, a);
  return r;
}

// ---------------------------------------------------------------------------
// Hopf structure data on the generators:
//   D(k) = k (x) k,  D(e) = 1 (x) e + e (x) k,  D(f) = f (x) 1 + kinv (x) f,
//   S(k) = kinv,     S(e) = -e kinv,            S(f) = -k f,
//   eps(k) = eps(kinv) = 1, eps(e) = eps(f) = 0.
// ---------------------------------------------------------------------------

/// Element of U (x) U with both tensor factors in PBW form.
class TensorElement {
 public:
  using Key = std::pair<PBWKey, PBWKey>;

  TensorElement() = default;
  static TensorElement one() {
    TensorElement t;
    t.add_term({{0, 0, 0}, {0, 0, 0}}, Scalar::one());
    return t;
  }

  const std::map<Key, Scalar>& terms() const { return terms_; }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Key, Scalar> terms_;
};

/// Coproduct table on a single generator, as (coeff, left word, right word).
inline std::vector<std::tuple<Scalar, Word, Word>> coproduct_table(Gen g) {
  switch (g) {
    case Gen::K: return {{Scalar::one(), {Gen::K}, {Gen::K}}};
    case Gen::Kinv: return {{Scalar::one(), {Gen::Kinv}, {Gen::Kinv}}};
    case Gen::E:
      return {{Scalar::one(), {}, {Gen::E}}, {Scalar::one(), {Gen::E}, {Gen::K}}};
    case Gen::F:
      return {{Scalar::one(), {Gen::F}, {}}, {Scalar::one(), {Gen::Kinv}, {Gen::F}}};
  }
  return {};
}

/// Multiplicative extension of the coproduct to a word, each tensor factor
/// PBW-normalized.
inline TensorElement coproduct(const Word& w, const Scalar& coeff = Scalar::one()) {
  // pairs of word factors, multiplied out left to right
  std::vector<std::tuple<Scalar, Word, Word>> acc = {{coeff, {}, {}}};
  for (Gen g : w) {
    std::vector<std::tuple<Scalar, Word, Word>> next;
    for (auto& [c, lw, rw] : acc)
      for (auto& [cg, lg, rg] : coproduct_table(g)) {
        Word l = lw, r = rw;
        l.insert(l.end(), lg.begin(), lg.end());
        r.insert(r.end(), rg.begin(), rg.end());
        next.push_back({c * cg, std::move(l), std::move(r)});
      }
    acc = std::move(next);
  }
  TensorElement out;
  for (auto& [c, lw, rw] : acc) {
    PBWElement l = pbw_normalize(lw);
    PBWElement r = pbw_normalize(rw);
    for (auto& [kl, cl] : l.terms())
      for (auto& [kr, cr] : r.terms()) out.add_term({kl, kr}, c * cl * cr);
  }
  return out;
}

inline TensorElement coproduct(const PBWElement& u) {
  TensorElement out;
  for (auto& [k, c] : u.terms()) {
    TensorElement t = coproduct(PBWElement::key_word(k), c);
    for (auto& [kk, cc] : t.terms()) out.add_term(kk, cc);
  }
  return out;
}

/// Counit: multiplicative with eps(k) = eps(kinv) = 1, eps(e) = eps(f) = 0.
inline Scalar counit(const Word& w, const Scalar& coeff = Scalar::one()) {
  for (Gen g : w)
    if (g == Gen::E || g == Gen::F) return Scalar();
  return coeff;
}

inline Scalar counit(const PBWElement& u) {
  Scalar acc;
  for (auto& [k, c] : u.terms())
    if (k.f == 0 && k.e == 0) acc += c;
  return acc;
}

/// Antipode on generators, PBW-normalized. S(e) = -e kinv rewrites to
/// -q^2 kinv e; S(f) = -k f rewrites to -q^-2 f k.
inline PBWElement antipode(Gen g) {
  switch (g) {
    case Gen::K: return PBWElement::generator(Gen::Kinv);
    case Gen::Kinv: return PBWElement::generator(Gen::K);
    case Gen::E: return pbw_normalize({Gen::E, Gen::Kinv}, Scalar::of_int(-1));
    case Gen::F: return pbw_normalize({Gen::K, Gen::F}, Scalar::of_int(-1));
  }
  return PBWElement::zero();
}

/// Antihomomorphic extension to words: S(g1...gn) = S(gn)...S(g1).
inline PBWElement antipode(const Word& w, const Scalar& coeff = Scalar::one()) {
  PBWElement acc = PBWElement::one().scaled(coeff);
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = pbw_mul(acc, antipode(*it));
  return acc;
}

inline PBWElement antipode(const PBWElement& u) {
  PBWElement out;
  for (auto& [k, c] : u.terms()) out += antipode(PBWElement::key_word(k), c);
  return out;
}

/// Word grammar "k e kinv f", generators separated by whitespace, each
/// optionally carrying a positive power suffix like "e^2".
inline Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::string name = tok;
    long long power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        power = std::stoll(tok.substr(caret + 1));
      } catch (...) {
        fail(Errc::ParseError, "bad power in word token '" + tok + "'");
      }
      if (power < 0) fail(Errc::ParseError, "negative powers: use kinv instead");
    }
    Gen g;
    if (name == "k") g = Gen::K;
    else if (name == "kinv" || name == "k_inv") g = Gen::Kinv;
    else if (name == "e") g = Gen::E;
    else if (name == "f") g = Gen::F;
    else fail(Errc::ParseError, "unknown generator '" + name + "'");
    for (long long i = 0; i < power; ++i) w.push_back(g);
  }
  return w;
}

}  // namespace qplane
