#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"

using namespace qplane;
using qptest::make_rng;

namespace {
Scalar casimir_coeff() { return (Scalar::q() - Scalar::q_pow(-1)).inv(); }
}  // namespace

TEST_CASE("normal form of the defining relations") {
  CHECK(pbw_normalize(Word{Gen::K, Gen::Kinv}) == PBWElement::one());
  CHECK(pbw_normalize(Word{Gen::Kinv, Gen::K}) == PBWElement::one());

  SECTION("e f = f e + (k - kinv)/(q - q^-1)") {
    PBWElement want = PBWElement::term(Scalar::one(), {1, 0, 1});
    want.add_term({0, 1, 0}, casimir_coeff());
    want.add_term({0, -1, 0}, -casimir_coeff());
    CHECK(pbw_normalize(Word{Gen::E, Gen::F}) == want);
  }

  SECTION("k e and e k land on the same basis triple") {
    CHECK(pbw_normalize(Word{Gen::K, Gen::E}) == PBWElement::term(Scalar::one(), {0, 1, 1}));
    CHECK(pbw_normalize(Word{Gen::E, Gen::K}) == PBWElement::term(Scalar::q_pow(-2), {0, 1, 1}));
    CHECK(pbw_normalize(Word{Gen::K, Gen::F}) == PBWElement::term(Scalar::q_pow(-2), {1, 1, 0}));
  }

  SECTION("words with scalar prefactors are linear") {
    std::vector<WordTerm> sum = {{Scalar::q(), {Gen::E, Gen::K}},
                                 {-Scalar::q_pow(-1), {Gen::K, Gen::E}}};
    PBWElement got = pbw_normalize(sum);
    CHECK(got == PBWElement::term(Scalar::q_pow(-1) - Scalar::q_pow(-1), {0, 1, 1}));
    CHECK(got.is_zero());
  }
}

TEST_CASE("confluence spot-check on random words") {
  auto rng = make_rng(101);
  for (int it = 0; it < 40; ++it) {
    Word w = qptest::random_word(rng, 6);
    PBWElement whole = pbw_normalize(w);
    // re-associate: normalize both halves, then multiply in the algebra
    size_t cut = w.empty() ? 0 : static_cast<size_t>(qptest::pick(rng, 0, (long long)w.size()));
    Word left(w.begin(), w.begin() + static_cast<long>(cut));
    Word right(w.begin() + static_cast<long>(cut), w.end());
    CHECK(pbw_mul(pbw_normalize(left), pbw_normalize(right)) == whole);
  }
}

TEST_CASE("multiplication is associative on normal forms") {
  auto rng = make_rng(103);
  for (int it = 0; it < 10; ++it) {
    PBWElement a = pbw_normalize(qptest::random_word(rng, 4));
    PBWElement b = pbw_normalize(qptest::random_word(rng, 4));
    PBWElement c = pbw_normalize(qptest::random_word(rng, 4));
    CHECK(pbw_mul(pbw_mul(a, b), c) == pbw_mul(a, pbw_mul(b, c)));
  }
}

TEST_CASE("coproduct") {
  SECTION("generator table") {
    TensorElement dk = coproduct(Word{Gen::K});
    TensorElement want_k;
    want_k.add_term({{0, 1, 0}, {0, 1, 0}}, Scalar::one());
    CHECK(dk == want_k);

    TensorElement df = coproduct(Word{Gen::F});
    TensorElement want_f;
    want_f.add_term({{1, 0, 0}, {0, 0, 0}}, Scalar::one());
    want_f.add_term({{0, -1, 0}, {1, 0, 0}}, Scalar::one());
    CHECK(df == want_f);
  }

  SECTION("multiplicative extension: Delta(e k)") {
    TensorElement got = coproduct(Word{Gen::E, Gen::K});
    TensorElement want;
    want.add_term({{0, 1, 0}, {0, 1, 1}}, Scalar::q_pow(-2));
    want.add_term({{0, 1, 1}, {0, 2, 0}}, Scalar::q_pow(-2));
    CHECK(got == want);
  }
}

TEST_CASE("counit") {
  CHECK(counit(pbw_normalize(Word{Gen::K, Gen::E})).is_zero());
  CHECK(counit(pbw_normalize(Word{Gen::K, Gen::Kinv, Gen::K})) == Scalar::one());
  CHECK(counit(Word{Gen::F}).is_zero());
}

TEST_CASE("antipode table") {
  CHECK(antipode(Gen::K) == PBWElement::generator(Gen::Kinv));
  // S(e) = -e kinv normalizes through e kinv -> q^2 kinv e
  CHECK(antipode(Gen::E) == PBWElement::term(-Scalar::q_pow(2), {0, -1, 1}));
  // S(f) = -k f normalizes through k f -> q^-2 f k
  CHECK(antipode(Gen::F) == PBWElement::term(-Scalar::q_pow(-2), {1, 1, 0}));
}

TEST_CASE("Hopf axioms on generators") {
  for (Gen g : {Gen::K, Gen::Kinv, Gen::E, Gen::F}) {
    TensorElement d = coproduct(Word{g});

    PBWElement eps_id, id_eps, m_S_id;
    for (auto& [keys, c] : d.terms()) {
      PBWElement l = PBWElement::term(Scalar::one(), keys.first);
      PBWElement r = PBWElement::term(Scalar::one(), keys.second);
      eps_id += r.scaled(c * counit(l));
      id_eps += l.scaled(c * counit(r));
      m_S_id += pbw_mul(antipode(l), r).scaled(c);
    }
    CHECK(eps_id == PBWElement::generator(g));
    CHECK(id_eps == PBWElement::generator(g));
    CHECK(m_S_id == PBWElement::one().scaled(counit(PBWElement::generator(g))));
  }
}

TEST_CASE("word grammar and JSON") {
  Word w = parse_word("k e kinv f");
  CHECK(w == Word{Gen::K, Gen::E, Gen::Kinv, Gen::F});
  CHECK(parse_word("e^2 k") == Word{Gen::E, Gen::E, Gen::K});
  CHECK_THROWS_AS(parse_word("k x"), Error);

  auto rng = make_rng(107);
  for (int it = 0; it < 10; ++it) {
    PBWElement u = pbw_normalize(qptest::random_word(rng, 5));
    CHECK(pbw_from_json(to_json(u)) == u);
  }
}
