#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"

using namespace qplane;
using qptest::make_rng;

TEST_CASE("normal-ordered multiplication") {
  PlaneElement X = PlaneElement::x(), Y = PlaneElement::y();

  CHECK(Y * X == (X * Y).scaled(Scalar::q()));
  CHECK(X * PlaneElement::x(-1) == PlaneElement::one());
  CHECK(PlaneElement::x(-1) * X == PlaneElement::one());
  CHECK(Y * PlaneElement::y(-1) == PlaneElement::one());

  PlaneElement xy = X * Y;
  CHECK(xy * xy == PlaneElement::term(Scalar::q(), 2, 2));

  SECTION("monomial product rule on random exponents") {
    auto rng = make_rng(5);
    for (int it = 0; it < 30; ++it) {
      long long i = qptest::pick(rng, -4, 4), j = qptest::pick(rng, -4, 4);
      long long k = qptest::pick(rng, -4, 4), l = qptest::pick(rng, -4, 4);
      PlaneElement lhs = PlaneElement::term(Scalar::one(), i, j) *
                         PlaneElement::term(Scalar::one(), k, l);
      CHECK(lhs == PlaneElement::term(Scalar::q_pow(j * k), i + k, j + l));
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  auto rng = make_rng(17);
  for (int it = 0; it < 20; ++it) {
    PlaneElement a = qptest::random_plane(rng);
    PlaneElement b = qptest::random_plane(rng);
    PlaneElement c = qptest::random_plane(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("no zero divisors on sampled nonzero pairs") {
  auto rng = make_rng(23);
  for (int it = 0; it < 20; ++it) {
    PlaneElement a = qptest::random_nonzero_plane(rng);
    PlaneElement b = qptest::random_nonzero_plane(rng);
    CHECK(!(a * b).is_zero());
  }
}

TEST_CASE("monomial powers") {
  PlaneElement xy = PlaneElement::x() * PlaneElement::y();

  CHECK(xy.monomial_pow(3) == PlaneElement::term(Scalar::q_pow(3), 3, 3));
  CHECK(PlaneElement::term(Scalar::one(), 2, 1).monomial_pow(0) == PlaneElement::one());

  SECTION("negative powers solve m * m^-1 = 1 (the mul oracle)") {
    PlaneElement inv = xy.monomial_pow(-1);
    CHECK(xy * inv == PlaneElement::one());
    CHECK(inv * xy == PlaneElement::one());
    // the reordering constant q^{i(i-1)/2 rs} at i = -1, r = s = 1 is q^{+1}
    CHECK(inv == PlaneElement::term(Scalar::q(), -1, -1));
  }

  SECTION("agrees with repeated multiplication") {
    auto rng = make_rng(41);
    for (int it = 0; it < 12; ++it) {
      PlaneElement m = PlaneElement::term(qptest::random_unit(rng).to_scalar(),
                                          qptest::pick(rng, -3, 3), qptest::pick(rng, -3, 3));
      PlaneElement acc = PlaneElement::one();
      for (int p = 0; p <= 5; ++p) {
        CHECK(m.monomial_pow(p) == acc);
        acc = acc * m;
      }
      CHECK(m.monomial_pow(-3) * m.monomial_pow(3) == PlaneElement::one());
    }
  }

  SECTION("power additivity") {
    auto rng = make_rng(43);
    PlaneElement m = PlaneElement::term(qptest::random_unit(rng).to_scalar(), 2, -1);
    for (long long i = -5; i <= 5; ++i)
      for (long long j = -5; j <= 5; ++j)
        CHECK(m.monomial_pow(i + j) == m.monomial_pow(i) * m.monomial_pow(j));
  }

  SECTION("errors") {
    PlaneElement sum = PlaneElement::x() + PlaneElement::y();
    CHECK_THROWS_MATCHES(sum.monomial_pow(2), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotAMonomial; }));
    CHECK_THROWS_MATCHES(sum.invert(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Errc::NotAUnit;
                         }));
  }

  SECTION("any nonzero-scalar monomial is a unit") {
    PlaneElement m = PlaneElement::term(Scalar::parse("q + 1"), 1, 0);
    CHECK(m * m.invert() == PlaneElement::one());
  }
}

TEST_CASE("invert") {
  CHECK(PlaneElement::term(Scalar::q(), 1, 0).invert() ==
        PlaneElement::term(Scalar::q_pow(-1), -1, 0));
  CHECK(PlaneElement::term(Scalar::one(), 2, -1).invert() ==
        PlaneElement::term(Scalar::q_pow(-2), -2, 1));
  auto rng = make_rng(47);
  for (int it = 0; it < 10; ++it) {
    PlaneElement m = PlaneElement::term(qptest::random_unit(rng).to_scalar(),
                                        qptest::pick(rng, -3, 3), qptest::pick(rng, -3, 3));
    CHECK(m * m.invert() == PlaneElement::one());
  }
}

TEST_CASE("line elements commute") {
  auto rng = make_rng(53);
  for (int it = 0; it < 15; ++it) {
    LineElement a = qptest::random_line(rng);
    LineElement b = qptest::random_line(rng);
    CHECK(a * b == b * a);
  }
  CHECK(LineElement::z() * LineElement::z(-1) == LineElement::one());
}

TEST_CASE("textual and JSON forms round-trip") {
  auto rng = make_rng(61);
  for (int it = 0; it < 15; ++it) {
    PlaneElement p = qptest::random_plane(rng);
    CHECK(PlaneElement::parse(p.str()) == p);
    CHECK(plane_from_json(to_json(p)) == p);
    LineElement l = qptest::random_line(rng);
    CHECK(LineElement::parse(l.str()) == l);
    CHECK(line_from_json(to_json(l)) == l);
  }
  CHECK(PlaneElement::parse("y x - q x y").is_zero());
  CHECK(PlaneElement::parse("(q^2 + 1) * x^2 y^-1") ==
        PlaneElement::term(Scalar::parse("q^2+1"), 2, -1));
}
