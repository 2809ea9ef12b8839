#include <doctest.h>

#include "errors.hpp"
#include "exact.hpp"
#include "rational.hpp"

using namespace specgeo;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 5)) == Rational(1, 5));
  CHECK((Rational(7, 3) - Rational(1, 3)) == Rational(2));
  CHECK((Rational(1, 2) / Rational(3, 4)) == Rational(2, 3));
  CHECK(Rational(3, 2).value() == 1.5);
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(-5, 10).str() == "-1/2");
  CHECK_THROWS_AS((void)Rational(1, 0), Error);
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), Error);
}

TEST_CASE("rational sqrt") {
  CHECK(*Rational(4).sqrt() == Rational(2));
  CHECK(*Rational(9, 16).sqrt() == Rational(3, 4));
  CHECK_FALSE(Rational(2).sqrt());
  CHECK_FALSE(Rational(4, 3).sqrt());
  CHECK_FALSE(Rational(-4).sqrt());
}

TEST_CASE("rational parse") {
  CHECK(*Rational::parse("3") == Rational(3));
  CHECK(*Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(*Rational::parse("0.125") == Rational(1, 8));
  CHECK(*Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(*Rational::parse(".25") == Rational(1, 4));
  CHECK_FALSE(Rational::parse("1e-3"));
  CHECK_FALSE(Rational::parse("abc"));
  CHECK_FALSE(Rational::parse("1/0"));
}

TEST_CASE("rational overflow raises exact_unavailable") {
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS((void)(big * big), Error);
  try {
    (void)(big * big);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::exact_unavailable);
  }
}

TEST_CASE("exact heat invariants of the round metric") {
  const exact::RationalTriple mu{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(exact::covering_volume_pi2(mu) == Rational(16));
  const auto h = exact::heat_invariants_pi2(mu, GroupOrder{1});
  CHECK(h[0] == Rational(16));
  CHECK(h[1] == Rational(4));
  CHECK(h[2] == Rational(1, 2));
  CHECK(h[3] == Rational(1, 24));
}

TEST_CASE("exact heat invariants of the degenerate metric at order 2") {
  const exact::RationalTriple mu{Rational(0), Rational(1), Rational(2)};
  CHECK(exact::covering_volume_pi2(mu) == Rational(8, 3));
  const auto h = exact::heat_invariants_pi2(mu, GroupOrder{2});
  CHECK(h[0] == Rational(4, 3));
  CHECK(h[1] == Rational(8, 9));
  CHECK(h[2] == Rational(8, 15));
  CHECK(h[3] == Rational(-64, 945));
}

TEST_CASE("exact christoffel from eigenvalues") {
  const auto berger = exact::christoffel_from_eigenvalues(
      {Rational(1), Rational(1), Rational(4)});
  REQUIRE(berger);
  CHECK((*berger)[0] == Rational(1));          // entries in input order
  CHECK((*berger)[1] == Rational(1));
  CHECK((*berger)[2] == Rational(-1, 2));

  const auto third = exact::christoffel_from_eigenvalues(
      {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  REQUIRE(third);
  CHECK((*third)[0] == Rational(0));
  CHECK((*third)[1] == Rational(1));
  CHECK((*third)[2] == Rational(2));

  // sqrt(8) is irrational
  CHECK_FALSE(exact::christoffel_from_eigenvalues({Rational(2), Rational(2), Rational(2)}));

  // invalid multiset still raises
  CHECK_THROWS_AS(
      (void)exact::christoffel_from_eigenvalues({Rational(100), Rational(1), Rational(1)}),
      Error);
}
