#include <doctest.h>

#include "test_support.hpp"
#include "tjurina/ideal.hpp"
#include "tjurina/polynomial.hpp"

using namespace tjurina;
using tjurina::testing::parse_q;
using tjurina::testing::random_homogeneous;
using tjurina::testing::random_poly;

TEST_CASE("parse: sparse terms read off directly") {
  Polynomial p = parse_q("x^3 - y^2*z");
  CHECK(p.term_count() == 2);
  Monomial x3;
  x3.e[0] = 3;
  Monomial y2z;
  y2z.e[1] = 2;
  y2z.e[2] = 1;
  CHECK(p.coefficient(x3) == 1);
  CHECK(p.coefficient(y2z) == -1);
}

TEST_CASE("parse: cancellation produces the zero polynomial") {
  CHECK(parse_q("x - x").is_zero());
  CHECK(parse_q("x - x").degree() == -1);  // degree convention for 0
}

TEST_CASE("parse: rational coefficients combine") {
  Polynomial p = parse_q("1/2*x*y + 1/2*x*y");
  CHECK(p.term_count() == 1);
  Monomial xy;
  xy.e[0] = 1;
  xy.e[1] = 1;
  CHECK(p.coefficient(xy) == 1);
}

TEST_CASE("parse: errors carry a position") {
  CHECK_THROWS_WITH_AS(parse_q("x + "), doctest::Contains("position"), Error);
  CHECK_THROWS_AS(parse_q("x y"), Error);          // implicit multiplication
  CHECK_THROWS_AS(parse_q("w + 1"), Error);        // unknown variable
}

TEST_CASE("parse: coefficient not representable in a prime field") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(parse_polynomial("1/5*x", f5), Error);
  CHECK(parse_polynomial("1/2*x", f5).coefficient(Monomial::var(0)) == 3);  // 2*3 = 1 mod 5
}

TEST_CASE("differentiate: basic rules") {
  CHECK(parse_q("x^3").differentiate(0) == parse_q("3*x^2"));
  CHECK(parse_q("x^3*y - x*y^3").differentiate(2).is_zero());
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(parse_polynomial("x^3", f3).differentiate(0).is_zero());
}

TEST_CASE("homogenize and dehomogenize") {
  CHECK(parse_q("y^2 - x^3").homogenize(2, 3) == parse_q("y^2*z - x^3"));
  CHECK(parse_q("y^2*z - x^3").dehomogenize(2) == parse_q("y^2 - x^3"));
  CHECK(parse_q("x").homogenize(2, 3) == parse_q("x*z^2"));
  CHECK_THROWS_AS(parse_q("x^3").homogenize(2, 2), Error);
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    Polynomial p = random_poly(FieldSpec::rationals(), rng, 4, 2);
    if (p.is_zero()) continue;
    CHECK(p.homogenize(2, p.degree()).dehomogenize(2) == p);
  }
}

TEST_CASE("gcd: examples") {
  CHECK(gcd(parse_q("x^2 - y^2"), parse_q("x - y")) == parse_q("x - y"));
  CHECK(gcd(parse_q("x*y"), parse_q("z")) == parse_q("1"));
  Polynomial f = parse_q("x*y*z");
  Polynomial g = gcd(gcd(f, f.differentiate(0)), gcd(f.differentiate(1), f.differentiate(2)));
  CHECK(g == parse_q("1"));
  CHECK(gcd(parse_q("x^2 - y^2"), Polynomial::zero(FieldSpec::rationals())) ==
        parse_q("x^2 - y^2").monic(canonical_order()));
}

TEST_CASE("squarefree gcd agrees with the Macaulay view of the Jacobian ideal") {
  // gcd(F, F_x, F_y, F_z) = 1 says the Jacobian ideal has no curve component;
  // the independent cross-check: its Macaulay count stabilizes (finite scheme)
  Polynomial f = parse_q("x*y*z");
  Ideal jac(FieldSpec::rationals(), 3,
            {f.differentiate(0), f.differentiate(1), f.differentiate(2)});
  CHECK(oracle_colength(jac, 6) == 3);  // the three coordinate vertices
}

TEST_CASE("gcd divides both arguments and leaves coprime cofactors") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    Polynomial a = random_poly(FieldSpec::rationals(), rng, 3, 3);
    Polynomial b = random_poly(FieldSpec::rationals(), rng, 3, 3);
    Polynomial m = random_poly(FieldSpec::rationals(), rng, 2, 3);
    if (a.is_zero() || b.is_zero() || m.is_zero()) continue;
    Polynomial g = gcd(a * m, b * m);
    auto qa = try_divide(a * m, g);
    auto qb = try_divide(b * m, g);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    CHECK(gcd(*qa, *qb).is_constant());
    CHECK(try_divide(g, gcd(g, m)).has_value());  // the shared factor went in
  }
}

TEST_CASE("ring axioms on random triples, both fields") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      Polynomial p = random_poly(f, rng, 3, 3);
      Polynomial q = random_poly(f, rng, 3, 3);
      Polynomial r = random_poly(f, rng, 3, 3);
      CHECK((p + q) * r == p * r + q * r);
      CHECK(p * q == q * p);
      CHECK((p - p).is_zero());
    }
  }
}

TEST_CASE("derivation rule on random pairs") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
      Polynomial p = random_poly(f, rng, 3, 3);
      Polynomial q = random_poly(f, rng, 3, 3);
      for (int v = 0; v < 3; ++v)
        CHECK((p * q).differentiate(v) ==
              p.differentiate(v) * q + p * q.differentiate(v));
    }
  }
}

TEST_CASE("Euler relation for homogeneous polynomials") {
  Rng rng(17);
  FieldSpec f = FieldSpec::rationals();
  for (int k = 1; k <= 6; ++k) {
    Polynomial p = random_homogeneous(f, rng, k, 3);
    if (p.is_zero()) continue;
    Polynomial lhs = Polynomial::variable(f, 0) * p.differentiate(0) +
                     Polynomial::variable(f, 1) * p.differentiate(1) +
                     Polynomial::variable(f, 2) * p.differentiate(2);
    CHECK(lhs == p.scaled(Coeff(k)));
  }
}

TEST_CASE("print/parse round trip is stable") {
  Rng rng(23);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    for (int i = 0; i < 50; ++i) {
      Polynomial p = random_poly(f, rng, 5, 3);
      CHECK(parse_polynomial(p.to_string(), f) == p);
    }
  }
  for (const char* s : {"x^3*y - x*y^3", "x*z - y^2", "x^5 + y^5 + x^2*y^2*z"}) {
    Polynomial p = parse_q(s);
    CHECK(parse_polynomial(p.to_string(), FieldSpec::rationals()) == p);
  }
}

TEST_CASE("exact division") {
  Polynomial a = parse_q("x^2 - y^2"), b = parse_q("x + y");
  auto q = try_divide(a, b);
  REQUIRE(q.has_value());
  CHECK(*q == parse_q("x - y"));
  CHECK(!try_divide(parse_q("x^2 + y^2"), b).has_value());
}
