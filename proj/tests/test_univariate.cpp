#include <doctest.h>

#include "test_support.hpp"
#include "tjurina/univariate.hpp"

using namespace tjurina;
using tjurina::testing::parse_q;

TEST_CASE("squarefree part over Q") {
  Polynomial p = parse_q("(x-1)^2*(x+2)");
  CHECK(squarefree_part(p, 0) == parse_q("(x-1)*(x+2)").monic(canonical_order()));
}

TEST_CASE("squarefree part survives p-th powers in characteristic p") {
  FieldSpec f3 = FieldSpec::prime(3);
  Polynomial p = parse_polynomial("x^3 - 1", f3);  // (x-1)^3 over F_3
  Polynomial s = squarefree_part(p, 0);
  CHECK(s == parse_polynomial("x - 1", f3).monic(canonical_order()));
}

TEST_CASE("rational factorization: linear and quadratic pieces") {
  Rng rng(5);
  Polynomial p = parse_q("(x^2-2)*(x-3)");
  auto factors = factor_univariate_squarefree(p, 0, rng);
  REQUIRE(factors.size() == 2);
  Polynomial prod = factors[0] * factors[1];
  CHECK(prod == p.monic(canonical_order()));
  bool saw_quadratic = false;
  for (const Polynomial& g : factors) {
    if (g.degree() == 2) {
      saw_quadratic = true;
      CHECK(g == parse_q("x^2-2"));
    }
  }
  CHECK(saw_quadratic);
}

TEST_CASE("rational factorization: irreducible survivor") {
  // x^4 + 1 factors modulo every prime but is irreducible over Q, so the
  // recombination step is genuinely exercised
  Rng rng(6);
  Polynomial p = parse_q("x^4 + 1");
  auto factors = factor_univariate_squarefree(p, 0, rng);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0] == p);
}

TEST_CASE("rational factorization: three known factors, non-monic input") {
  Rng rng(7);
  Polynomial p = parse_q("3*(x^2+1)*(x^2-2)*(x+5)");
  auto factors = factor_univariate_squarefree(p, 0, rng);
  REQUIRE(factors.size() == 3);
  Polynomial prod = Polynomial::constant(FieldSpec::rationals(), Coeff(1));
  for (const Polynomial& g : factors) prod = prod * g;
  CHECK(prod == p.monic(canonical_order()));
}

TEST_CASE("prime field factorization multiplies back and passes the irreducibility test") {
  FieldSpec f = FieldSpec::prime(32003);
  Rng rng(9);
  for (const char* txt : {"x^2 - 2", "(x-7)*(x-9)*(x^2+x+1)", "x^6 + x + 3"}) {
    Polynomial p = parse_polynomial(txt, f);
    Polynomial sq = squarefree_part(p, 0);
    auto factors = factor_univariate_squarefree(sq, 0, rng);
    Polynomial prod = Polynomial::constant(f, f.one());
    for (const Polynomial& g : factors) {
      CHECK(univariate_irreducible_fp(g, 0));
      prod = prod * g;
    }
    CHECK(prod == sq.monic(canonical_order()));
  }
}

TEST_CASE("roots over a prime field") {
  FieldSpec f = FieldSpec::prime(101);
  Rng rng(11);
  Polynomial p = parse_polynomial("(x-3)*(x-5)*(x^2+1)", f);
  auto roots = univariate_roots_fp(p, 0, rng);
  // x^2+1 has roots over F_101 (101 = 1 mod 4): 10^2 = 100 = -1
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == 3);
  CHECK(roots[1] == 5);
  CHECK(roots[2] == 10);
  CHECK(roots[3] == 91);
}

TEST_CASE("Rabin irreducibility test") {
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(univariate_irreducible_fp(parse_polynomial("x^2 + 1", f3), 0));
  CHECK(!univariate_irreducible_fp(parse_polynomial("x^2 - 1", f3), 0));
  FieldSpec f = FieldSpec::prime(32003);
  CHECK(!univariate_irreducible_fp(parse_polynomial("(x^2+x+1)*(x^3+x+1)", f), 0));
}
