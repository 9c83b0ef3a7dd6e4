#include <doctest.h>

#include "test_support.hpp"
#include "tjurina/ideal.hpp"

using namespace tjurina;
using tjurina::testing::parse_q;
using tjurina::testing::random_poly;

namespace {

Ideal ideal_q(int nvars, std::initializer_list<const char*> gens, bool saturated = false) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_q(g));
  return Ideal(FieldSpec::rationals(), nvars, ps, saturated);
}

const TermOrder& grv() {
  static TermOrder o = TermOrder::grevlex(kMaxVars);
  return o;
}

}  // namespace

TEST_CASE("groebner: already-reduced input is returned as is") {
  Ideal i = ideal_q(2, {"x", "y"});
  const GroebnerBasis& gb = i.groebner(grv());
  REQUIRE(gb.polys.size() == 2);
  CHECK(gb.polys[0] == parse_q("x"));
  CHECK(gb.polys[1] == parse_q("y"));
}

TEST_CASE("groebner: lex elimination discovers y^3 - 1") {
  std::array<uint8_t, kMaxVars> perm = {0, 1, 2, 3};  // x > y
  TermOrder lex = TermOrder::lex(perm, 2);
  Ideal i = ideal_q(2, {"x^2 - y", "x*y - 1"});
  const GroebnerBasis& gb = i.groebner(lex);
  bool found = false;
  for (const Polynomial& g : gb.polys)
    if (g == parse_q("y^3 - 1")) found = true;
  CHECK(found);
}

TEST_CASE("groebner: principal ideal normalizes monic") {
  Ideal i = ideal_q(3, {"2*x^3*y - 4*x*y^3"});
  const GroebnerBasis& gb = i.groebner(grv());
  REQUIRE(gb.polys.size() == 1);
  CHECK(gb.polys[0] == parse_q("x^3*y - 2*x*y^3").monic(grv()));
  CHECK(gb.polys[0].leading_term(grv()).coeff == 1);
}

TEST_CASE("groebner: diagnostic dump is deterministic text") {
  Ideal i = ideal_q(2, {"x^2 - y", "x*y - 1"});
  const GroebnerBasis& gb = i.groebner(grv());
  CHECK(diagnostic_dump(gb) == "g0 = x^2 - y\ng1 = x*y - 1\ng2 = y^2 - x\n");
}

TEST_CASE("normal form: Euler membership of F in its Jacobian ideal") {
  Polynomial f = parse_q("y^2*z - x^2*(x+z)");  // nodal cubic
  Ideal jac(FieldSpec::rationals(), 3,
            {f.differentiate(0), f.differentiate(1), f.differentiate(2)});
  CHECK(jac.normal_form(f, grv()).is_zero());
}

TEST_CASE("normal form: examples") {
  Ideal i = ideal_q(2, {"y"});
  CHECK(i.normal_form(parse_q("x"), grv()) == parse_q("x"));
  Polynomial f = parse_q("x^3");
  Ideal j(FieldSpec::rationals(), 2, {f});
  CHECK(j.normal_form(parse_q("x^2*y - y^3") + f * parse_q("x"), grv()) ==
        parse_q("x^2*y - y^3"));
}

TEST_CASE("ideal quotient and saturation on monomial ideals") {
  Ideal i = ideal_q(2, {"x^2", "x*y"});
  Ideal qx = ideal_quotient(i, ideal_q(2, {"x"}));
  CHECK(ideal_equal(qx, ideal_q(2, {"x", "y"})));

  // x^2 already lies in the ideal, so saturating by x reaches the whole ring
  Ideal sx = saturate(i, ideal_q(2, {"x"}));
  CHECK(ideal_equal(sx, ideal_q(2, {"1"})));

  // saturating by y strips the embedded origin component
  Ideal sy = saturate(i, ideal_q(2, {"y"}));
  CHECK(ideal_equal(sy, ideal_q(2, {"x"})));
}

TEST_CASE("saturation of the cone Jacobian ideal is trivial and keeps colength 9") {
  Polynomial f = parse_q("x^3*y - x*y^3");
  Ideal jac(FieldSpec::rationals(), 3,
            {f.differentiate(0), f.differentiate(1), f.differentiate(2)});
  Ideal sat = saturate(jac, irrelevant_ideal(FieldSpec::rationals()));
  CHECK(ideal_equal(sat, jac));
  CHECK(sat.saturated());
  auto len = colength(sat);
  REQUIRE(len.has_value());
  CHECK(*len == 9);
}

TEST_CASE("saturation idempotence and quotient containment") {
  Rng rng(31);
  FieldSpec f = FieldSpec::rationals();
  int done = 0;
  for (int trial = 0; trial < 40 && done < 12; ++trial) {
    Polynomial a = random_poly(f, rng, 3, 2);
    Polynomial b = random_poly(f, rng, 3, 2);
    Polynomial j = random_poly(f, rng, 2, 2);
    if (a.is_zero() || b.is_zero() || j.is_zero() || j.is_constant()) continue;
    Ideal i(f, 2, {a, b});
    Ideal jj(f, 2, {j});
    Ideal s1 = saturate(i, jj);
    Ideal s2 = saturate(s1, jj);
    CHECK(ideal_equal(s1, s2));
    Ideal q = ideal_quotient(i, jj);
    for (const Polynomial& g : i.gens()) CHECK(q.contains(g));  // I subset (I:J)
    ++done;
  }
  CHECK(done >= 8);
  // J subset I forces (I:J) = (1)
  Ideal i = ideal_q(2, {"x", "y^2"});
  Ideal sub = ideal_q(2, {"x*y", "y^2"});
  Ideal q = ideal_quotient(i, sub);
  CHECK(q.contains(parse_q("1")));
}

TEST_CASE("colength: affine staircase counts") {
  CHECK(colength(ideal_q(2, {"x", "y"})) == 1);
  CHECK(colength(ideal_q(2, {"x^2", "y"})) == 2);
  // Tjurina ideal of an ordinary node f = x*y
  Ideal node = ideal_q(2, {"x*y", "y", "x"});
  CHECK(colength(node) == 1);
  CHECK(!colength(ideal_q(2, {"x"})).has_value());  // a line: infinite
}

TEST_CASE("colength: order independence via a lex-basis rebuild") {
  Ideal i = ideal_q(2, {"x^2 - y", "x*y - 1"});
  std::array<uint8_t, kMaxVars> perm = {0, 1, 2, 3};
  const GroebnerBasis& lexgb = i.groebner(TermOrder::lex(perm, 2));
  Ideal relex(FieldSpec::rationals(), 2, lexgb.polys);
  CHECK(colength(i) == colength(relex));

  // same for the Hilbert stable value of a projective scheme
  Polynomial f = parse_q("x^3*y - x*y^3");
  Ideal jac(FieldSpec::rationals(), 3,
            {f.differentiate(0), f.differentiate(1), f.differentiate(2)});
  Ideal sat = saturate(jac, irrelevant_ideal(FieldSpec::rationals()));
  const GroebnerBasis& lexsat = sat.groebner(TermOrder::lex(perm, 3));
  Ideal resat(FieldSpec::rationals(), 3, lexsat.polys, true);
  HilbertTable a = hilbert_function(sat, 8);
  HilbertTable b = hilbert_function(resat, 8);
  CHECK(a.stabilized);
  CHECK(b.stabilized);
  CHECK(a.stable_value == b.stable_value);
}

TEST_CASE("hilbert function examples") {
  // a single reduced point
  HilbertTable t1 = hilbert_function(Ideal(FieldSpec::rationals(), 3,
                                           {parse_q("x"), parse_q("y")}, true),
                                     4);
  CHECK(t1.values == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(t1.stabilized);
  CHECK(t1.stable_value == 1);

  // the fat point (x,y)^2: degree 3
  HilbertTable t2 = hilbert_function(
      Ideal(FieldSpec::rationals(), 3, {parse_q("x^2"), parse_q("x*y"), parse_q("y^2")}, true), 4);
  CHECK(t2.values == std::vector<long>{1, 3, 3, 3, 3});
  CHECK(t2.stable_value == 3);

  // complete intersection of degrees 1 and 3: regularity 1+3-1 = 3
  Ideal ci(FieldSpec::rationals(), 3, {parse_q("x"), parse_q("y^3")}, true);
  HilbertTable t3 = hilbert_function(ci, 4);
  CHECK(t3.values == std::vector<long>{1, 2, 3, 3, 3});
  CHECK(scheme_regularity(ci, 3) == 3);
}

TEST_CASE("eliminate: univariate generators") {
  CHECK(eliminate(ideal_q(2, {"x - 1", "y - 2"}), 0) == parse_q("x - 1"));
  CHECK(eliminate(ideal_q(2, {"x^2 - 1", "y - x"}), 0) == parse_q("x^2 - 1"));
  // Tjurina ideal of two nodes at (1,0) and (-1,0): f = y^2 - (x^2-1)^2
  Polynomial f = parse_q("y^2 - (x^2-1)^2");
  Ideal tj(FieldSpec::rationals(), 2, {f, f.differentiate(0), f.differentiate(1)});
  CHECK(eliminate(tj, 0) == parse_q("x^2 - 1"));
  CHECK_THROWS_AS(eliminate(ideal_q(2, {"x"}), 0), Error);
}

TEST_CASE("oracle colength examples") {
  CHECK(oracle_colength(ideal_q(2, {"x", "y"}), 3) == 1);
  CHECK(oracle_colength(ideal_q(2, {"x^2", "y"}), 4) == 2);
  Polynomial f = parse_q("x^3*y - x*y^3");
  Ideal jac(FieldSpec::rationals(), 3,
            {f.differentiate(0), f.differentiate(1), f.differentiate(2)});
  CHECK(oracle_colength(jac, 8) == 9);
  CHECK_THROWS_AS(oracle_colength(ideal_q(2, {"x"}), 6), Error);  // not zero-dimensional
}

TEST_CASE("buchberger soundness: S-polynomials and generators reduce to zero") {
  Rng rng(41);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) {
        Polynomial p = random_poly(f, rng, 3, 3);
        if (!p.is_zero()) gens.push_back(p);
      }
      if (gens.empty()) continue;
      auto basis = buchberger(f, gens, grv());
      for (const Polynomial& g : gens) CHECK(reduce_modulo(g, basis, grv()).is_zero());
      for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) {
          const Term& la = basis[a].leading_term(grv());
          const Term& lb = basis[b].leading_term(grv());
          Monomial l = Monomial::lcm(la.mono, lb.mono);
          Polynomial s = basis[a].term_multiple(l / la.mono, lb.coeff) -
                         basis[b].term_multiple(l / lb.mono, la.coeff);
          CHECK(reduce_modulo(s, basis, grv()).is_zero());
        }
    }
  }
}

namespace {

// top-degree homogeneous part; coprime tops keep the whole intersection
// affine, which is what makes the two counting routes agree
Polynomial top_form(const Polynomial& p) {
  std::vector<Term> terms;
  for (const Term& t : p.terms())
    if (t.mono.degree() == p.degree()) terms.push_back(t);
  return polynomial_from_terms(p.field(), std::move(terms));
}

}  // namespace

TEST_CASE("oracle equivalence on random zero-dimensional ideals") {
  Rng rng(47);
  FieldSpec f = FieldSpec::rationals();
  int verified = 0;
  for (int trial = 0; trial < 200 && verified < 15; ++trial) {
    Polynomial a = random_poly(f, rng, 4, 2);
    Polynomial b = random_poly(f, rng, 4, 2);
    if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) continue;
    if (!gcd(top_form(a), top_form(b)).is_constant()) continue;
    Ideal i(f, 2, {a, b});
    auto len = colength(i);
    REQUIRE(len.has_value());  // coprime tops force a finite intersection
    CHECK(*len == oracle_colength(i, a.degree() + b.degree() + 2));
    ++verified;
  }
  CHECK(verified >= 10);
}

TEST_CASE("irrelevant-ideal saturation: shortcut agrees with iterated quotients") {
  // (x, y, x+z) is the irrelevant ideal with a disguised generator list, so
  // it takes the general path; the results must coincide
  FieldSpec f = FieldSpec::rationals();
  Ideal disguised(f, 3, {parse_q("x"), parse_q("y"), parse_q("x + z")});
  for (const char* text : {"y^2*z - x^3", "x^3*y - x*y^3", "x^2*y^2 + y^2*z^2 + z^2*x^2"}) {
    Polynomial g = parse_q(text);
    Ideal jac(f, 3, {g.differentiate(0), g.differentiate(1), g.differentiate(2)});
    Ideal fast = saturate(jac, irrelevant_ideal(f));
    Ideal slow = saturate(jac, disguised);
    CHECK(ideal_equal(fast, slow));
  }
  // an ideal with a genuinely irrelevant component
  Ideal mixed(f, 3, {parse_q("x*z"), parse_q("y*z"), parse_q("z^2"), parse_q("x^3")});
  Ideal fast = saturate(mixed, irrelevant_ideal(f));
  Ideal slow = saturate(mixed, disguised);
  CHECK(ideal_equal(fast, slow));
  CHECK(fast.contains(parse_q("z")));  // the embedded cone point is gone
}

TEST_CASE("krull dimension from the staircase") {
  CHECK(krull_dimension(ideal_q(2, {"x", "y"})) == 0);
  CHECK(krull_dimension(ideal_q(2, {"x"})) == 1);
  CHECK(krull_dimension(ideal_q(3, {"x^2 + y^2 + z^2"})) == 2);
  CHECK(krull_dimension(ideal_q(2, {"1"})) == -1);
}
