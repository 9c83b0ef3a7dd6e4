#include <doctest.h>

#include "test_support.hpp"
#include "tjurina/bounds.hpp"
#include "tjurina/io.hpp"

using namespace tjurina;
using tjurina::testing::parse_q;

namespace {

PlaneCurve curve_q(const char* text) { return PlaneCurve::from(parse_q(text)); }

const TheoremVerdict& verdict(const BoundsReport& r, const std::string& id) {
  for (const TheoremVerdict& v : r.verdicts)
    if (v.id == id) return v;
  REQUIRE(false);
  return r.verdicts[0];
}

}  // namespace

TEST_CASE("cone of four lines: every evaluated verdict holds, three with equality") {
  BoundsReport r = full_report(curve_q("x*y*(x+y)*(x-y)"), 0);
  CHECK(r.invariants.tau == 9);
  CHECK(r.invariants.sigma == 5);
  CHECK(r.invariants.u == 0);
  CHECK(r.foliation.m_leaf == 0);
  CHECK(r.foliation.hamilton_degree == 3);
  CHECK(r.stage_errors.empty());

  int evaluated = 0;
  for (const TheoremVerdict& v : r.verdicts)
    if (!v.skipped) {
      ++evaluated;
      CHECK(v.holds == true);
    }
  CHECK(evaluated == 5);  // P3.3b gated out by d <= 2m

  const TheoremVerdict& t25 = verdict(r, "T2.5");
  CHECK(t25.equality == true);  // 4 = 0 + 1 + 3, furthermore-clause forces it
  const TheoremVerdict& l31 = verdict(r, "L3.1");
  CHECK(l31.lhs == Coeff(5));
  CHECK(l31.rhs == Coeff(5));  // 2 + 9/3
  CHECK(l31.equality == true);
  const TheoremVerdict& t32 = verdict(r, "T3.2");
  CHECK(t32.equality == true);
  CHECK(t32.equality_case_consistent == true);  // sigma = 2d - m - 3 = 5
  const TheoremVerdict& p33a = verdict(r, "P3.3a");
  CHECK(p33a.equality == true);  // 9 = (d-1)(d-m-1) + m^2
  CHECK(verdict(r, "P3.3b").skipped.has_value());
}

TEST_CASE("smooth conic end-to-end: equalities in T2.5, T3.2 and P3.3b") {
  BoundsReport r = full_report(curve_q("x*z - y^2"), 0);
  CHECK(r.invariants.tau == 0);
  CHECK(r.invariants.sigma == 0);
  CHECK(r.foliation.m_leaf == 1);
  CHECK(r.all_non_skipped_hold());

  const TheoremVerdict& t25 = verdict(r, "T2.5");
  CHECK(t25.lhs == Coeff(2));
  CHECK(t25.rhs == Coeff(2));  // rho <= 0 branch: d <= m+1
  CHECK(t25.equality == true);
  const TheoremVerdict& t32 = verdict(r, "T3.2");
  CHECK(t32.equality == true);
  CHECK(t32.equality_case_consistent == true);  // d = m+1 and smooth
  const TheoremVerdict& p33b = verdict(r, "P3.3b");
  CHECK(!p33b.skipped);  // d = 2m and certified irreducible
  CHECK(p33b.lhs == Coeff(0));
  CHECK(p33b.rhs == Coeff(0));  // binomial term C(2,2) = 1 eats the m^2
  CHECK(p33b.equality == true);
}

TEST_CASE("nodal cubic: all verdicts hold, P3.3b reaches equality") {
  BoundsReport r = full_report(curve_q("y^2*z - x^2*(x+z)"), 0);
  CHECK(r.all_non_skipped_hold());
  CHECK(r.foliation.m_leaf == 2);
  const TheoremVerdict& p33b = verdict(r, "P3.3b");
  if (!p33b.skipped) {
    CHECK(p33b.lhs == Coeff(1));
    CHECK(p33b.rhs == Coeff(1));  // 0 + 4 - C(3,2)
  }
}

TEST_CASE("non-reduced input: every verdict skipped") {
  BoundsReport r = full_report(curve_q("x^2*y"), 0);
  CHECK(!r.invariants.reduced);
  CHECK(r.verdicts.size() == 6);
  for (const TheoremVerdict& v : r.verdicts) {
    CHECK(v.skipped == std::string("NOT_REDUCED"));
    CHECK(!v.holds.has_value());
  }
}

TEST_CASE("P2.3 gate: degree-0 foliation is skipped") {
  Foliation pencil = make_foliation(parse_q("y"), parse_q("-x"), parse_q("0"));
  TheoremVerdict v = verify_prop_2_3(pencil);
  CHECK(v.skipped.has_value());
  Foliation m2 = random_foliation(FieldSpec::rationals(), 2, 3);
  TheoremVerdict w = verify_prop_2_3(m2);
  CHECK(w.holds == true);
  CHECK(w.lhs == Coeff(4));
}

TEST_CASE("characteristic dividing the degree gates out every verdict") {
  FieldSpec f3 = FieldSpec::prime(3);
  PlaneCurve c = PlaneCurve::from(parse_polynomial("x^3 + y^3 + x*y*z", f3));
  BoundsReport r = full_report(c, 0);
  CHECK(r.invariants.reduced);
  REQUIRE(!r.stage_errors.empty());
  for (const TheoremVerdict& v : r.verdicts) {
    CHECK(v.skipped.has_value());
    CHECK(!v.holds.has_value());
  }
}

TEST_CASE("a single line sails through the pipeline") {
  BoundsReport r = full_report(curve_q("x"), 0);
  CHECK(r.invariants.tau == 0);
  CHECK(r.foliation.m_leaf == 0);
  CHECK(r.foliation.hamilton_degree == 0);
  CHECK(r.all_non_skipped_hold());
  CHECK(verdict(r, "P2.3").skipped.has_value());  // hamilton degree 0
  CHECK(verdict(r, "L3.1").skipped.has_value());  // d >= 2 required
  CHECK(verdict(r, "T3.2").skipped.has_value());
}

TEST_CASE("reports are deterministic byte for byte") {
  BoundsReport a = full_report(curve_q("y^2*z - x^3"), 42);
  BoundsReport b = full_report(curve_q("y^2*z - x^3"), 42);
  CHECK(report_to_json(a) == report_to_json(b));
  BoundsReport c = full_report(curve_q("y^2*z - x^3"), 43);
  CHECK(report_to_json(a) != report_to_json(c));  // the seed is part of the report
}
