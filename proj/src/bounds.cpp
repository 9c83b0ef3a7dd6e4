#include "tjurina/bounds.hpp"

namespace tjurina {

namespace {

TheoremVerdict skipped(const std::string& id, const std::string& reason) {
  TheoremVerdict v;
  v.id = id;
  v.hypotheses_met = false;
  v.skipped = reason;
  return v;
}

Coeff q(long v) { return Coeff(v); }

}  // namespace

TheoremVerdict verify_prop_2_3(const Foliation& fol) {
  if (fol.degree == 0) return skipped("P2.3", "m > 0 required");
  TheoremVerdict v;
  v.id = "P2.3";
  v.hypotheses_met = true;
  v.hypothesis_notes = {"S finite", "m > 0"};
  FoliationRegularity reg = foliation_regularity(fol);
  v.lhs = q(reg.value);
  v.rhs = q(2L * fol.degree);
  v.holds = *v.lhs == *v.rhs;
  v.equality = v.holds;
  return v;
}

TheoremVerdict verify_theorem_2_5(const CurveInvariants& inv, const FieldSpec& field, int m_leaf,
                                  bool witness_singular_scheme_finite) {
  if (!inv.reduced) return skipped("T2.5", "curve is not reduced");
  uint32_t p = field.characteristic();
  if (p != 0 && inv.d % static_cast<int>(p) == 0)
    return skipped("T2.5", "characteristic divides the degree");
  TheoremVerdict v;
  v.id = "T2.5";
  v.hypotheses_met = true;
  v.hypothesis_notes.push_back("curve is a leaf of the degree-" + std::to_string(m_leaf) +
                               " witness foliation");
  long rho = inv.rho;
  long bound = rho <= 0 ? m_leaf + 1 : m_leaf + 1 + rho;
  v.lhs = q(inv.d);
  v.rhs = q(bound);
  bool holds = inv.d <= bound;
  v.equality = inv.d == bound;
  if (witness_singular_scheme_finite && inv.d >= 2 * m_leaf + 2) {
    v.hypothesis_notes.push_back("furthermore-clause applies (S finite, d >= 2m+2)");
    holds = holds && inv.d == m_leaf + 1 + rho;
  }
  v.holds = holds;
  return v;
}

TheoremVerdict verify_lemma_3_1(const CurveInvariants& inv, const FieldSpec& field) {
  if (!inv.reduced) return skipped("L3.1", "curve is not reduced");
  if (field.characteristic() != 0) return skipped("L3.1", "characteristic zero required");
  if (inv.d < 2) return skipped("L3.1", "degree >= 2 required");
  if (!inv.u.has_value()) return skipped("L3.1", "u unavailable");
  TheoremVerdict v;
  v.id = "L3.1";
  v.hypotheses_met = true;
  v.hypothesis_notes = {"characteristic 0", "d >= 2"};
  v.lhs = q(inv.sigma);
  Coeff rhs = q(inv.d - 2) + Coeff(inv.tau - *inv.u) / Coeff(inv.d - 1);
  rhs.canonicalize();
  v.rhs = rhs;
  v.holds = *v.lhs <= rhs;
  v.equality = *v.lhs == rhs;
  return v;
}

TheoremVerdict verify_theorem_3_2(const CurveInvariants& inv, const FieldSpec& field, int m_leaf) {
  if (!inv.reduced) return skipped("T3.2", "curve is not reduced");
  if (field.characteristic() != 0) return skipped("T3.2", "characteristic zero required");
  if (inv.d < 2) return skipped("T3.2", "degree >= 2 required");
  if (!inv.u.has_value()) return skipped("T3.2", "u unavailable");
  TheoremVerdict v;
  v.id = "T3.2";
  v.hypotheses_met = true;
  v.hypothesis_notes = {"characteristic 0", "d >= 2",
                        "curve is a leaf of the degree-" + std::to_string(m_leaf) +
                            " witness foliation"};
  long lhs = static_cast<long>(inv.d - 1) * (inv.d - m_leaf - 1) + *inv.u;
  v.lhs = q(lhs);
  v.rhs = q(inv.tau);
  v.holds = lhs <= inv.tau;
  v.equality = lhs == inv.tau;
  if (*v.equality) {
    bool smooth_case = inv.d == m_leaf + 1 && inv.tau == 0;
    bool sigma_case = inv.d > m_leaf + 1 && inv.sigma == 2 * inv.d - m_leaf - 3;
    v.equality_case_consistent = smooth_case || sigma_case;
    v.holds = *v.holds && *v.equality_case_consistent;
  }
  return v;
}

std::pair<TheoremVerdict, TheoremVerdict> verify_prop_3_3(const CurveInvariants& inv, int m_leaf) {
  TheoremVerdict a;
  if (!inv.reduced) {
    a = skipped("P3.3a", "curve is not reduced");
  } else {
    a.id = "P3.3a";
    a.hypotheses_met = true;
    a.hypothesis_notes = {"m is the least leaf degree"};
    long bound = static_cast<long>(inv.d - 1) * (inv.d - m_leaf - 1) +
                 static_cast<long>(m_leaf) * m_leaf;
    a.lhs = q(inv.tau);
    a.rhs = q(bound);
    a.holds = m_leaf <= inv.d - 1 && inv.tau <= bound;
    a.equality = inv.tau == bound;
    if (m_leaf > inv.d - 1) a.hypothesis_notes.push_back("m <= d-1 violated");
  }

  TheoremVerdict b;
  if (!inv.reduced) {
    b = skipped("P3.3b", "curve is not reduced");
  } else if (inv.d > 2 * m_leaf) {
    b = skipped("P3.3b", "d <= 2m required");
  } else if (inv.irreducibility != Irreducibility::Irreducible) {
    b = skipped("P3.3b", "no irreducibility certificate");
  } else {
    b.id = "P3.3b";
    b.hypotheses_met = true;
    b.hypothesis_notes = {"d <= 2m", "irreducibility certified"};
    long n = 2L * m_leaf + 2 - inv.d;
    long binom = n * (n - 1) / 2;
    long bound = static_cast<long>(inv.d - 1) * (inv.d - m_leaf - 1) +
                 static_cast<long>(m_leaf) * m_leaf - binom;
    b.lhs = q(inv.tau);
    b.rhs = q(bound);
    b.holds = inv.tau <= bound;
    b.equality = inv.tau == bound;
  }
  return {a, b};
}

std::string curve_identity_hash(const PlaneCurve& curve) {
  std::string text = curve.field().name() + ":" + curve.F.to_string();
  uint64_t h = 1469598103934665603ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BoundsReport full_report(const PlaneCurve& curve, uint64_t seed) {
  BoundsReport report;
  report.curve_hash = curve_identity_hash(curve);
  report.field_name = curve.field().name();
  report.seed = seed;

  bool invariants_ok = false;
  try {
    report.invariants = analyze_curve(curve, seed);
    invariants_ok = true;
  } catch (const Error& e) {
    report.stage_errors.push_back(std::string("invariants: ") + e.what());
    report.invariants.d = curve.d;
    report.invariants.reduced = is_reduced(curve);
  }

  if (!report.invariants.reduced) {
    for (const char* id : {"P2.3", "T2.5", "L3.1", "T3.2", "P3.3a", "P3.3b"})
      report.verdicts.push_back(skipped(id, "NOT_REDUCED"));
    return report;
  }
  if (!invariants_ok) {
    // tau/sigma/u are unavailable; no verdict may be evaluated against them
    for (const char* id : {"P2.3", "T2.5", "L3.1", "T3.2", "P3.3a", "P3.3b"})
      report.verdicts.push_back(skipped(id, "invariants unavailable"));
    return report;
  }

  std::optional<Foliation> hamilton;
  try {
    HamiltonResult h = hamilton_foliation(curve, seed);
    report.foliation.hamilton_degree = h.foliation.degree;
    report.foliation.hamilton_degree_dropped = h.degree_dropped;
    hamilton = std::move(h.foliation);
  } catch (const Error& e) {
    report.stage_errors.push_back(std::string("hamilton: ") + e.what());
  }

  std::optional<MinimalDegreeResult> leaf;
  try {
    leaf = minimal_degree(curve, MinimalDegreeMode::Leaf, seed);
    // at the minimal level every clean solution is already coprime, so the
    // witness is a saturated foliation of exactly this degree
    Foliation wit = make_foliation(leaf->witness.a, leaf->witness.b, leaf->witness.c);
    if (wit.degree != leaf->m)
      fail(Errc::Internal, "leaf witness degree disagrees with the search level");
    if (!leaf_check(curve, wit).is_leaf)
      fail(Errc::Internal, "leaf witness fails the leaf test");
    report.foliation.m_leaf = leaf->m;
    report.foliation.leaf_gap_levels = leaf->gap_levels;
    report.foliation.leaf_witness = {wit.form.a.to_string(), wit.form.b.to_string(),
                                     wit.form.c.to_string()};
  } catch (const Error& e) {
    leaf.reset();
    report.stage_errors.push_back(std::string("minimal leaf degree: ") + e.what());
  }

  try {
    MinimalDegreeResult factors = minimal_degree(curve, MinimalDegreeMode::FactorsThrough, seed);
    report.foliation.m_factors = factors.m;
  } catch (const Error& e) {
    report.stage_errors.push_back(std::string("minimal factors-through degree: ") + e.what());
  }

  if (hamilton.has_value())
    report.verdicts.push_back(verify_prop_2_3(*hamilton));
  else
    report.verdicts.push_back(skipped("P2.3", "Hamilton foliation unavailable"));

  if (leaf.has_value()) {
    // the minimal witness is saturated, so its singular scheme is finite
    report.verdicts.push_back(verify_theorem_2_5(report.invariants, curve.field(), leaf->m, true));
  } else {
    report.verdicts.push_back(skipped("T2.5", "no leaf witness"));
  }

  report.verdicts.push_back(verify_lemma_3_1(report.invariants, curve.field()));

  if (leaf.has_value())
    report.verdicts.push_back(verify_theorem_3_2(report.invariants, curve.field(), leaf->m));
  else
    report.verdicts.push_back(skipped("T3.2", "no leaf witness"));

  if (leaf.has_value()) {
    auto [a, b] = verify_prop_3_3(report.invariants, leaf->m);
    report.verdicts.push_back(a);
    report.verdicts.push_back(b);
  } else {
    report.verdicts.push_back(skipped("P3.3a", "no leaf witness"));
    report.verdicts.push_back(skipped("P3.3b", "no leaf witness"));
  }
  return report;
}

}  // namespace tjurina
