#pragma once

#include <optional>
#include <string>

#include "tjurina/curve.hpp"
#include "tjurina/foliation.hpp"

namespace tjurina {

// Verdict of one displayed inequality. `holds` is defined only when the
// hypotheses are met; `skipped` carries the gate reason otherwise.
struct TheoremVerdict {
  std::string id;  // P2.3, T2.5, L3.1, T3.2, P3.3a, P3.3b
  bool hypotheses_met = false;
  std::vector<std::string> hypothesis_notes;
  std::optional<Coeff> lhs, rhs;  // exact rationals
  std::optional<bool> holds;
  std::optional<bool> equality;
  std::optional<bool> equality_case_consistent;  // T3.2 equality dichotomy
  std::optional<std::string> skipped;
};

struct FoliationSummary {
  std::optional<int> m_leaf;
  std::optional<int> m_factors;
  std::optional<int> hamilton_degree;
  bool hamilton_degree_dropped = false;
  std::vector<int> leaf_gap_levels;               // levels with solutions but no leaf witness
  std::optional<std::array<std::string, 3>> leaf_witness;  // coefficient triple of the witness
};

struct BoundsReport {
  std::string curve_hash;
  std::string field_name;
  uint64_t seed = 0;
  CurveInvariants invariants;
  FoliationSummary foliation;
  std::vector<TheoremVerdict> verdicts;
  std::vector<std::string> stage_errors;

  bool all_non_skipped_hold() const {
    for (const TheoremVerdict& v : verdicts)
      if (v.holds.has_value() && !*v.holds) return false;
    return true;
  }
};

// reg S = 2m for finite S and m > 0.
TheoremVerdict verify_prop_2_3(const Foliation& fol);

// d <= m+1 (rho <= 0) or d <= m+1+rho (rho > 0); for finite S and
// d >= 2m+2 the equality d = m+1+rho is required as well.
TheoremVerdict verify_theorem_2_5(const CurveInvariants& inv, const FieldSpec& field, int m_leaf,
                                  bool witness_singular_scheme_finite);

// sigma <= d-2 + (tau-u)/(d-1), exact rational comparison.
TheoremVerdict verify_lemma_3_1(const CurveInvariants& inv, const FieldSpec& field);

// (d-1)(d-m-1) + u <= tau, with the equality dichotomy check.
TheoremVerdict verify_theorem_3_2(const CurveInvariants& inv, const FieldSpec& field, int m_leaf);

// m <= d-1 and tau <= (d-1)(d-m-1) + m^2; the second verdict carries the
// binomial improvement under d <= 2m and certified irreducibility.
std::pair<TheoremVerdict, TheoremVerdict> verify_prop_3_3(const CurveInvariants& inv, int m_leaf);

// Whole pipeline: invariants, Hamilton foliation, minimal degrees in both
// modes, all verdicts. Deterministic given (curve, seed); stage failures are
// recorded without aborting independent stages.
BoundsReport full_report(const PlaneCurve& curve, uint64_t seed);

std::string curve_identity_hash(const PlaneCurve& curve);

}  // namespace tjurina
