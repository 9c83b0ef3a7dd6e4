#pragma once

#include "tjurina/curve.hpp"
#include "tjurina/ideal.hpp"
#include "tjurina/rng.hpp"

namespace tjurina {

// Twisted projective 1-form A dx + B dy + C dz with zero Euler contraction.
// A foliation of degree m has coefficient degree m + 1 in this representation.
struct ProjectiveOneForm {
  Polynomial a, b, c;

  ProjectiveOneForm()
      : a(FieldSpec::rationals()), b(FieldSpec::rationals()), c(FieldSpec::rationals()) {}
  ProjectiveOneForm(Polynomial a_, Polynomial b_, Polynomial c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  static ProjectiveOneForm from(Polynomial a, Polynomial b, Polynomial c);
  const FieldSpec& field() const { return a.field(); }
  int coefficient_degree() const;
  // simultaneous coordinate change matching curve_change(F) = F(M x)
  ProjectiveOneForm change_coordinates(const std::array<std::array<Coeff, 3>, 3>& m) const;
};

struct Foliation {
  ProjectiveOneForm form;  // coprime coefficients
  int degree = 0;          // m
  Ideal singular_ideal;    // saturated (A,B,C)
  long deg_s = 0;          // m^2 + m + 1
};

// Divides out gcd(A,B,C), computes the saturated singular scheme and checks
// deg S = m^2 + m + 1.
Foliation make_foliation(Polynomial a, Polynomial b, Polynomial c);

// Builds the 1-form of the vector-field triple (P,Q,R) of degree m.
ProjectiveOneForm one_form_of_vector_triple(const Polynomial& p, const Polynomial& q,
                                            const Polynomial& r);

struct FoliationRegularity {
  int value = 0;
  bool in_scope = true;  // false for m = 0, where the statement does not apply
};
FoliationRegularity foliation_regularity(const Foliation& fol);

struct LeafCheckResult {
  bool is_leaf = false;
  bool factors_through_only = false;
  std::array<Polynomial, 3> tangency_remainders;
};

LeafCheckResult leaf_check(const PlaneCurve& curve, const ProjectiveOneForm& form);
LeafCheckResult leaf_check(const PlaneCurve& curve, const Foliation& fol);

// Degree of the degeneracy determinant on a seeded random line; an
// independent cross-check of the degree convention (must equal m).
int tangency_degree_check(const Foliation& fol, uint64_t seed);

struct HamiltonResult {
  Foliation foliation;
  bool degree_dropped = false;  // gcd(F_x,F_y) != 1 in the found coordinates
};
HamiltonResult hamilton_foliation(const PlaneCurve& curve, uint64_t seed);

enum class MinimalDegreeMode { Leaf, FactorsThrough };

struct MinimalDegreeResult {
  int m = 0;
  ProjectiveOneForm witness;
  // levels where the linear system had solutions but every one of them
  // shared a component with the curve (leaf mode only)
  std::vector<int> gap_levels;
};

// Exhaustive linear-algebra search for the least foliation degree, by
// increasing coefficient degree. Terminates by k = d-1 in leaf mode.
MinimalDegreeResult minimal_degree(const PlaneCurve& curve, MinimalDegreeMode mode, uint64_t seed);

// Seeded random saturated foliation of exact degree m.
Foliation random_foliation(FieldSpec field, int m, uint64_t seed);

}  // namespace tjurina
