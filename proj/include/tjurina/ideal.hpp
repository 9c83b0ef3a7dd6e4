#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tjurina/polynomial.hpp"

namespace tjurina {

struct GroebnerBasis {
  std::vector<Polynomial> polys;  // reduced, auto-reduced, monic, sorted by descending leading term
  TermOrder order;
};

// Values of the Hilbert function t -> dim (R/I)_t of a homogeneous ideal.
struct HilbertTable {
  std::vector<long> values;       // index = degree
  bool stabilized = false;
  long stable_value = 0;
  bool saturated_input = false;   // scheme-level reads are only valid when true
};

// An ideal of k[x,y] (nvars = 2, affine chart) or k[x,y,z] (nvars = 3).
// Reduced Groebner bases are cached per term order; the cache is not
// synchronized, so a single Ideal value must be owned by one task at a time.
class Ideal {
 public:
  Ideal(FieldSpec field, int nvars, std::vector<Polynomial> gens, bool saturated = false);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool homogeneous() const { return homogeneous_; }
  bool saturated() const { return saturated_; }
  // Projective reading: ideals of k[x,y,z] generated in the homogeneous world
  // describe subschemes of the plane; everything else is affine.
  bool projective() const { return nvars_ == 3 && homogeneous_; }

  const GroebnerBasis& groebner(const TermOrder& order) const;

  Polynomial normal_form(const Polynomial& p, const TermOrder& order) const;
  bool contains(const Polynomial& p) const;

 private:
  FieldSpec field_;
  int nvars_;
  std::vector<Polynomial> gens_;
  bool homogeneous_;
  bool saturated_;
  mutable std::map<std::string, GroebnerBasis> cache_;
};

// --- Groebner engine -------------------------------------------------------

// Buchberger with the product and chain criteria; the result is the unique
// reduced basis for the order (deterministic regardless of pair scheduling).
std::vector<Polynomial> buchberger(const FieldSpec& field, std::vector<Polynomial> gens,
                                   const TermOrder& order);

// Remainder of multivariate division of p by the (not necessarily Groebner)
// list `basis`; zero iff p is in the ideal when `basis` is a Groebner basis.
Polynomial reduce_modulo(const Polynomial& p, const std::vector<Polynomial>& basis,
                         const TermOrder& order);

std::string diagnostic_dump(const GroebnerBasis& gb);

// --- Ideal arithmetic ------------------------------------------------------

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
// (I : J^infinity) by iterated quotient, stabilization tested by mutual
// containment, capped at 50 rounds. Homogeneous saturation by (x,y,z) takes
// a per-variable shortcut that computes the same ideal in one round.
Ideal saturate(const Ideal& i, const Ideal& j);
Ideal irrelevant_ideal(FieldSpec field);

bool ideal_equal(const Ideal& a, const Ideal& b);

// --- Dimension counts ------------------------------------------------------

// Krull dimension of R/I read off the leading-term staircase (-1 = empty).
int krull_dimension(const Ideal& i);

// Vector-space dimension of the quotient: number of standard monomials for
// affine ideals, stable Hilbert value for projective ones (saturating first
// when needed). nullopt = not zero-dimensional.
std::optional<long> colength(const Ideal& i);

HilbertTable hilbert_function(const Ideal& i, int up_to);

// Least degree from which the Hilbert function of the saturated ideal equals
// the scheme degree, plus one; 0 for the empty scheme.
int scheme_regularity(const Ideal& saturated_ideal, long scheme_degree);

// Generator of the elimination ideal in the kept variable (lex basis tail).
Polynomial eliminate(const Ideal& i, int keep_var);

// Colength without Groebner bases: Macaulay-matrix rank count, stabilized
// over two consecutive bounds.
long oracle_colength(const Ideal& i, int degree_bound);

// Radical of a zero-dimensional affine ideal: adjoin the squarefree parts of
// the per-variable eliminants.
Ideal radical_zero_dimensional(const Ideal& i);

}  // namespace tjurina
