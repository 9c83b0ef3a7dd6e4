#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjurina/field.hpp"
#include "tjurina/monomial.hpp"

namespace tjurina {

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse exact multivariate polynomial. Terms are kept sorted descending in
// the canonical order (grevlex, x > y > z > t) with no zero coefficients, so
// equality is structural and printing is deterministic.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec field) : field_(field) {}

  static Polynomial zero(FieldSpec f) { return Polynomial(f); }
  static Polynomial constant(FieldSpec f, const Coeff& c);
  static Polynomial variable(FieldSpec f, int var);
  static Polynomial monomial(FieldSpec f, const Monomial& m, const Coeff& c);

  const FieldSpec& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Total degree; the zero polynomial has degree -1 by convention.
  int degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool uses_var(int var) const;
  // Number of variables spanned: highest variable index present + 1.
  int var_span() const;
  size_t term_count() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const;
  const Term& leading_term(const TermOrder& order) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const Coeff& c) const;                       // c * p
  Polynomial term_multiple(const Monomial& m, const Coeff& c) const;  // c * m * p

  Polynomial differentiate(int var) const;
  Polynomial homogenize(int var, int deg) const;
  Polynomial dehomogenize(int var) const;

  // Full composition: substitute images[i] for variable i.
  Polynomial substitute(const std::array<Polynomial, kMaxVars>& images) const;
  Coeff evaluate(const std::array<Coeff, kMaxVars>& point) const;

  // Over Q: rational c with p = c * (coprime-integer-coefficient poly with
  // positive leading coefficient). Over F_p: the leading coefficient.
  Coeff content() const;
  Polynomial primitive() const;   // p / content
  Polynomial monic(const TermOrder& order) const;

  std::string to_string() const;

  // Canonical-order comparison key for deterministic sorting of basis lists.
  static bool canonical_less(const Polynomial& a, const Polynomial& b);

 private:
  friend Polynomial make_from_map(FieldSpec, std::vector<Term>&&);
  FieldSpec field_;
  std::vector<Term> terms_;
};

// Builds from an arbitrary term list: sorts canonically, merges duplicates,
// drops zero coefficients.
Polynomial polynomial_from_terms(FieldSpec f, std::vector<Term> terms);

// Exact division: p / q when the remainder vanishes, nullopt otherwise.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q);

// Normalized monic greatest common divisor (primitive-part recursion on the
// last variable, subresultant pseudo-remainders at the base).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Grammar: variables x,y,z; integer and a/b literals; + - * ^; parentheses;
// whitespace insignificant; implicit multiplication disallowed.
Polynomial parse_polynomial(const std::string& text, FieldSpec field);

Polynomial pow(const Polynomial& p, int k);

inline const TermOrder& canonical_order() {
  static const TermOrder o = TermOrder::grevlex(kMaxVars);
  return o;
}

}  // namespace tjurina
