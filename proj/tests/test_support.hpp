#pragma once

#include "tjurina/polynomial.hpp"
#include "tjurina/rng.hpp"

namespace tjurina::testing {

inline Polynomial random_poly(const FieldSpec& f, Rng& rng, int max_degree, int nvars) {
  std::vector<Term> terms;
  int count = static_cast<int>(rng.uniform(1, 6));
  for (int i = 0; i < count; ++i) {
    Monomial m;
    int left = max_degree;
    for (int v = 0; v < nvars; ++v) {
      int e = static_cast<int>(rng.uniform(0, left));
      m.e[v] = static_cast<uint16_t>(e);
      left -= e;
    }
    Coeff c = f.kind() == FieldKind::Rationals ? Coeff(rng.uniform(-9, 9))
                                               : f.from_long(rng.uniform(0, f.characteristic() - 1));
    if (c != 0) terms.push_back({m, c});
  }
  return polynomial_from_terms(f, std::move(terms));
}

inline Polynomial random_homogeneous(const FieldSpec& f, Rng& rng, int degree, int nvars) {
  std::vector<Term> terms;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree && (nvars > 2 || i + j == degree); ++j) {
      Monomial m;
      m.e[0] = static_cast<uint16_t>(i);
      m.e[1] = static_cast<uint16_t>(j);
      if (nvars > 2) m.e[2] = static_cast<uint16_t>(degree - i - j);
      Coeff c = f.kind() == FieldKind::Rationals
                    ? Coeff(rng.uniform(-5, 5))
                    : f.from_long(rng.uniform(0, f.characteristic() - 1));
      if (c != 0) terms.push_back({m, c});
    }
  return polynomial_from_terms(f, std::move(terms));
}

inline Polynomial parse_q(const std::string& s) {
  return parse_polynomial(s, FieldSpec::rationals());
}

}  // namespace tjurina::testing
