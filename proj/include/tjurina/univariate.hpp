#pragma once

#include <vector>

#include "tjurina/polynomial.hpp"
#include "tjurina/rng.hpp"

namespace tjurina {

// Helpers for polynomials in a single variable `var` (all other variables
// absent). Factorization over Q runs mod-p factorization, Hensel lifting and
// subset recombination; over a prime field it is distinct-degree plus
// equal-degree splitting.

Polynomial squarefree_part(const Polynomial& p, int var);

// Monic irreducible factors of a squarefree input, canonically sorted.
std::vector<Polynomial> factor_univariate_squarefree(const Polynomial& p, int var, Rng& rng);

// Deterministic irreducibility test over F_p.
bool univariate_irreducible_fp(const Polynomial& p, int var);

// All roots in F_p, sorted.
std::vector<Coeff> univariate_roots_fp(const Polynomial& p, int var, Rng& rng);

}  // namespace tjurina
