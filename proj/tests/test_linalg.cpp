#include <doctest.h>

#include "test_support.hpp"
#include "tjurina/ideal.hpp"
#include "tjurina/linalg.hpp"

using namespace tjurina;

TEST_CASE("nullspace: identity has full column rank") {
  LinearSystem sys(FieldSpec::rationals(), 2, 2);
  sys.at(0, 0) = 1;
  sys.at(1, 1) = 1;
  CHECK(sys.rank() == 2);
  CHECK(sys.nullspace().empty());
}

TEST_CASE("nullspace: single row (1,-1)") {
  LinearSystem sys(FieldSpec::rationals(), 1, 2);
  sys.at(0, 0) = 1;
  sys.at(0, 1) = -1;
  auto basis = sys.nullspace();
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == 1);
  CHECK(basis[0][1] == 1);
}

TEST_CASE("nullspace of the degree-1 Macaulay matrix of (x,y) matches the Hilbert function") {
  // rows: x and y as linear forms over columns {x,y,z}
  FieldSpec f = FieldSpec::rationals();
  LinearSystem sys(f, 2, 3);
  sys.at(0, 0) = 1;
  sys.at(1, 1) = 1;
  auto basis = sys.nullspace();
  CHECK(basis.size() == 1);  // only z survives

  Ideal i(f, 3, {Polynomial::variable(f, 0), Polynomial::variable(f, 1)});
  HilbertTable t = hilbert_function(Ideal(f, 3, i.gens(), true), 3);
  CHECK(t.values[1] == 1);
  CHECK(static_cast<size_t>(t.values[1]) == basis.size());
}

TEST_CASE("nullspace vectors solve the system exactly, both fields") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
      size_t rows = static_cast<size_t>(rng.uniform(1, 6));
      size_t cols = static_cast<size_t>(rng.uniform(1, 7));
      LinearSystem sys(f, rows, cols);
      for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
          sys.at(r, c) = f.kind() == FieldKind::Rationals
                             ? Coeff(rng.uniform(-6, 6))
                             : f.from_long(rng.uniform(0, 10));
      auto basis = sys.nullspace();
      CHECK(basis.size() == cols - static_cast<size_t>(sys.rank()));
      for (const auto& v : basis) {
        bool nonzero = false;
        for (const Coeff& c : v) nonzero = nonzero || c != 0;
        CHECK(nonzero);
        for (size_t r = 0; r < rows; ++r) {
          Coeff s = f.zero();
          for (size_t c = 0; c < cols; ++c) s = f.add(s, f.mul(sys.at(r, c), v[c]));
          CHECK(s == 0);
        }
      }
    }
  }
}
