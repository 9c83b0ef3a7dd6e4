#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "tjurina/error.hpp"

namespace tjurina {

// Exact coefficient. Over Q this is an arbitrary-precision rational; over a
// prime field the canonical residue 0..p-1 (denominator 1).
using Coeff = mpq_class;

enum class FieldKind { Rationals, PrimeField };

// The coefficient field of a computation: Q or F_p with p < 2^31 prime.
// All values of one computation share a FieldSpec; operations route through
// it so that prime-field arithmetic stays reduced.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(uint32_t p);

  FieldKind kind() const { return p_ == 0 ? FieldKind::Rationals : FieldKind::PrimeField; }
  uint32_t characteristic() const { return p_; }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }

  Coeff from_long(long v) const;
  // Parses "a" or "a/b". Throws BadCoefficient when b is not invertible.
  Coeff from_string(const std::string& s) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string to_string(const Coeff& a) const;
  std::string name() const { return p_ == 0 ? "Q" : "F " + std::to_string(p_); }

 private:
  explicit FieldSpec(uint32_t p) : p_(p) {}
  Coeff reduce(const Coeff& a) const;  // prime field: canonical residue

  uint32_t p_;  // 0 for Q
};

bool is_prime_u32(uint32_t n);

}  // namespace tjurina
