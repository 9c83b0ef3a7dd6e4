#include "tjurina/field.hpp"

namespace tjurina {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(uint32_t p) {
  if (!is_prime_u32(p)) fail(Errc::BadCoefficient, "characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) fail(Errc::BadCoefficient, "prime characteristic must be < 2^31");
  return FieldSpec(p);
}

Coeff FieldSpec::reduce(const Coeff& a) const {
  if (p_ == 0) return a;
  // a has denominator 1 by construction except right after from_string/inv.
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class p(p_);
  mpz_class r = num % p;
  if (r < 0) r += p;
  if (den != 1) fail(Errc::Internal, "unreduced prime-field element");
  return Coeff(r);
}

Coeff FieldSpec::from_long(long v) const {
  Coeff c(v);
  if (p_ == 0) return c;
  mpz_class r = c.get_num() % mpz_class(p_);
  if (r < 0) r += p_;
  return Coeff(r);
}

Coeff FieldSpec::from_string(const std::string& s) const {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    mpz_class n(s);
    if (p_ == 0) return Coeff(n);
    mpz_class r = n % mpz_class(p_);
    if (r < 0) r += p_;
    return Coeff(r);
  }
  mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
  if (d == 0) fail(Errc::BadCoefficient, "zero denominator in '" + s + "'");
  if (p_ == 0) {
    Coeff q(n, d);
    q.canonicalize();
    return q;
  }
  mpz_class p(p_);
  mpz_class dr = d % p;
  if (dr < 0) dr += p;
  if (dr == 0) fail(Errc::BadCoefficient, "'" + s + "' is not representable over F_" + std::to_string(p_));
  mpz_class nr = n % p;
  if (nr < 0) nr += p;
  return mul(Coeff(nr), inv(Coeff(dr)));
}

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = (a.get_num() + b.get_num()) % mpz_class(p_);
  return Coeff(r);
}

Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = (a.get_num() - b.get_num()) % mpz_class(p_);
  if (r < 0) r += p_;
  return Coeff(r);
}

Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % mpz_class(p_);
  return Coeff(r);
}

Coeff FieldSpec::neg(const Coeff& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Coeff(mpz_class(p_) - a.get_num());
}

Coeff FieldSpec::inv(const Coeff& a) const {
  if (a == 0) fail(Errc::BadCoefficient, "division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
    fail(Errc::BadCoefficient, "element not invertible");
  return Coeff(r);
}

std::string FieldSpec::to_string(const Coeff& a) const {
  return a.get_str();
}

}  // namespace tjurina
