#include "tjurina/linalg.hpp"

#include <algorithm>

namespace tjurina {

namespace {

struct Echelon {
  std::vector<std::vector<Coeff>> m;  // upper echelon
  std::vector<size_t> pivot_col;      // per pivot row
};

// Fraction-free (Bareiss) forward elimination on integer-scaled rows.
Echelon eliminate_rational(const LinearSystem& sys) {
  size_t R = sys.rows(), C = sys.cols();
  std::vector<std::vector<Coeff>> m(R, std::vector<Coeff>(C));
  for (size_t i = 0; i < R; ++i) {
    mpz_class den_lcm = 1;
    for (size_t j = 0; j < C; ++j)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), sys.at(i, j).get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (size_t j = 0; j < C; ++j) {
      mpz_class v = sys.at(i, j).get_num() * (den_lcm / sys.at(i, j).get_den());
      m[i][j] = Coeff(v);
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
    if (num_gcd > 1)
      for (size_t j = 0; j < C; ++j) m[i][j] = Coeff(mpz_class(m[i][j].get_num() / num_gcd));
  }

  Echelon e;
  Coeff prev(1);
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t piv = row;
    while (piv < R && m[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[row], m[piv]);
    const Coeff pivval = m[row][col];
    for (size_t i = row + 1; i < R; ++i) {
      for (size_t j = col + 1; j < C; ++j) {
        mpz_class v = m[i][j].get_num() * pivval.get_num() - m[i][col].get_num() * m[row][j].get_num();
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), prev.get_num().get_mpz_t());
        m[i][j] = Coeff(q);
      }
      m[i][col] = Coeff(0);
    }
    prev = pivval;
    e.pivot_col.push_back(col);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

Echelon eliminate_prime(const LinearSystem& sys) {
  const FieldSpec& f = sys.field();
  size_t R = sys.rows(), C = sys.cols();
  std::vector<std::vector<Coeff>> m(R, std::vector<Coeff>(C));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) m[i][j] = sys.at(i, j);

  Echelon e;
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t piv = row;
    while (piv < R && m[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[row], m[piv]);
    Coeff inv = f.inv(m[row][col]);
    for (size_t j = col; j < C; ++j) m[row][j] = f.mul(m[row][j], inv);
    for (size_t i = row + 1; i < R; ++i) {
      if (m[i][col] == 0) continue;
      Coeff factor = m[i][col];
      for (size_t j = col; j < C; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
    }
    e.pivot_col.push_back(col);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

Echelon eliminate(const LinearSystem& sys) {
  return sys.field().kind() == FieldKind::Rationals ? eliminate_rational(sys) : eliminate_prime(sys);
}

void normalize_vector(const FieldSpec& f, std::vector<Coeff>& v) {
  if (f.kind() == FieldKind::PrimeField) {
    for (const Coeff& c : v)
      if (c != 0) {
        Coeff inv = f.inv(c);
        for (Coeff& x : v) x = f.mul(x, inv);
        return;
      }
    return;
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Coeff& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const Coeff& c : v) {
    ints.push_back(c.get_num() * (den_lcm / c.get_den()));
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (num_gcd == 0) return;
  int sign = 0;
  for (const mpz_class& z : ints)
    if (z != 0) {
      sign = z > 0 ? 1 : -1;
      break;
    }
  for (size_t i = 0; i < v.size(); ++i) v[i] = Coeff(ints[i] / num_gcd * sign);
}

}  // namespace

int LinearSystem::rank() const {
  return static_cast<int>(eliminate(*this).pivot_col.size());
}

std::vector<std::vector<Coeff>> LinearSystem::nullspace() const {
  Echelon e = eliminate(*this);
  size_t C = cols_;
  std::vector<bool> is_pivot(C, false);
  for (size_t c : e.pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Coeff>> basis;
  for (size_t fc = 0; fc < C; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Coeff> x(C, field_.zero());
    x[fc] = field_.one();
    for (size_t pr = e.pivot_col.size(); pr-- > 0;) {
      size_t pc = e.pivot_col[pr];
      Coeff s = field_.zero();
      for (size_t j = pc + 1; j < C; ++j)
        if (x[j] != 0 && e.m[pr][j] != 0) s = field_.add(s, field_.mul(e.m[pr][j], x[j]));
      x[pc] = field_.neg(field_.div(s, e.m[pr][pc]));
    }
    normalize_vector(field_, x);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace tjurina
