#include "tjurina/univariate.hpp"

#include <algorithm>
#include <map>

namespace tjurina {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate arithmetic over F_p (p < 2^31, coefficients 0..p-1).

using Fpx = std::vector<long>;  // c[i] = coefficient of x^i

void fpx_trim(Fpx& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fpx_deg(const Fpx& a) { return static_cast<int>(a.size()) - 1; }

Fpx fpx_add(const Fpx& a, const Fpx& b, long p) {
  Fpx r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  fpx_trim(r);
  return r;
}

Fpx fpx_sub(const Fpx& a, const Fpx& b, long p) {
  Fpx r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
  fpx_trim(r);
  return r;
}

Fpx fpx_mul(const Fpx& a, const Fpx& b, long p) {
  if (a.empty() || b.empty()) return {};
  Fpx r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fpx_trim(r);
  return r;
}

long fp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % p) + p) % p;
}

// divrem by a nonzero divisor
std::pair<Fpx, Fpx> fpx_divrem(const Fpx& a, const Fpx& b, long p) {
  Fpx r = a, q;
  int db = fpx_deg(b);
  long inv = fp_inv(b.back(), p);
  if (fpx_deg(r) >= db) q.assign(fpx_deg(r) - db + 1, 0);
  while (fpx_deg(r) >= db) {
    int k = fpx_deg(r) - db;
    long c = r.back() * inv % p;
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[k + i] = ((r[k + i] - c * b[i]) % p + p) % p;
    fpx_trim(r);
  }
  fpx_trim(q);
  return {q, r};
}

Fpx fpx_mod(const Fpx& a, const Fpx& b, long p) { return fpx_divrem(a, b, p).second; }

Fpx fpx_monic(const Fpx& a, long p) {
  if (a.empty()) return a;
  long inv = fp_inv(a.back(), p);
  Fpx r = a;
  for (long& c : r) c = c * inv % p;
  return r;
}

Fpx fpx_gcd(Fpx a, Fpx b, long p) {
  while (!b.empty()) {
    Fpx r = fpx_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : fpx_monic(a, p);
}

// extended gcd: returns (g, s, t) with s*a + t*b = g, g monic
struct FpxBezout {
  Fpx g, s, t;
};
FpxBezout fpx_ext_gcd(Fpx a, Fpx b, long p) {
  Fpx s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!b.empty()) {
    auto [q, r] = fpx_divrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
    Fpx s2 = fpx_sub(s0, fpx_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Fpx t2 = fpx_sub(t0, fpx_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!a.empty()) {
    long inv = fp_inv(a.back(), p);
    for (long& c : a) c = c * inv % p;
    for (long& c : s0) c = c * inv % p;
    for (long& c : t0) c = c * inv % p;
  }
  return {a, s0, t0};
}

Fpx fpx_powmod(Fpx base, mpz_class e, const Fpx& mod, long p) {
  Fpx r = {1};
  base = fpx_mod(base, mod, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fpx_mod(fpx_mul(r, base, p), mod, p);
    e >>= 1;
    if (e > 0) base = fpx_mod(fpx_mul(base, base, p), mod, p);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cantor-Zassenhaus over F_p (squarefree monic input).

void fpx_equal_degree(const Fpx& f, int d, long p, Rng& rng, std::vector<Fpx>& out) {
  if (fpx_deg(f) == d) {
    out.push_back(f);
    return;
  }
  Fpx w;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Fpx r(fpx_deg(f), 0);
    for (long& c : r) c = static_cast<long>(rng.next() % static_cast<uint64_t>(p));
    fpx_trim(r);
    if (fpx_deg(r) < 1) continue;
    Fpx m;
    if (p == 2) {
      // trace map splitting
      Fpx acc = fpx_mod(r, f, p), term = acc;
      for (int i = 1; i < d; ++i) {
        term = fpx_mod(fpx_mul(term, term, p), f, p);
        acc = fpx_add(acc, term, p);
      }
      m = acc;
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      m = fpx_sub(fpx_powmod(r, e, f, p), {1}, p);
    }
    w = fpx_gcd(m, f, p);
    if (fpx_deg(w) > 0 && fpx_deg(w) < fpx_deg(f)) {
      fpx_equal_degree(w, d, p, rng, out);
      fpx_equal_degree(fpx_divrem(f, w, p).first, d, p, rng, out);
      return;
    }
  }
  fail(Errc::Internal, "equal-degree splitting did not converge");
}

std::vector<Fpx> fpx_factor_squarefree(Fpx f, long p, Rng& rng) {
  std::vector<Fpx> out;
  f = fpx_monic(f, p);
  Fpx x = {0, 1};
  Fpx h = x;
  int d = 0;
  while (fpx_deg(f) > 0 && 2 * (d + 1) <= fpx_deg(f)) {
    ++d;
    h = fpx_powmod(h, mpz_class(p), f, p);
    Fpx g = fpx_gcd(fpx_sub(h, x, p), f, p);
    if (fpx_deg(g) > 0) {
      fpx_equal_degree(g, d, p, rng, out);
      f = fpx_divrem(f, g, p).first;
      h = fpx_mod(h, f, p);
    }
  }
  if (fpx_deg(f) > 0) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Dense integer/mod-m univariate arithmetic for Hensel lifting.

using Zx = std::vector<mpz_class>;

void zx_trim(Zx& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zx_deg(const Zx& a) { return static_cast<int>(a.size()) - 1; }

Zx zx_mulmod(const Zx& a, const Zx& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  Zx r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
  }
  zx_trim(r);
  return r;
}

Zx zx_addmod(const Zx& a, const Zx& b, const mpz_class& m) {
  Zx r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % m;
  zx_trim(r);
  return r;
}

Zx zx_submod(const Zx& a, const Zx& b, const mpz_class& m) {
  Zx r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % m + m) % m;
  zx_trim(r);
  return r;
}

Zx zx_reduce(const Zx& a, const mpz_class& m) {
  Zx r = a;
  for (mpz_class& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  zx_trim(r);
  return r;
}

// divrem by a monic divisor, mod m
std::pair<Zx, Zx> zx_divrem_monic(const Zx& a, const Zx& b, const mpz_class& m) {
  Zx r = a, q;
  int db = zx_deg(b);
  if (zx_deg(r) >= db) q.assign(zx_deg(r) - db + 1, 0);
  while (zx_deg(r) >= db) {
    int k = zx_deg(r) - db;
    mpz_class c = r.back();
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[k + i] = ((r[k + i] - c * b[i]) % m + m) % m;
    zx_trim(r);
  }
  zx_trim(q);
  return {q, r};
}

struct HenselPair {
  Zx g, h, s, t;
};

// One quadratic step: modulus m -> m^2 (von zur Gathen & Gerhard 15.10).
HenselPair hensel_step(const Zx& f, const HenselPair& in, const mpz_class& m) {
  mpz_class m2 = m * m;
  Zx e = zx_submod(zx_reduce(f, m2), zx_mulmod(in.g, in.h, m2), m2);
  auto [q, r] = zx_divrem_monic(zx_mulmod(in.s, e, m2), in.h, m2);
  Zx g2 = zx_addmod(in.g, zx_addmod(zx_mulmod(in.t, e, m2), zx_mulmod(q, in.g, m2), m2), m2);
  Zx h2 = zx_addmod(in.h, r, m2);
  Zx b = zx_submod(zx_addmod(zx_mulmod(in.s, g2, m2), zx_mulmod(in.t, h2, m2), m2), Zx{1}, m2);
  auto [c, d] = zx_divrem_monic(zx_mulmod(in.s, b, m2), h2, m2);
  Zx s2 = zx_submod(in.s, d, m2);
  Zx t2 = zx_submod(in.t, zx_addmod(zx_mulmod(in.t, b, m2), zx_mulmod(c, g2, m2), m2), m2);
  return {g2, h2, s2, t2};
}

Zx fpx_to_zx(const Fpx& a) {
  Zx r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

// Lift a pairwise-coprime monic factorization of monic f from mod p to mod
// p^k (tree lifting).
std::vector<Zx> hensel_lift(const Zx& f, const std::vector<Fpx>& factors, long p, const mpz_class& pk) {
  if (factors.size() == 1) return {zx_reduce(f, pk)};
  size_t half = factors.size() / 2;
  Fpx g0 = {1}, h0 = {1};
  for (size_t i = 0; i < half; ++i) g0 = fpx_mul(g0, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) h0 = fpx_mul(h0, factors[i], p);
  FpxBezout bez = fpx_ext_gcd(g0, h0, p);
  if (fpx_deg(bez.g) != 0) fail(Errc::Internal, "non-coprime Hensel split");

  HenselPair cur{fpx_to_zx(g0), fpx_to_zx(h0), fpx_to_zx(bez.s), fpx_to_zx(bez.t)};
  mpz_class m(p);
  while (m < pk) {
    cur = hensel_step(zx_reduce(f, m * m), cur, m);
    m = m * m;
  }
  Zx g = zx_reduce(cur.g, pk), h = zx_reduce(cur.h, pk);
  std::vector<Zx> left = hensel_lift(g, std::vector<Fpx>(factors.begin(), factors.begin() + half), p, pk);
  std::vector<Zx> right = hensel_lift(h, std::vector<Fpx>(factors.begin() + half, factors.end()), p, pk);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

// ---------------------------------------------------------------------------
// Conversions Polynomial <-> dense.

Fpx poly_to_fpx(const Polynomial& q, int var) {
  long p = q.field().characteristic();
  Fpx out(static_cast<size_t>(q.degree_in(var)) + 1, 0);
  if (q.is_zero()) return {};
  for (const Term& t : q.terms()) out[t.mono.e[var]] = t.coeff.get_num().get_si();
  fpx_trim(out);
  return out;
}

Polynomial fpx_to_poly(const Fpx& a, int var, FieldSpec f) {
  Polynomial out(f);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out = out + Polynomial::monomial(f, Monomial::var(var, static_cast<int>(i)), Coeff(a[i]));
  return out;
}

Zx poly_to_zx_primitive(const Polynomial& q, int var) {
  Polynomial prim = q.primitive();
  Zx out(static_cast<size_t>(q.degree_in(var)) + 1, 0);
  for (const Term& t : prim.terms()) out[t.mono.e[var]] = t.coeff.get_num();
  zx_trim(out);
  return out;
}

Polynomial zx_to_poly(const Zx& a, int var, FieldSpec f) {
  Polynomial out(f);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out = out + Polynomial::monomial(f, Monomial::var(var, static_cast<int>(i)), Coeff(a[i]));
  return out;
}

void check_univariate(const Polynomial& p, int var) {
  for (const Term& t : p.terms())
    for (int v = 0; v < kMaxVars; ++v)
      if (v != var && t.mono.e[v] != 0) fail(Errc::Internal, "polynomial is not univariate");
}

// ---------------------------------------------------------------------------
// Zassenhaus over Q.

Zx zx_balanced(const Zx& a, const mpz_class& m) {
  Zx r = zx_reduce(a, m);
  mpz_class half = m / 2;
  for (mpz_class& c : r)
    if (c > half) c -= m;
  return r;
}

bool zx_divides(const Zx& f, const Zx& g) {
  // exact division test over Z; g need not be monic, f = q*g checked directly
  if (g.empty()) return f.empty();
  Zx r = f, q;
  int dg = zx_deg(g);
  while (zx_deg(r) >= dg) {
    if (r.back() % g.back() != 0) return false;
    mpz_class c = r.back() / g.back();
    int k = zx_deg(r) - dg;
    for (int i = 0; i <= dg; ++i) r[k + i] -= c * g[i];
    zx_trim(r);
  }
  return r.empty();
}

Zx zx_quotient(const Zx& f, const Zx& g) {
  Zx r = f, q(zx_deg(f) - zx_deg(g) + 1, 0);
  int dg = zx_deg(g);
  while (zx_deg(r) >= dg) {
    mpz_class c = r.back() / g.back();
    int k = zx_deg(r) - dg;
    q[k] = c;
    for (int i = 0; i <= dg; ++i) r[k + i] -= c * g[i];
    zx_trim(r);
  }
  zx_trim(q);
  return q;
}

void zx_make_primitive(Zx& a) {
  mpz_class g = 0;
  for (const mpz_class& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return;
  if (a.back() < 0) g = -g;
  for (mpz_class& c : a) c /= g;
}

std::vector<Polynomial> factor_rationals(const Polynomial& input, int var, Rng& rng) {
  const FieldSpec f = input.field();
  Zx e = poly_to_zx_primitive(input, var);
  int n = zx_deg(e);
  if (n <= 1) return {input.monic(canonical_order())};

  // monic transform: coefficient of x^i in lc^(n-1) * e(x/lc) is e_i * lc^(n-1-i)
  mpz_class lc = e.back();  // positive, e is primitive
  Zx estar(e.size());
  for (int i = 0; i < n; ++i) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
    estar[i] = e[i] * pw;
  }
  estar[n] = 1;

  // prime selection: first few odd primes with squarefree full-degree reduction
  std::vector<long> primes;
  for (long cand = 101; primes.size() < 4 && cand < 100000; cand += 2) {
    bool isp = cand > 1;
    for (long d = 3; d * d <= cand && isp; d += 2)
      if (cand % d == 0) isp = false;
    if (!isp) continue;
    if (lc % cand == 0) continue;
    Fpx fe(estar.size());
    for (size_t i = 0; i < estar.size(); ++i) {
      mpz_class c = estar[i] % cand;
      if (c < 0) c += cand;
      fe[i] = c.get_si();
    }
    fpx_trim(fe);
    if (fpx_deg(fe) != n) continue;
    Fpx der(fe.size() - 1);
    for (int i = 1; i <= fpx_deg(fe); ++i) der[i - 1] = (fe[i] * (i % cand)) % cand;
    fpx_trim(der);
    Fpx g = fpx_gcd(fe, der, cand);
    if (fpx_deg(g) != 0) continue;
    primes.push_back(cand);
  }
  if (primes.empty()) fail(Errc::Internal, "no good prime for rational factorization");

  long best_p = 0;
  std::vector<Fpx> best_factors;
  for (long p : primes) {
    Fpx fe(estar.size());
    for (size_t i = 0; i < estar.size(); ++i) {
      mpz_class c = estar[i] % p;
      if (c < 0) c += p;
      fe[i] = c.get_si();
    }
    Rng local = rng;  // same stream per prime keeps the run deterministic
    std::vector<Fpx> fs = fpx_factor_squarefree(fe, p, local);
    if (best_p == 0 || fs.size() < best_factors.size()) {
      best_p = p;
      best_factors = fs;
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() == 1) return {input.monic(canonical_order())};
  std::sort(best_factors.begin(), best_factors.end());

  // Mignotte-style bound on factor coefficients of estar
  mpz_class norm = 0;
  for (const mpz_class& c : estar) norm = std::max(norm, mpz_class(abs(c)));
  mpz_class bound = norm * (n + 1);
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  bound *= two_n;
  mpz_class pk(best_p);
  while (pk < 2 * bound + 1) pk *= best_p;

  std::vector<Zx> lifted = hensel_lift(zx_reduce(estar, pk), best_factors, best_p, pk);

  // recombination
  std::vector<Zx> found;
  std::vector<int> remaining(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) remaining[i] = static_cast<int>(i);
  Zx current = estar;
  size_t card = 1;
  while (2 * card <= remaining.size()) {
    bool hit = false;
    std::vector<int> pick(card);
    // iterate subsets of `remaining` of size `card` in index order
    std::vector<size_t> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = i;
    for (;;) {
      Zx cand = {1};
      for (size_t i = 0; i < card; ++i) cand = zx_mulmod(cand, lifted[remaining[idx[i]]], pk);
      cand = zx_balanced(cand, pk);
      if (zx_divides(current, cand)) {
        current = zx_quotient(current, cand);
        found.push_back(cand);
        std::vector<int> keep;
        for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
          if (j < card && idx[j] == i) {
            ++j;
            continue;
          }
          keep.push_back(remaining[i]);
        }
        remaining = keep;
        hit = true;
        break;
      }
      // next combination
      size_t i = card;
      while (i > 0 && idx[i - 1] == remaining.size() - card + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++card;
  }
  if (zx_deg(current) > 0) found.push_back(current);

  // transform back: G(x) = primitive part of Gstar(lc * x), then monic over Q
  std::vector<Polynomial> out;
  for (Zx& gs : found) {
    Zx g(gs.size());
    mpz_class pw = 1;
    for (size_t i = 0; i < gs.size(); ++i) {
      g[i] = gs[i] * pw;
      pw *= lc;
    }
    zx_make_primitive(g);
    out.push_back(zx_to_poly(g, var, f).monic(canonical_order()));
  }
  std::sort(out.begin(), out.end(), Polynomial::canonical_less);
  return out;
}

}  // namespace

Polynomial squarefree_part(const Polynomial& p, int var) {
  check_univariate(p, var);
  if (p.is_zero() || p.degree_in(var) == 0) return p;
  Polynomial d = p.differentiate(var);
  if (d.is_zero()) {
    // char p with all exponents divisible by p: take the p-th root and recurse
    long ch = p.field().characteristic();
    Polynomial root(p.field());
    for (const Term& t : p.terms()) {
      Monomial m = t.mono;
      m.e[var] = static_cast<uint16_t>(m.e[var] / ch);
      root = root + Polynomial::monomial(p.field(), m, t.coeff);  // c^(1/p) = c over F_p
    }
    return squarefree_part(root, var);
  }
  Polynomial g = gcd(p, d);
  return try_divide(p, g).value().monic(canonical_order());
}

std::vector<Polynomial> factor_univariate_squarefree(const Polynomial& p, int var, Rng& rng) {
  check_univariate(p, var);
  if (p.is_zero() || p.degree_in(var) == 0) return {};
  if (p.degree_in(var) == 1) return {p.monic(canonical_order())};
  if (p.field().kind() == FieldKind::Rationals) return factor_rationals(p, var, rng);

  long ch = p.field().characteristic();
  if (ch <= 3) {
    // tiny fields: deterministic trial division over all monic divisors
    Fpx f = poly_to_fpx(p, var);
    f = fpx_monic(f, ch);
    std::vector<Fpx> out;
    bool split = true;
    while (split && fpx_deg(f) > 1) {
      split = false;
      for (int d = 1; !split && 2 * d <= fpx_deg(f); ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= ch;
        for (long code = 0; code < count && !split; ++code) {
          Fpx cand(static_cast<size_t>(d) + 1, 0);
          long c = code;
          for (int i = 0; i < d; ++i) {
            cand[i] = c % ch;
            c /= ch;
          }
          cand[d] = 1;
          auto [q, r] = fpx_divrem(f, cand, ch);
          if (r.empty()) {
            out.push_back(cand);
            f = q;
            split = true;
          }
        }
      }
    }
    if (fpx_deg(f) > 0) out.push_back(f);
    std::vector<Polynomial> res;
    for (const Fpx& g : out) res.push_back(fpx_to_poly(g, var, p.field()));
    std::sort(res.begin(), res.end(), Polynomial::canonical_less);
    return res;
  }

  std::vector<Fpx> fs = fpx_factor_squarefree(poly_to_fpx(p, var), ch, rng);
  std::vector<Polynomial> out;
  for (const Fpx& g : fs) out.push_back(fpx_to_poly(g, var, p.field()));
  std::sort(out.begin(), out.end(), Polynomial::canonical_less);
  return out;
}

bool univariate_irreducible_fp(const Polynomial& p, int var) {
  check_univariate(p, var);
  long ch = p.field().characteristic();
  if (ch == 0) fail(Errc::Internal, "irreducibility test needs a prime field");
  Fpx f = fpx_monic(poly_to_fpx(p, var), ch);
  int n = fpx_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  Fpx x = {0, 1};
  // Rabin: x^(p^n) = x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(ch), static_cast<unsigned long>(n));
  Fpx xp = fpx_powmod(x, pn, f, ch);
  if (fpx_sub(xp, x, ch) != Fpx{}) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool isp = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) isp = false;
    if (!isp) continue;
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(ch), static_cast<unsigned long>(n / r));
    Fpx g = fpx_gcd(fpx_sub(fpx_powmod(x, e, f, ch), x, ch), f, ch);
    if (fpx_deg(g) != 0) return false;
  }
  return true;
}

std::vector<Coeff> univariate_roots_fp(const Polynomial& p, int var, Rng& rng) {
  check_univariate(p, var);
  long ch = p.field().characteristic();
  if (ch == 0) fail(Errc::Internal, "root extraction needs a prime field");
  Fpx f = fpx_monic(poly_to_fpx(p, var), ch);
  if (fpx_deg(f) < 1) return {};
  Fpx x = {0, 1};
  Fpx xp = fpx_powmod(x, mpz_class(ch), f, ch);
  Fpx lin = fpx_gcd(fpx_sub(xp, x, ch), f, ch);
  if (fpx_deg(lin) < 1) return {};
  std::vector<Fpx> linear;
  fpx_equal_degree(lin, 1, ch, rng, linear);
  std::vector<long> roots;
  for (const Fpx& l : linear) roots.push_back((ch - l[0]) % ch);
  std::sort(roots.begin(), roots.end());
  std::vector<Coeff> out;
  for (long r : roots) out.push_back(Coeff(r));
  return out;
}

}  // namespace tjurina
