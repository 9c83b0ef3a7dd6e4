#include <algorithm>
#include <functional>
#include <map>

#include "tjurina/ideal.hpp"
#include "tjurina/linalg.hpp"
#include "tjurina/univariate.hpp"

namespace tjurina {

namespace {

const TermOrder& grv() {
  static const TermOrder o = TermOrder::grevlex(kMaxVars);
  return o;
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  Monomial m;
  // lexicographic enumeration over exponent tuples summing to deg
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      m.e[var] = static_cast<uint16_t>(left);
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[var] = static_cast<uint16_t>(k);
      rec(var + 1, left - k);
    }
    m.e[var] = 0;
  };
  rec(0, deg);
  return out;
}

std::vector<Monomial> monomials_up_to(int nvars, int deg) {
  std::vector<Monomial> out;
  for (int d = 0; d <= deg; ++d) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool lt_contains_constant(const std::vector<Polynomial>& gb) {
  return !gb.empty() && gb.front().is_constant() && !gb.front().is_zero();
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& gb, const TermOrder& order) {
  std::vector<Monomial> out;
  for (const Polynomial& g : gb) out.push_back(g.leading_term(order).mono);
  return out;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts) {
  for (const Monomial& l : lts)
    if (l.divides(m)) return true;
  return false;
}

}  // namespace

Ideal irrelevant_ideal(FieldSpec field) {
  return Ideal(field, 3,
               {Polynomial::variable(field, 0), Polynomial::variable(field, 1),
                Polynomial::variable(field, 2)});
}

static bool is_irrelevant_ideal(const Ideal& j) {
  if (j.nvars() != 3 || j.gens().size() != 3) return false;
  bool seen[3] = {false, false, false};
  for (const Polynomial& g : j.gens()) {
    if (g.term_count() != 1) return false;
    const Monomial& m = g.terms()[0].mono;
    if (m.degree() != 1) return false;
    for (int v = 0; v < 3; ++v)
      if (m.e[v] == 1) seen[v] = true;
  }
  return seen[0] && seen[1] && seen[2];
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "intersect over different fields");
  if (a.is_zero_ideal()) return a;
  if (b.is_zero_ideal()) return b;
  const FieldSpec& f = a.field();
  int nvars = std::max(a.nvars(), b.nvars());
  Polynomial t = Polynomial::variable(f, 3);
  Polynomial one_minus_t = Polynomial::constant(f, f.one()) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.gens()) gens.push_back(t * g);
  for (const Polynomial& g : b.gens()) gens.push_back(one_minus_t * g);
  std::vector<Polynomial> basis = buchberger(f, gens, TermOrder::elim_aux(kMaxVars));
  std::vector<Polynomial> out;
  for (Polynomial& g : basis)
    if (!g.uses_var(3)) out.push_back(std::move(g));
  return Ideal(f, nvars, out);
}

static Ideal quotient_by_poly(const Ideal& i, const Polynomial& f) {
  if (i.is_zero_ideal()) return i;
  if (f.is_constant()) return Ideal(i.field(), i.nvars(), {Polynomial::constant(i.field(), i.field().one())});
  Ideal inter = intersect(i, Ideal(i.field(), i.nvars(), {f}));
  std::vector<Polynomial> out;
  for (const Polynomial& g : inter.gens()) {
    auto q = try_divide(g, f);
    if (!q) fail(Errc::Internal, "inexact division in ideal quotient");
    out.push_back(std::move(*q));
  }
  return Ideal(i.field(), i.nvars(), out);
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  if (i.field() != j.field()) fail(Errc::FieldMismatch, "quotient over different fields");
  if (j.is_zero_ideal())
    return Ideal(i.field(), i.nvars(), {Polynomial::constant(i.field(), i.field().one())});
  Ideal acc = quotient_by_poly(i, j.gens()[0]);
  for (size_t k = 1; k < j.gens().size(); ++k) {
    if (lt_contains_constant(acc.gens()) && acc.gens().size() == 1) {
      // already the whole ring; intersecting cannot grow it
    }
    acc = intersect(acc, quotient_by_poly(i, j.gens()[k]));
  }
  return acc;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  for (const Polynomial& g : a.gens())
    if (!b.contains(g)) return false;
  for (const Polynomial& g : b.gens())
    if (!a.contains(g)) return false;
  return true;
}

// Bayer's observation: for homogeneous I and grevlex with v least, dividing
// each reduced-basis element by its v-power content generates (I : v^inf).
static Ideal saturate_by_variable(const Ideal& i, int v) {
  const GroebnerBasis& gb = i.groebner(TermOrder::grevlex_last(3, v));
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.polys) {
    int k = 1 << 14;
    for (const Term& t : g.terms()) k = std::min(k, static_cast<int>(t.mono.e[v]));
    if (k == 0) {
      out.push_back(g);
      continue;
    }
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      Monomial m = t.mono;
      m.e[v] = static_cast<uint16_t>(m.e[v] - k);
      terms.push_back({m, t.coeff});
    }
    out.push_back(polynomial_from_terms(g.field(), std::move(terms)));
  }
  return Ideal(i.field(), i.nvars(), out);
}

Ideal saturate(const Ideal& i, const Ideal& j) {
  if (i.is_zero_ideal()) return Ideal(i.field(), i.nvars(), {}, true);

  if (is_irrelevant_ideal(j) && i.nvars() == 3 && i.homogeneous()) {
    Ideal sx = saturate_by_variable(i, 0);
    Ideal sy = saturate_by_variable(i, 1);
    Ideal sz = saturate_by_variable(i, 2);
    if (ideal_equal(sx, i) && ideal_equal(sy, i) && ideal_equal(sz, i))
      return Ideal(i.field(), 3, i.gens(), true);
    Ideal r = intersect(intersect(sx, sy), sz);
    return Ideal(i.field(), 3, r.gens(), true);
  }

  Ideal cur = i;
  for (int round = 0; round < 50; ++round) {
    Ideal next = ideal_quotient(cur, j);
    if (ideal_equal(next, cur))
      return Ideal(i.field(), i.nvars(), cur.gens(), is_irrelevant_ideal(j) || i.saturated());
    cur = std::move(next);
  }
  fail(Errc::SaturationCapExceeded, "saturation did not stabilize within 50 quotients");
}

int krull_dimension(const Ideal& i) {
  if (i.is_zero_ideal()) return i.nvars();
  const GroebnerBasis& gb = i.groebner(grv());
  if (lt_contains_constant(gb.polys)) return -1;
  std::vector<Monomial> lts = leading_monomials(gb.polys, grv());
  int n = i.nvars();
  int best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    // S = variables in mask; admissible if no leading monomial is supported in S
    bool ok = true;
    for (const Monomial& m : lts) {
      bool inside = true;
      for (int v = 0; v < n && inside; ++v)
        if (m.e[v] > 0 && !(mask & (1 << v))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
  }
  return best;
}

static long count_standard_of_degree(const std::vector<Monomial>& lts, int nvars, int deg) {
  long c = 0;
  for (const Monomial& m : monomials_of_degree(nvars, deg))
    if (!divisible_by_any(m, lts)) ++c;
  return c;
}

std::optional<long> colength(const Ideal& i) {
  if (i.is_zero_ideal()) return std::nullopt;

  if (i.projective()) {
    if (!i.saturated()) return colength(saturate(i, irrelevant_ideal(i.field())));
    const GroebnerBasis& gb = i.groebner(grv());
    if (lt_contains_constant(gb.polys)) return 0;
    int dim = krull_dimension(i);
    if (dim > 1) return std::nullopt;
    if (dim <= 0) return 0;
    std::vector<Monomial> lts = leading_monomials(gb.polys, grv());
    long prev = -1;
    for (int t = 0; t < 512; ++t) {
      long h = count_standard_of_degree(lts, 3, t);
      if (h == prev) return h;
      prev = h;
    }
    fail(Errc::Internal, "Hilbert function failed to stabilize");
  }

  const GroebnerBasis& gb = i.groebner(grv());
  if (lt_contains_constant(gb.polys)) return 0;
  std::vector<Monomial> lts = leading_monomials(gb.polys, grv());
  int n = i.nvars();
  std::array<int, kMaxVars> box{};
  for (int v = 0; v < n; ++v) {
    int bound = -1;
    for (const Monomial& m : lts) {
      bool pure = m.e[v] > 0;
      for (int w = 0; w < kMaxVars && pure; ++w)
        if (w != v && m.e[w] > 0) pure = false;
      if (pure) bound = bound < 0 ? m.e[v] : std::min(bound, static_cast<int>(m.e[v]));
    }
    if (bound < 0) return std::nullopt;  // no pure power: not zero-dimensional
    box[v] = bound;
  }
  long count = 0;
  Monomial m;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      if (!divisible_by_any(m, lts)) ++count;
      return;
    }
    for (int k = 0; k < box[v]; ++k) {
      m.e[v] = static_cast<uint16_t>(k);
      rec(v + 1);
    }
    m.e[v] = 0;
  };
  rec(0);
  return count;
}

HilbertTable hilbert_function(const Ideal& i, int up_to) {
  HilbertTable table;
  table.saturated_input = i.saturated();
  std::vector<Monomial> lts;
  bool whole_ring = false;
  if (!i.is_zero_ideal()) {
    const GroebnerBasis& gb = i.groebner(grv());
    whole_ring = lt_contains_constant(gb.polys);
    lts = leading_monomials(gb.polys, grv());
  }
  int n = i.nvars();
  for (int t = 0; t <= up_to; ++t)
    table.values.push_back(whole_ring ? 0 : count_standard_of_degree(lts, n, t));
  if (!i.is_zero_ideal() && krull_dimension(i) <= 1) {
    for (size_t t = 0; t + 1 < table.values.size(); ++t) {
      if (table.values[t] == table.values[t + 1]) {
        table.stabilized = true;
        table.stable_value = table.values[t];
        break;
      }
    }
  }
  return table;
}

int scheme_regularity(const Ideal& saturated_ideal, long scheme_degree) {
  if (scheme_degree == 0) return 0;
  HilbertTable table = hilbert_function(saturated_ideal, static_cast<int>(scheme_degree) + 1);
  for (size_t t = 0; t < table.values.size(); ++t)
    if (table.values[t] == scheme_degree) return static_cast<int>(t) + 1;
  fail(Errc::Internal, "Hilbert function never reached the scheme degree");
}

Polynomial eliminate(const Ideal& i, int keep_var) {
  std::optional<long> len = colength(i);
  if (!len || i.projective()) fail(Errc::NotZeroDimensional, "eliminate needs a zero-dimensional affine ideal");
  if (*len == 0) return Polynomial::constant(i.field(), i.field().one());
  std::array<uint8_t, kMaxVars> perm{};
  int w = 0;
  for (int v = 0; v < kMaxVars; ++v)
    if (v != keep_var && v < i.nvars()) perm[w++] = static_cast<uint8_t>(v);
  perm[w++] = static_cast<uint8_t>(keep_var);
  for (int v = 0; v < kMaxVars; ++v)
    if (v >= i.nvars() && v != keep_var) perm[w++] = static_cast<uint8_t>(v);
  const GroebnerBasis& gb = i.groebner(TermOrder::lex(perm, i.nvars()));
  for (const Polynomial& g : gb.polys) {
    bool pure = true;
    for (const Term& t : g.terms())
      for (int v = 0; v < kMaxVars && pure; ++v)
        if (v != keep_var && t.mono.e[v] > 0) pure = false;
    if (pure) return g;  // already monic in the reduced basis
  }
  fail(Errc::Internal, "elimination ideal has no univariate generator");
}

static long macaulay_value_affine(const Ideal& i, int bound) {
  auto mons = monomials_up_to(i.nvars(), bound);
  std::map<std::string, size_t> index;
  auto keyof = [](const Monomial& m) {
    return std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "," + std::to_string(m.e[2]);
  };
  for (size_t k = 0; k < mons.size(); ++k) index[keyof(mons[k])] = k;
  std::vector<std::vector<Coeff>> rows;
  for (const Polynomial& g : i.gens()) {
    int dg = g.degree();
    for (const Monomial& m : monomials_up_to(i.nvars(), bound - dg)) {
      std::vector<Coeff> row(mons.size(), i.field().zero());
      for (const Term& t : g.terms()) row[index.at(keyof(t.mono * m))] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  LinearSystem sys(i.field(), rows.size(), mons.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < mons.size(); ++c) sys.at(r, c) = rows[r][c];
  return static_cast<long>(mons.size()) - sys.rank();
}

static long macaulay_value_degree(const Ideal& i, int deg) {
  auto mons = monomials_of_degree(i.nvars(), deg);
  std::map<std::string, size_t> index;
  auto keyof = [](const Monomial& m) {
    return std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "," + std::to_string(m.e[2]);
  };
  for (size_t k = 0; k < mons.size(); ++k) index[keyof(mons[k])] = k;
  std::vector<std::vector<Coeff>> rows;
  for (const Polynomial& g : i.gens()) {
    int dg = g.degree();
    if (dg > deg) continue;
    for (const Monomial& m : monomials_of_degree(i.nvars(), deg - dg)) {
      std::vector<Coeff> row(mons.size(), i.field().zero());
      for (const Term& t : g.terms()) row[index.at(keyof(t.mono * m))] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  LinearSystem sys(i.field(), rows.size(), mons.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < mons.size(); ++c) sys.at(r, c) = rows[r][c];
  return static_cast<long>(mons.size()) - sys.rank();
}

long oracle_colength(const Ideal& i, int degree_bound) {
  if (degree_bound < 1) fail(Errc::NotStabilized, "degree bound too small");
  if (i.projective()) {
    long a = macaulay_value_degree(i, degree_bound - 1);
    long b = macaulay_value_degree(i, degree_bound);
    if (a != b) fail(Errc::NotStabilized, "Macaulay count not stabilized; raise the bound");
    return b;
  }
  long a = macaulay_value_affine(i, degree_bound - 1);
  long b = macaulay_value_affine(i, degree_bound);
  if (a != b) fail(Errc::NotStabilized, "Macaulay count not stabilized; raise the bound");
  return b;
}

Ideal radical_zero_dimensional(const Ideal& i) {
  std::vector<Polynomial> gens = i.gens();
  for (int v = 0; v < i.nvars(); ++v) {
    Polynomial e = eliminate(i, v);
    if (e.is_constant()) continue;
    gens.push_back(squarefree_part(e, v));
  }
  return Ideal(i.field(), i.nvars(), gens);
}

}  // namespace tjurina
