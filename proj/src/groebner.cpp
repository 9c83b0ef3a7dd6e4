#include <algorithm>
#include <set>
#include <sstream>

#include "tjurina/ideal.hpp"

namespace tjurina {

namespace {

// Normalization used while computing: primitive integer coefficients over Q
// (keeps bit growth in check), monic over a prime field.
Polynomial work_normal(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.field().kind() == FieldKind::Rationals) return p.primitive();
  return p.monic(canonical_order());
}

struct Reducer {
  const std::vector<Polynomial>* basis;
  const TermOrder* order;

  // Full normal form. Over Q the loop is fraction-free: the pair (g, r) is
  // scaled by reducer leading coefficients and the scale divided out at the
  // end.
  Polynomial operator()(const Polynomial& p) const {
    const FieldSpec& f = p.field();
    Polynomial g = p;
    Polynomial r(f);
    Coeff scale = f.one();
    int steps = 0;
    while (!g.is_zero()) {
      const Term& lt = g.leading_term(*order);
      const Polynomial* red = nullptr;
      for (const Polynomial& b : *basis) {
        if (!b.is_zero() && b.leading_term(*order).mono.divides(lt.mono)) {
          red = &b;
          break;
        }
      }
      if (red == nullptr) {
        r = r + Polynomial::monomial(f, lt.mono, lt.coeff);
        g = g - Polynomial::monomial(f, lt.mono, lt.coeff);
        continue;
      }
      const Term& blt = red->leading_term(*order);
      Monomial m = lt.mono / blt.mono;
      if (f.kind() == FieldKind::Rationals) {
        g = g.scaled(blt.coeff) - red->term_multiple(m, lt.coeff);
        r = r.scaled(blt.coeff);
        scale = f.mul(scale, blt.coeff);
        if (++steps % 8 == 0 && !g.is_zero()) {
          // strip shared integer content to keep numbers small
          Coeff c = g.content();
          if (!r.is_zero()) {
            Coeff cr = r.content();
            mpz_class gg;
            mpz_gcd(gg.get_mpz_t(), c.get_num().get_mpz_t(), cr.get_num().get_mpz_t());
            c = Coeff(gg);
          }
          if (c != 0 && c != 1 && scale.get_den() == 1 && scale.get_num() % c.get_num() == 0) {
            g = g.scaled(f.inv(c));
            r = r.scaled(f.inv(c));
            scale = f.div(scale, c);
          }
        }
      } else {
        g = g - red->term_multiple(m, f.div(lt.coeff, blt.coeff));
      }
    }
    if (scale != 1) r = r.scaled(f.inv(scale));
    return r;
  }
};

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

struct PairLess {
  const TermOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = order->cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

Polynomial reduce_modulo(const Polynomial& p, const std::vector<Polynomial>& basis,
                         const TermOrder& order) {
  return Reducer{&basis, &order}(p);
}

std::vector<Polynomial> buchberger(const FieldSpec& field, std::vector<Polynomial> gens,
                                   const TermOrder& order) {
  std::vector<Polynomial> g;
  for (Polynomial& p : gens)
    if (!p.is_zero()) g.push_back(work_normal(p));
  if (g.empty()) return g;

  Reducer reduce{&g, &order};

  std::set<Pair, PairLess> queue(PairLess{&order});
  std::set<std::pair<int, int>> treated;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Pair pr;
      pr.i = i;
      pr.j = j;
      pr.lcm = Monomial::lcm(g[i].leading_term(order).mono, g[j].leading_term(order).mono);
      pr.deg = pr.lcm.degree();
      queue.insert(pr);
    }
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({pr.i, pr.j});

    const Monomial& mi = g[pr.i].leading_term(order).mono;
    const Monomial& mj = g[pr.j].leading_term(order).mono;
    // product criterion
    if (mi * mj == pr.lcm) continue;
    // chain criterion
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leading_term(order).mono.divides(pr.lcm)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) skip = true;
    }
    if (skip) continue;

    const Term& li = g[pr.i].leading_term(order);
    const Term& lj = g[pr.j].leading_term(order);
    Polynomial s = g[pr.i].term_multiple(pr.lcm / li.mono, lj.coeff) -
                   g[pr.j].term_multiple(pr.lcm / lj.mono, li.coeff);
    Polynomial nf = reduce(s);
    if (nf.is_zero()) continue;
    g.push_back(work_normal(nf));
    push_pairs(static_cast<int>(g.size()) - 1);
  }

  // minimalize: drop elements whose leading term another element divides
  std::vector<bool> dead(g.size(), false);
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = 0; j < g.size() && !dead[i]; ++j) {
      if (i == j || dead[j]) continue;
      const Monomial& a = g[j].leading_term(order).mono;
      const Monomial& b = g[i].leading_term(order).mono;
      if (a.divides(b) && !(a == b && j > i)) dead[i] = true;
    }
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i)
    if (!dead[i]) minimal.push_back(g[i]);

  // tail-reduce each element against the others
  std::vector<Polynomial> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = work_normal(reduce_modulo(reduced[i], others, order));
  }

  for (Polynomial& p : reduced) p = p.monic(order);
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_term(order).mono, b.leading_term(order).mono);
  });
  return reduced;
}

std::string diagnostic_dump(const GroebnerBasis& gb) {
  std::ostringstream os;
  for (size_t i = 0; i < gb.polys.size(); ++i) os << "g" << i << " = " << gb.polys[i].to_string() << "\n";
  return os.str();
}

// --- Ideal -----------------------------------------------------------------

Ideal::Ideal(FieldSpec field, int nvars, std::vector<Polynomial> gens, bool saturated)
    : field_(field), nvars_(nvars), saturated_(saturated) {
  for (Polynomial& p : gens) {
    if (p.is_zero()) continue;
    if (p.field() != field_) fail(Errc::FieldMismatch, "generator field mismatch");
    if (p.var_span() > nvars_) fail(Errc::UnknownVariable, "generator uses a variable outside the ring");
    gens_.push_back(std::move(p));
  }
  homogeneous_ = true;
  for (const Polynomial& p : gens_)
    if (!p.is_homogeneous()) homogeneous_ = false;
}

const GroebnerBasis& Ideal::groebner(const TermOrder& order) const {
  auto it = cache_.find(order.key());
  if (it != cache_.end()) return it->second;
  GroebnerBasis gb{buchberger(field_, gens_, order), order};
  return cache_.emplace(order.key(), std::move(gb)).first->second;
}

Polynomial Ideal::normal_form(const Polynomial& p, const TermOrder& order) const {
  if (gens_.empty()) return p;
  return reduce_modulo(p, groebner(order).polys, order);
}

bool Ideal::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(p, TermOrder::grevlex(kMaxVars)).is_zero();
}

}  // namespace tjurina
