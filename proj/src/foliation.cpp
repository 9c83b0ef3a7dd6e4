#include "tjurina/foliation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tjurina/linalg.hpp"

namespace tjurina {

namespace {

std::vector<Monomial> degree_monomials(int nvars, int deg) {
  std::vector<Monomial> out;
  Monomial m;
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

Polynomial euler_contraction(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  const FieldSpec& f = a.field();
  return Polynomial::variable(f, 0) * a + Polynomial::variable(f, 1) * b +
         Polynomial::variable(f, 2) * c;
}

Polynomial gcd3(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  return gcd(gcd(a, b), c);
}

}  // namespace

ProjectiveOneForm ProjectiveOneForm::from(Polynomial a, Polynomial b, Polynomial c) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) fail(Errc::AllZero, "zero 1-form");
  int k = -1;
  for (const Polynomial* p : {&a, &b, &c}) {
    if (p->is_zero()) continue;
    if (!p->is_homogeneous()) fail(Errc::DegreeMismatch, "1-form coefficients must be homogeneous");
    if (k < 0) k = p->degree();
    if (p->degree() != k) fail(Errc::DegreeMismatch, "1-form coefficients must share one degree");
  }
  if (!euler_contraction(a, b, c).is_zero())
    fail(Errc::EulerViolated, "Euler contraction x*A + y*B + z*C must vanish");
  return ProjectiveOneForm{std::move(a), std::move(b), std::move(c)};
}

int ProjectiveOneForm::coefficient_degree() const {
  return std::max({a.degree(), b.degree(), c.degree()});
}

ProjectiveOneForm ProjectiveOneForm::change_coordinates(
    const std::array<std::array<Coeff, 3>, 3>& m) const {
  const FieldSpec& f = field();
  std::array<Polynomial, kMaxVars> images = {Polynomial::zero(f), Polynomial::zero(f),
                                             Polynomial::zero(f), Polynomial::variable(f, 3)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) images[i] = images[i] + Polynomial::variable(f, j).scaled(m[i][j]);
  std::array<Polynomial, 3> comps = {a.substitute(images), b.substitute(images),
                                     c.substitute(images)};
  std::array<Polynomial, 3> out = {Polynomial::zero(f), Polynomial::zero(f), Polynomial::zero(f)};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) out[j] = out[j] + comps[i].scaled(m[i][j]);
  return ProjectiveOneForm::from(out[0], out[1], out[2]);
}

ProjectiveOneForm one_form_of_vector_triple(const Polynomial& p, const Polynomial& q,
                                            const Polynomial& r) {
  const FieldSpec& f = p.field();
  Polynomial x = Polynomial::variable(f, 0), y = Polynomial::variable(f, 1),
             z = Polynomial::variable(f, 2);
  return ProjectiveOneForm::from(q * z - r * y, r * x - p * z, p * y - q * x);
}

Foliation make_foliation(Polynomial a, Polynomial b, Polynomial c) {
  ProjectiveOneForm form = ProjectiveOneForm::from(std::move(a), std::move(b), std::move(c));
  Polynomial g = gcd3(form.a, form.b, form.c);
  if (!g.is_constant()) {
    form = ProjectiveOneForm::from(try_divide(form.a, g).value_or(Polynomial::zero(g.field())),
                                   try_divide(form.b, g).value_or(Polynomial::zero(g.field())),
                                   try_divide(form.c, g).value_or(Polynomial::zero(g.field())));
  }
  int m = form.coefficient_degree() - 1;
  Ideal raw(form.field(), 3, {form.a, form.b, form.c});
  Ideal sat = saturate(raw, irrelevant_ideal(form.field()));
  std::optional<long> deg_s = colength(sat);
  if (!deg_s) fail(Errc::Internal, "saturated foliation has an infinite singular scheme");
  if (*deg_s != static_cast<long>(m) * m + m + 1)
    fail(Errc::Internal, "singular scheme degree does not match m^2+m+1");
  return Foliation{std::move(form), m, std::move(sat), *deg_s};
}

FoliationRegularity foliation_regularity(const Foliation& fol) {
  FoliationRegularity out;
  out.value = scheme_regularity(fol.singular_ideal, fol.deg_s);
  out.in_scope = fol.degree > 0;
  return out;
}

LeafCheckResult leaf_check(const PlaneCurve& curve, const ProjectiveOneForm& form) {
  if (!is_reduced(curve)) fail(Errc::NotReduced, "leaf test needs a reduced curve");
  const FieldSpec& f = curve.field();
  Polynomial fx = curve.F.differentiate(0), fy = curve.F.differentiate(1),
             fz = curve.F.differentiate(2);
  std::vector<Polynomial> fbasis = {curve.F};
  const TermOrder& ord = canonical_order();
  LeafCheckResult out{false, false,
                      {reduce_modulo(form.a * fy - form.b * fx, fbasis, ord),
                       reduce_modulo(form.b * fz - form.c * fy, fbasis, ord),
                       reduce_modulo(form.c * fx - form.a * fz, fbasis, ord)}};
  bool factors = out.tangency_remainders[0].is_zero() && out.tangency_remainders[1].is_zero() &&
                 out.tangency_remainders[2].is_zero();
  bool no_component_in_s = gcd(gcd3(form.a, form.b, form.c), curve.F).is_constant();
  out.is_leaf = factors && no_component_in_s;
  out.factors_through_only = factors && !out.is_leaf;
  (void)f;
  return out;
}

LeafCheckResult leaf_check(const PlaneCurve& curve, const Foliation& fol) {
  return leaf_check(curve, fol.form);
}

int tangency_degree_check(const Foliation& fol, uint64_t seed) {
  const FieldSpec& f = fol.form.field();
  Rng rng = Rng::derived(seed, "tangency-line");
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::array<Coeff, 3> u, v;
    for (int i = 0; i < 3; ++i) {
      u[i] = f.kind() == FieldKind::Rationals ? Coeff(rng.uniform(-9, 9))
                                              : f.from_long(rng.uniform(0, f.characteristic() - 1));
      v[i] = f.kind() == FieldKind::Rationals ? Coeff(rng.uniform(-9, 9))
                                              : f.from_long(rng.uniform(0, f.characteristic() - 1));
    }
    // parameterize the line s*u + t*v with (x,y) as (s,t)
    std::array<Polynomial, kMaxVars> images = {Polynomial::zero(f), Polynomial::zero(f),
                                               Polynomial::zero(f), Polynomial::zero(f)};
    for (int i = 0; i < 3; ++i)
      images[i] = Polynomial::variable(f, 0).scaled(u[i]) + Polynomial::variable(f, 1).scaled(v[i]);
    // restriction of the form against the direction u has a forced zero at
    // (s,t) = (1,0); the cofactor is the degeneracy determinant
    Polynomial g = fol.form.a.substitute(images).scaled(u[0]) +
                   fol.form.b.substitute(images).scaled(u[1]) +
                   fol.form.c.substitute(images).scaled(u[2]);
    if (g.is_zero()) continue;  // invariant or degenerate line
    auto d_poly = try_divide(g, Polynomial::variable(f, 1));
    if (!d_poly) fail(Errc::Internal, "degeneracy determinant lost its forced zero");
    if (d_poly->is_zero()) continue;
    // transversality: repeated roots of the determinant trigger a reseed
    if (d_poly->degree() > 0) {
      Polynomial dsq = gcd(*d_poly, gcd(d_poly->differentiate(0), d_poly->differentiate(1)));
      if (!dsq.is_constant()) continue;
    }
    return d_poly->degree();
  }
  fail(Errc::DegenerateLine, "no transversal line found in 20 attempts");
}

namespace {

std::array<std::array<Coeff, 3>, 3> invert3(const FieldSpec& f,
                                            const std::array<std::array<Coeff, 3>, 3>& m) {
  auto det2 = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
  };
  Coeff det = f.add(f.sub(f.mul(m[0][0], det2(1, 2, 1, 2)), f.mul(m[0][1], det2(1, 2, 0, 2))),
                    f.mul(m[0][2], det2(1, 2, 0, 1)));
  Coeff inv = f.inv(det);
  std::array<std::array<Coeff, 3>, 3> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // adjugate with the transpose built in
      adj[j][i] = f.mul(f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0])), inv);
    }
  return adj;
}

}  // namespace

HamiltonResult hamilton_foliation(const PlaneCurve& curve, uint64_t seed) {
  if (!is_reduced(curve)) fail(Errc::NotReduced, "Hamilton construction needs a reduced curve");
  const FieldSpec& f = curve.field();
  Polynomial z = Polynomial::variable(f, 2);

  for (uint64_t attempt = 0; attempt < 20; ++attempt) {
    std::array<std::array<Coeff, 3>, 3> m;
    Polynomial ftilde(f);
    if (attempt == 0) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = i == j ? f.one() : f.zero();
      ftilde = curve.F;
    } else {
      ftilde = random_coordinate_change(curve.F, Rng::derive(seed, "hamilton-" + std::to_string(attempt)), &m);
    }
    Polynomial fx = ftilde.differentiate(0), fy = ftilde.differentiate(1);
    if (!gcd(ftilde, fx).is_constant()) continue;  // F_x vanishes along a component
    if (try_divide(ftilde, z)) continue;           // z vanishes along a component

    ProjectiveOneForm form = one_form_of_vector_triple(fy, -fx, Polynomial::zero(f));
    // pull the form back to the original coordinates
    ProjectiveOneForm original = form.change_coordinates(invert3(f, m));
    Foliation fol = make_foliation(original.a, original.b, original.c);
    if (!leaf_check(curve, fol).is_leaf)
      fail(Errc::Internal, "Hamilton foliation failed its own leaf test");
    bool dropped = fol.degree != curve.d - 1;
    return HamiltonResult{std::move(fol), dropped};
  }
  fail(Errc::CoordinateSearchFailed,
       "no coordinates with F_x and z nonvanishing on every component (20 attempts)");
}

// ---------------------------------------------------------------------------
// Minimal foliation degree with the curve as leaf.

namespace {

struct CandidateSpace {
  std::vector<std::vector<Coeff>> basis;  // nullspace vectors
  std::vector<Monomial> mons;             // coefficient monomials of degree k+1
};

ProjectiveOneForm form_of_vector(const FieldSpec& f, const std::vector<Coeff>& v,
                                 const std::vector<Monomial>& mons) {
  std::array<std::vector<Term>, 3> comp;
  size_t n = mons.size();
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    comp[i / n].push_back({mons[i % n], v[i]});
  }
  return ProjectiveOneForm::from(polynomial_from_terms(f, std::move(comp[0])),
                                 polynomial_from_terms(f, std::move(comp[1])),
                                 polynomial_from_terms(f, std::move(comp[2])));
}

// Linear system: Euler contraction zero and all three wedge coefficients
// divisible by F (vanishing normal form against {F}).
CandidateSpace solve_level(const PlaneCurve& curve, int k) {
  const FieldSpec& f = curve.field();
  const TermOrder& ord = canonical_order();
  Polynomial fx = curve.F.differentiate(0), fy = curve.F.differentiate(1),
             fz = curve.F.differentiate(2);
  std::vector<Polynomial> fbasis = {curve.F};

  CandidateSpace space;
  space.mons = degree_monomials(3, k + 1);
  size_t n = space.mons.size();
  size_t cols = 3 * n;

  std::vector<Monomial> euler_rows = degree_monomials(3, k + 2);
  std::vector<Monomial> wedge_rows = degree_monomials(3, k + curve.d);
  std::map<std::string, size_t> euler_index, wedge_index;
  auto keyof = [](const Monomial& m) {
    return std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "," + std::to_string(m.e[2]);
  };
  for (size_t i = 0; i < euler_rows.size(); ++i) euler_index[keyof(euler_rows[i])] = i;
  for (size_t i = 0; i < wedge_rows.size(); ++i) wedge_index[keyof(wedge_rows[i])] = i;

  size_t rows = euler_rows.size() + 3 * wedge_rows.size();
  LinearSystem sys(f, rows, cols);

  // wedge slot contributions: w1 = A Fy - B Fx, w2 = B Fz - C Fy, w3 = C Fx - A Fz
  struct Entry {
    int wedge;
    const Polynomial* factor;
    bool negate;
  };
  std::array<std::vector<Entry>, 3> slot_entries = {
      std::vector<Entry>{{0, &fy, false}, {2, &fz, true}},   // A
      std::vector<Entry>{{0, &fx, true}, {1, &fz, false}},   // B
      std::vector<Entry>{{1, &fy, true}, {2, &fx, false}}};  // C

  for (int slot = 0; slot < 3; ++slot) {
    for (size_t mi = 0; mi < n; ++mi) {
      size_t col = slot * n + mi;
      // Euler: x_slot * mono
      Monomial em = space.mons[mi] * Monomial::var(slot);
      sys.at(euler_index.at(keyof(em)), col) = f.one();
      for (const Entry& entry : slot_entries[slot]) {
        Polynomial prod = entry.factor->term_multiple(space.mons[mi], f.one());
        Polynomial rem = reduce_modulo(prod, fbasis, ord);
        if (entry.negate) rem = -rem;
        size_t base = euler_rows.size() + static_cast<size_t>(entry.wedge) * wedge_rows.size();
        for (const Term& t : rem.terms())
          sys.at(base + wedge_index.at(keyof(t.mono)), col) =
              f.add(sys.at(base + wedge_index.at(keyof(t.mono)), col), t.coeff);
      }
    }
  }

  space.basis = sys.nullspace();
  return space;
}

}  // namespace

MinimalDegreeResult minimal_degree(const PlaneCurve& curve, MinimalDegreeMode mode, uint64_t seed) {
  if (!is_reduced(curve)) fail(Errc::NotReduced, "minimal degree search needs a reduced curve");
  const FieldSpec& f = curve.field();
  MinimalDegreeResult result;
  result.witness = ProjectiveOneForm{Polynomial::zero(f), Polynomial::zero(f), Polynomial::zero(f)};

  for (int k = 0;; ++k) {
    if (k > curve.d - 1 && mode == MinimalDegreeMode::Leaf)
      fail(Errc::Internal, "leaf-mode search exceeded the Hamilton bound d-1");
    if (k > 2 * curve.d + 2)
      fail(Errc::Internal, "minimal degree search runaway");
    CandidateSpace space = solve_level(curve, k);
    if (space.basis.empty()) continue;

    if (mode == MinimalDegreeMode::FactorsThrough) {
      result.m = k;
      result.witness = form_of_vector(f, space.basis[0], space.mons);
      return result;
    }

    auto clean = [&](const ProjectiveOneForm& form) {
      return gcd(gcd(gcd(form.a, form.b), form.c), curve.F).is_constant();
    };

    // emptiness certificate: a common curve factor shared by every basis
    // vector blocks the whole span
    Polynomial common = curve.F;
    for (const std::vector<Coeff>& v : space.basis) {
      ProjectiveOneForm form = form_of_vector(f, v, space.mons);
      common = gcd(common, gcd(gcd(form.a, form.b), form.c));
      if (common.is_constant()) break;
    }
    if (!common.is_constant()) {
      result.gap_levels.push_back(k);
      continue;  // provably no leaf witness at this level
    }

    for (const std::vector<Coeff>& v : space.basis) {
      ProjectiveOneForm form = form_of_vector(f, v, space.mons);
      if (clean(form)) {
        result.m = k;
        result.witness = form;
        return result;
      }
    }
    // deterministic sweep v(lambda) = sum lambda^i b_i, then seeded random
    // combinations; some value avoids the finitely many bad subspaces
    auto combine = [&](const std::vector<Coeff>& weights) {
      std::vector<Coeff> v(space.basis[0].size(), f.zero());
      for (size_t i = 0; i < space.basis.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
          v[j] = f.add(v[j], f.mul(weights[i], space.basis[i][j]));
      return v;
    };
    bool found = false;
    for (long lambda = 1; lambda <= 50 && !found; ++lambda) {
      std::vector<Coeff> w(space.basis.size());
      Coeff pw = f.one();
      for (size_t i = 0; i < w.size(); ++i) {
        w[i] = pw;
        pw = f.mul(pw, f.from_long(lambda));
      }
      ProjectiveOneForm form = form_of_vector(f, combine(w), space.mons);
      if (clean(form)) {
        result.m = k;
        result.witness = form;
        found = true;
      }
    }
    if (found) return result;
    Rng rng = Rng::derived(seed, "leaf-combo-" + std::to_string(k));
    for (int t = 0; t < 50 && !found; ++t) {
      std::vector<Coeff> w(space.basis.size());
      for (Coeff& c : w)
        c = f.kind() == FieldKind::Rationals
                ? Coeff(rng.uniform(-50, 50))
                : f.from_long(rng.uniform(0, f.characteristic() - 1));
      ProjectiveOneForm form = form_of_vector(f, combine(w), space.mons);
      if (form.a.is_zero() && form.b.is_zero() && form.c.is_zero()) continue;
      if (clean(form)) {
        result.m = k;
        result.witness = form;
        found = true;
      }
    }
    if (found) return result;
    result.gap_levels.push_back(k);  // witness not found despite solutions
  }
}

Foliation random_foliation(FieldSpec field, int m, uint64_t seed) {
  Rng rng = Rng::derived(seed, "random-foliation");
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::array<Polynomial, 3> vf = {Polynomial::zero(field), Polynomial::zero(field),
                                    Polynomial::zero(field)};
    for (Polynomial& comp : vf) {
      std::vector<Term> terms;
      for (const Monomial& mon : degree_monomials(3, m)) {
        Coeff c = field.kind() == FieldKind::Rationals
                      ? Coeff(rng.uniform(-9, 9))
                      : field.from_long(rng.uniform(0, field.characteristic() - 1));
        if (c != 0) terms.push_back({mon, c});
      }
      comp = polynomial_from_terms(field, std::move(terms));
    }
    if (vf[0].is_zero() && vf[1].is_zero() && vf[2].is_zero()) continue;
    Polynomial x = Polynomial::variable(field, 0), y = Polynomial::variable(field, 1),
               z = Polynomial::variable(field, 2);
    Polynomial a = vf[1] * z - vf[2] * y, b = vf[2] * x - vf[0] * z, c = vf[0] * y - vf[1] * x;
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;  // radial triple
    if (!gcd(gcd(a, b), c).is_constant()) continue;           // degree would drop
    Foliation fol = make_foliation(a, b, c);
    if (fol.degree != m) continue;
    return fol;
  }
  fail(Errc::Internal, "random foliation generation failed");
}

}  // namespace tjurina
