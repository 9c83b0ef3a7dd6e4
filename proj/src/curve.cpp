#include "tjurina/curve.hpp"

#include <algorithm>

#include "tjurina/univariate.hpp"

namespace tjurina {

PlaneCurve PlaneCurve::from(Polynomial f) {
  if (f.is_zero()) fail(Errc::AllZero, "curve polynomial is zero");
  if (!f.is_homogeneous()) fail(Errc::DegreeMismatch, "curve polynomial must be homogeneous");
  if (f.uses_var(3)) fail(Errc::UnknownVariable, "curve polynomial outside x,y,z");
  if (f.degree() < 1) fail(Errc::DegreeMismatch, "curve must have degree >= 1");
  PlaneCurve c{f.primitive(), f.degree()};
  if (c.F.field().kind() == FieldKind::PrimeField) c.F = f.monic(canonical_order());
  return c;
}

bool is_reduced(const PlaneCurve& c) {
  Polynomial g = gcd(gcd(c.F, c.F.differentiate(0)),
                     gcd(c.F.differentiate(1), c.F.differentiate(2)));
  return g.is_constant();
}

std::pair<Ideal, long> singular_scheme(const PlaneCurve& c) {
  if (!is_reduced(c)) fail(Errc::NotReduced, "curve is not reduced");
  uint32_t p = c.field().characteristic();
  if (p != 0 && c.d % static_cast<int>(p) == 0)
    fail(Errc::CharDividesDegree, "characteristic divides the degree; polar base locus is not the singular scheme");
  Ideal jac(c.field(), 3,
            {c.F.differentiate(0), c.F.differentiate(1), c.F.differentiate(2)});
  Ideal sat = saturate(jac, irrelevant_ideal(c.field()));
  std::optional<long> tau = colength(sat);
  if (!tau) fail(Errc::Internal, "singular scheme of a reduced curve must be finite");
  return {sat, *tau};
}

int regularity_sigma(const PlaneCurve& c) {
  auto [sigma_ideal, tau] = singular_scheme(c);
  return scheme_regularity(sigma_ideal, tau);
}

Polynomial random_coordinate_change(const Polynomial& p, uint64_t seed,
                                    std::array<std::array<Coeff, 3>, 3>* matrix_out) {
  const FieldSpec& f = p.field();
  Rng rng = Rng::derived(seed, "coordinate-change");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::array<std::array<Coeff, 3>, 3> m;
    for (auto& row : m)
      for (Coeff& e : row)
        e = f.kind() == FieldKind::Rationals
                ? Coeff(rng.uniform(-9, 9))
                : f.from_long(rng.uniform(0, f.characteristic() - 1));
    // det != 0
    Coeff det = f.sub(
        f.add(f.mul(m[0][0], f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1]))),
              f.mul(m[0][2], f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])))),
        f.mul(m[0][1], f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0]))));
    if (det == 0) continue;
    std::array<Polynomial, kMaxVars> images = {Polynomial::zero(f), Polynomial::zero(f),
                                               Polynomial::zero(f), Polynomial::variable(f, 3)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        images[i] = images[i] + Polynomial::variable(f, j).scaled(m[i][j]);
    if (matrix_out) *matrix_out = m;
    return p.substitute(images);
  }
  fail(Errc::CoordinateSearchFailed, "no invertible coordinate change found");
}

namespace {

Ideal principal(const FieldSpec& f, int nvars, const Polynomial& g) {
  return Ideal(f, nvars, {g});
}

long finite_colength(const Ideal& i, const char* what) {
  std::optional<long> v = colength(i);
  if (!v) fail(Errc::Internal, std::string("expected finite colength: ") + what);
  return *v;
}

// Number of distinct geometric points of a zero-dimensional affine ideal.
long point_count_of(const Ideal& i) {
  return finite_colength(radical_zero_dimensional(i), "radical point count");
}

}  // namespace

ClusterFrame split_clusters(const PlaneCurve& c, uint64_t seed) {
  if (!is_reduced(c)) fail(Errc::NotReduced, "curve is not reduced");
  const FieldSpec& f = c.field();
  auto [sigma_ideal, tau] = singular_scheme(c);

  for (uint64_t attempt = 0; attempt < 20; ++attempt) {
    uint64_t attempt_seed = Rng::derive(seed, "shape-" + std::to_string(attempt));
    Polynomial ftilde = random_coordinate_change(c.F, attempt_seed);
    Polynomial fhx = ftilde.differentiate(0), fhy = ftilde.differentiate(1),
               fhz = ftilde.differentiate(2);
    Polynomial aff = ftilde.dehomogenize(2);
    Polynomial ax = aff.differentiate(0), ay = aff.differentiate(1);
    Ideal tj(f, 2, {aff, ax, ay});

    ClusterFrame frame{aff, ax, ay, fhx, fhy, fhz, Polynomial::zero(f), tj, {}, attempt_seed};

    if (tau == 0) return frame;  // smooth: no clusters, any chart will do

    // every singular point must be affine in this chart
    std::optional<long> affine_tau = colength(tj);
    if (!affine_tau || *affine_tau != tau) continue;

    Polynomial ex = eliminate(tj, 0);
    Polynomial sq = squarefree_part(ex, 0);
    // the x-coordinate must separate the geometric points
    if (sq.degree_in(0) != point_count_of(tj)) continue;

    frame.sq_eliminant = sq;
    Rng rng = Rng::derived(attempt_seed, "eliminant-factor");
    for (const Polynomial& phi : factor_univariate_squarefree(sq, 0, rng)) {
      SingularCluster shell(phi);
      shell.point_count = phi.degree_in(0);
      frame.clusters.push_back(std::move(shell));
    }
    return frame;
  }
  fail(Errc::ShapePositionFailed,
       "no shape-position coordinate change found in 20 attempts (field may be too small)");
}

namespace {

// Length of the part of a zero-dimensional ideal supported over the roots of
// phi: total length minus the length away from V(phi).
long length_over_factor(const Ideal& i, const Polynomial& phi, const Polynomial& complement,
                        long expected_points, const char* what) {
  const FieldSpec& f = i.field();
  Ideal restricted = complement.is_constant() ? i : saturate(i, principal(f, 2, complement));
  long total = finite_colength(restricted, what);
  Ideal away = saturate(restricted, principal(f, 2, phi));
  long junk = finite_colength(away, what);

  // support guard: everything over the factor's roots must be cluster points
  std::vector<Polynomial> gens = restricted.gens();
  gens.push_back(phi);
  long support = point_count_of(Ideal(f, 2, gens));
  if (support != expected_points)
    fail(Errc::ShapePositionFailed,
         std::string(what) + ": off-curve point collides with a cluster coordinate");
  return total - junk;
}

}  // namespace

SingularCluster cluster_invariants(const ClusterFrame& frame, const SingularCluster& shell,
                                   uint64_t seed) {
  const FieldSpec& f = frame.f.field();
  SingularCluster out = shell;
  const Polynomial& phi = shell.eliminant_factor;
  Polynomial complement = *try_divide(frame.sq_eliminant, phi);

  // Tjurina: the scheme (f,fx,fy) is supported on the curve's singular points
  // only, so removing the other clusters is the whole restriction.
  Ideal tj_cluster = complement.is_constant()
                         ? frame.tjurina_ideal
                         : saturate(frame.tjurina_ideal, principal(f, 2, complement));
  out.tjurina = finite_colength(tj_cluster, "cluster Tjurina length");

  // Milnor: strip the common factor of the partials first (a unit at every
  // singular point of a reduced curve), then cut down to the cluster.
  Polynomial g = gcd(frame.fx, frame.fy);
  Polynomial mx = frame.fx, my = frame.fy;
  if (!g.is_constant()) {
    mx = *try_divide(mx, g);
    my = *try_divide(my, g);
  }
  out.milnor = length_over_factor(Ideal(f, 2, {mx, my}), phi, complement, shell.point_count,
                                  "cluster Milnor length");

  // Polar: two seeded random members of the polar system.
  Rng rng = Rng::derived(seed, "polar-pair");
  bool done = false;
  for (int attempt = 0; attempt < 20 && !done; ++attempt) {
    Polynomial p1(f), p2(f);
    for (const Polynomial* part : {&frame.fh_x, &frame.fh_y, &frame.fh_z}) {
      Coeff a = f.kind() == FieldKind::Rationals
                    ? Coeff(rng.uniform(-20, 20))
                    : f.from_long(rng.uniform(0, f.characteristic() - 1));
      Coeff b = f.kind() == FieldKind::Rationals
                    ? Coeff(rng.uniform(-20, 20))
                    : f.from_long(rng.uniform(0, f.characteristic() - 1));
      p1 = p1 + part->scaled(a);
      p2 = p2 + part->scaled(b);
    }
    Polynomial a1 = p1.dehomogenize(2), a2 = p2.dehomogenize(2);
    if (a1.is_zero() || a2.is_zero() || !gcd(a1, a2).is_constant()) continue;
    Ideal polar(f, 2, {a1, a2});
    if (!colength(polar)) continue;
    try {
      out.polar = length_over_factor(polar, phi, complement, shell.point_count,
                                     "cluster polar length");
      done = true;
    } catch (const Error& e) {
      if (e.code() != Errc::ShapePositionFailed) throw;
      // polar extra points collided with cluster coordinates; redraw
    }
  }
  if (!done) fail(Errc::ShapePositionFailed, "no generic polar pair found in 20 attempts");

  if (f.kind() == FieldKind::Rationals) {
    // cluster-wise Saito test: conjugate points share tau_P and mu_P, and
    // tau_P <= mu_P pointwise, so sum equality forces pointwise equality
    out.quasi_homogeneous = out.tjurina == out.milnor;
  }
  return out;
}

namespace {

std::vector<SingularCluster> fill_all_clusters(const ClusterFrame& frame, long tau, uint64_t seed) {
  std::vector<SingularCluster> out;
  long total = 0;
  for (const SingularCluster& shell : frame.clusters) {
    out.push_back(cluster_invariants(frame, shell, Rng::derive(seed, "cluster-" + shell.eliminant_factor.to_string())));
    total += out.back().tjurina;
  }
  if (total != tau)
    fail(Errc::ShapePositionFailed, "cluster Tjurina lengths do not add up to tau");
  return out;
}

}  // namespace

CurveInvariants analyze_curve(const PlaneCurve& c, uint64_t seed) {
  CurveInvariants inv;
  inv.d = c.d;
  inv.reduced = is_reduced(c);
  if (!inv.reduced) return inv;

  auto [sigma_ideal, tau] = singular_scheme(c);
  inv.tau = tau;
  inv.sigma = scheme_regularity(sigma_ideal, tau);
  inv.rho = inv.sigma - c.d + 2;
  inv.irreducibility = irreducibility_status(c, seed, tau);

  if (tau == 0) {
    if (c.field().kind() == FieldKind::Rationals) inv.u = 0;
    return inv;
  }

  // the shape-position loop also retries when a later stage detects a
  // coordinate collision
  Error last(Errc::ShapePositionFailed, "shape position not attempted");
  for (uint64_t attempt = 0; attempt < 20; ++attempt) {
    uint64_t attempt_seed = Rng::derive(seed, "analysis-" + std::to_string(attempt));
    try {
      ClusterFrame frame = split_clusters(c, attempt_seed);
      inv.clusters = fill_all_clusters(frame, tau, attempt_seed);
      inv.coordinate_seed = frame.seed_used;
      if (c.field().kind() == FieldKind::Rationals) {
        long u = 0;
        for (const SingularCluster& cl : inv.clusters)
          if (cl.quasi_homogeneous.has_value() && !*cl.quasi_homogeneous) u += cl.point_count;
        inv.u = u;
      }
      return inv;
    } catch (const Error& e) {
      if (e.code() != Errc::ShapePositionFailed) throw;
      last = e;
    }
  }
  throw last;
}

long count_u(const PlaneCurve& c, uint64_t seed) {
  if (c.field().kind() != FieldKind::Rationals)
    fail(Errc::CharNotZero, "u is defined via Saito's criterion in characteristic zero only");
  CurveInvariants inv = analyze_curve(c, seed);
  if (!inv.reduced) fail(Errc::NotReduced, "curve is not reduced");
  return inv.u.value();
}

// ---------------------------------------------------------------------------
// Irreducibility.

namespace {

// Trial division by small-coefficient linear forms.
bool has_small_linear_factor(const PlaneCurve& c) {
  const FieldSpec& f = c.field();
  long range = f.kind() == FieldKind::Rationals ? 3 : std::min<long>(4, f.characteristic() - 1);
  for (long a = 0; a <= range; ++a)
    for (long b = -range; b <= range; ++b)
      for (long cc = -range; cc <= range; ++cc) {
        if (a == 0 && b < 0) continue;
        if (a == 0 && b == 0 && cc <= 0) continue;
        long g = std::max({std::abs(a), std::abs(b), std::abs(cc)});
        if (g == 0) continue;
        Polynomial line = Polynomial::variable(f, 0).scaled(f.from_long(a)) +
                          Polynomial::variable(f, 1).scaled(f.from_long(b)) +
                          Polynomial::variable(f, 2).scaled(f.from_long(cc));
        if (line.is_zero()) continue;
        if (try_divide(c.F, line)) return true;
      }
  return false;
}

struct FpCertificate {
  bool certified = false;
};

// Sound absolute-irreducibility certificate over F_p:
//  (1) a random line restriction of F is an irreducible binary form of full
//      degree, so F is irreducible over F_p;
//  (2) the curve has a smooth F_p-rational point; a smooth rational point
//      cannot lie on a Frobenius orbit of two or more conjugate components.
bool absolutely_irreducible_fp(const Polynomial& fbar, Rng& rng) {
  const FieldSpec& f = fbar.field();
  long p = f.characteristic();
  int d = fbar.degree();

  bool line_ok = false;
  for (int tries = 0; tries < 60 && !line_ok; ++tries) {
    std::array<Coeff, 3> u, v;
    for (int i = 0; i < 3; ++i) {
      u[i] = f.from_long(rng.uniform(0, p - 1));
      v[i] = f.from_long(rng.uniform(0, p - 1));
    }
    // restrict to the line s*u + t*v using (x,y) as (s,t)
    std::array<Polynomial, kMaxVars> images = {Polynomial::zero(f), Polynomial::zero(f),
                                               Polynomial::zero(f), Polynomial::zero(f)};
    for (int i = 0; i < 3; ++i)
      images[i] = Polynomial::variable(f, 0).scaled(u[i]) + Polynomial::variable(f, 1).scaled(v[i]);
    Polynomial binary = fbar.substitute(images);
    if (binary.is_zero()) continue;
    Polynomial univ = binary.dehomogenize(0);  // s = 1
    if (univ.degree_in(1) != d) continue;      // root at infinity; factor of t
    if (univariate_irreducible_fp(univ, 1)) line_ok = true;
  }
  if (!line_ok) return false;

  for (int tries = 0; tries < 60; ++tries) {
    Coeff x0 = f.from_long(rng.uniform(0, p - 1));
    std::array<Polynomial, kMaxVars> images = {
        Polynomial::constant(f, x0), Polynomial::variable(f, 1),
        Polynomial::constant(f, f.one()), Polynomial::zero(f)};
    Polynomial slice = fbar.substitute(images);
    if (slice.is_zero() || slice.is_constant()) continue;
    Rng rroot = Rng::derived(rng.next(), "roots");
    for (const Coeff& y0 : univariate_roots_fp(slice, 1, rroot)) {
      std::array<Coeff, kMaxVars> pt = {x0, y0, f.one(), f.zero()};
      if (fbar.differentiate(0).evaluate(pt) != 0 || fbar.differentiate(1).evaluate(pt) != 0 ||
          fbar.differentiate(2).evaluate(pt) != 0)
        return true;  // smooth rational point
    }
  }
  return false;
}

std::vector<uint32_t> reduction_primes(uint64_t seed) {
  std::vector<uint32_t> out;
  uint32_t start = 32003 + static_cast<uint32_t>(Rng::derive(seed, "reduction-primes") % 97);
  for (uint32_t n = start; out.size() < 5; ++n)
    if (is_prime_u32(n)) out.push_back(n);
  return out;
}

}  // namespace

Irreducibility irreducibility_status(const PlaneCurve& c, uint64_t seed) {
  return irreducibility_status(c, seed, std::nullopt);
}

Irreducibility irreducibility_status(const PlaneCurve& c, uint64_t seed,
                                     std::optional<long> known_tau) {
  const FieldSpec& f = c.field();
  if (!is_reduced(c)) return Irreducibility::Reducible;
  if (c.d == 1) return Irreducibility::Irreducible;

  // a smooth plane curve is irreducible: two components would intersect
  uint32_t p = f.characteristic();
  if (p == 0 || c.d % static_cast<int>(p) != 0) {
    long tau = known_tau ? *known_tau : singular_scheme(c).second;
    if (tau == 0) return Irreducibility::Irreducible;
  }

  if (has_small_linear_factor(c)) return Irreducibility::Reducible;

  if (f.kind() == FieldKind::PrimeField) {
    Rng rng = Rng::derived(seed, "irreducibility-fp");
    return absolutely_irreducible_fp(c.F, rng) ? Irreducibility::Irreducible
                                               : Irreducibility::Unknown;
  }

  // reduce mod seeded primes near 32003; a certificate for one good prime
  // certifies the curve
  Polynomial fint = c.F.primitive();
  for (uint32_t q : reduction_primes(seed)) {
    FieldSpec fq = FieldSpec::prime(q);
    Polynomial fbar(fq);
    for (const Term& t : fint.terms()) {
      Coeff cq = fq.from_string(t.coeff.get_str());
      fbar = fbar + Polynomial::monomial(fq, t.mono, cq);
    }
    if (fbar.is_zero() || fbar.degree() != c.d) continue;
    Polynomial gq = gcd(gcd(fbar, fbar.differentiate(0)),
                        gcd(fbar.differentiate(1), fbar.differentiate(2)));
    if (!gq.is_constant()) continue;  // bad reduction
    Rng rng = Rng::derived(Rng::derive(seed, "irreducibility-q"), std::to_string(q));
    if (absolutely_irreducible_fp(fbar, rng)) return Irreducibility::Irreducible;
  }
  return Irreducibility::Unknown;
}

}  // namespace tjurina
