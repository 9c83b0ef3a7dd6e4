#pragma once

#include <optional>

#include "tjurina/ideal.hpp"
#include "tjurina/rng.hpp"

namespace tjurina {

// Reduced plane projective curve F = 0.
struct PlaneCurve {
  Polynomial F;  // homogeneous in x,y,z of degree d >= 1
  int d = 0;

  static PlaneCurve from(Polynomial f);
  const FieldSpec& field() const { return F.field(); }
};

enum class Irreducibility { Irreducible, Reducible, Unknown };

// One Galois-stable packet of singular points: the points over the roots of
// an irreducible factor of the x-eliminant after a generic coordinate change.
struct SingularCluster {
  Polynomial eliminant_factor;
  long point_count = 0;
  long tjurina = 0;
  long milnor = 0;
  long polar = 0;
  std::optional<bool> quasi_homogeneous;  // unset in positive characteristic

  SingularCluster() : eliminant_factor(FieldSpec::rationals()) {}
  explicit SingularCluster(Polynomial phi) : eliminant_factor(std::move(phi)) {}
};

struct CurveInvariants {
  int d = 0;
  bool reduced = false;
  Irreducibility irreducibility = Irreducibility::Unknown;
  long tau = 0;
  std::optional<long> u;  // unset in positive characteristic
  int sigma = 0;
  int rho = 0;            // sigma - d + 2
  std::vector<SingularCluster> clusters;
  uint64_t coordinate_seed = 0;
};

// Affine data of the curve after a shape-position coordinate change; the
// frame every per-cluster computation runs in.
struct ClusterFrame {
  Polynomial f, fx, fy;        // chart z = 1 of the transformed curve
  Polynomial fh_x, fh_y, fh_z; // partials of the transformed homogeneous F
  Polynomial sq_eliminant;     // squarefree part of the x-eliminant of (f,fx,fy)
  Ideal tjurina_ideal;         // (f, fx, fy) in k[x,y]
  std::vector<SingularCluster> clusters;  // factor + point_count only
  uint64_t seed_used = 0;
};

bool is_reduced(const PlaneCurve& c);
Irreducibility irreducibility_status(const PlaneCurve& c, uint64_t seed);
// Also usable when tau is already known (skips recomputing the smooth case).
Irreducibility irreducibility_status(const PlaneCurve& c, uint64_t seed, std::optional<long> known_tau);

// Saturated ideal of the singular scheme and its degree tau. Refuses
// non-reduced curves and characteristics dividing d.
std::pair<Ideal, long> singular_scheme(const PlaneCurve& c);

// 1 + least t with Hilbert value tau on the saturated ideal; 0 when smooth.
int regularity_sigma(const PlaneCurve& c);

// Seeded coordinate change to shape position; clusters are the irreducible
// factors of the squarefree x-eliminant. Throws ShapePositionFailed after 20
// attempts.
ClusterFrame split_clusters(const PlaneCurve& c, uint64_t seed);

// Fills tjurina/milnor/polar lengths and the quasi-homogeneity flag of one
// cluster. Throws ShapePositionFailed when off-curve critical or polar points
// collide with the cluster's eliminant roots (caller reseeds coordinates).
SingularCluster cluster_invariants(const ClusterFrame& frame, const SingularCluster& shell,
                                   uint64_t seed);

long count_u(const PlaneCurve& c, uint64_t seed);

// Full curve-side pipeline, deterministic in (curve, seed).
CurveInvariants analyze_curve(const PlaneCurve& c, uint64_t seed);

// Seeded invertible linear change of coordinates applied to a polynomial.
Polynomial random_coordinate_change(const Polynomial& p, uint64_t seed,
                                    std::array<std::array<Coeff, 3>, 3>* matrix_out = nullptr);

}  // namespace tjurina
