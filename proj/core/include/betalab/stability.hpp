#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "betalab/action.hpp"
#include "betalab/perturbation.hpp"
#include "betalab/report.hpp"

namespace betalab {

// Gamma(phi, psi, x, eps) over the radius-ball: points y whose psi-orbit
// eps-shadows the phi-orbit of x at every ball element.
PointSet gamma_set(const Action& phi, const Action& psi, Point x,
                   const Rational& epsilon, int radius);

// Same set computed as the intersection of pulled-back closed balls,
// intersect_g psi_{g^-1}(B[phi_g(x), eps]); kept as an independent route and
// cross-checked against gamma_set in tests and verification suites.
PointSet gamma_set_preimage_route(const Action& phi, const Action& psi,
                                  Point x, const Rational& epsilon,
                                  int radius);

// { x : gamma_set(phi, psi, x, eps) nonempty }.
PointSet b_set(const Action& phi, const Action& psi, const Rational& epsilon,
               int radius);

// Union over the family of (space \ b_set(phi, psi, eps)): points whose
// orbit some perturbation refuses to shadow.
PointSet c_set(const Action& phi, const Rational& epsilon,
               const PerturbationSet& family, int radius);

struct ScaleIndexedPointSet {
  Scale scale;
  PointSet members;
  Provenance provenance;
};

// { x : x in b_set(phi, psi, eps) for every psi in the family }. The
// complement identity against c_set is re-derived internally and a mismatch
// throws (it would indicate a bug, the identity is exact).
ScaleIndexedPointSet persistent_points(const Action& phi,
                                       const Rational& epsilon,
                                       const PerturbationSet& family,
                                       int radius);

// Semiconjugacy witness: anchor = h(x) and the induced equivariant map from
// the saturated psi-orbit of x into the space, displaced at most epsilon.
struct StabilityWitness {
  Point base_point = -1;
  Point anchor = -1;
  // (orbit point z, h(z)), sorted by z.
  std::vector<std::pair<Point, Point>> map;
  Rational max_displacement;

  Point image_of(Point z) const;
};

struct NoWitness {
  enum class Reason { IllDefined, Displacement, Mixed };
  Reason reason = Reason::IllDefined;
  std::string detail;
};

using WitnessResult = std::variant<StabilityWitness, NoWitness>;

// Tries every anchor in B[x, eps]: the map h(psi_w(x)) := phi_w(anchor) is
// propagated over the saturated orbit through the generator maps, rejecting
// anchors that make it ill-defined or displace beyond eps. Returns the
// witness of minimal displacement (ties: smallest anchor). Throws RadiusError
// when orbit(psi, x, radius) is not saturated.
WitnessResult semiconjugacy_search(const Action& phi, const Action& psi,
                                   Point x, const Rational& epsilon,
                                   int radius);

// Independent re-check of a returned witness (equivariance over the ball,
// displacement bound, totality on the orbit).
bool audit_witness(const Action& phi, const Action& psi,
                   const StabilityWitness& witness, const Rational& epsilon,
                   int radius);

// { x : semiconjugacy_search succeeds for every psi in the family }.
ScaleIndexedPointSet stable_points(const Action& phi, const Rational& epsilon,
                                   const PerturbationSet& family, int radius);

// Largest delta, quantized to realized distances, such that
// d(x, y) <= delta forces d(phi_g(x), phi_g(y)) <= eps for every ball
// element g. When no positive realized distance qualifies but delta = eps
// does (all realized distances exceed eps), eps itself is returned; 0 when
// nothing positive works.
Rational equicontinuity_modulus(const Action& phi, const Rational& epsilon,
                                int radius);
// Per-point variant quantized to the distances realized from x.
Rational pointwise_equicontinuity_modulus(const Action& phi, Point x,
                                          const Rational& epsilon, int radius);

// Quantitative chain: eta := modulus(eps/2); delta := eta; stable points at
// (eta, delta) must be persistent at (eps, delta), and every witness must
// satisfy the triangle bound d(phi_g(x), psi_g(x)) <= d(phi_g(x),
// phi_g(h(x))) + d(h(psi_g(x)), psi_g(x)) <= eps. eta = 0 is VACUOUS.
VerificationRecord verify_equicontinuous_stability_implies_persistence(
    const Action& phi, const Rational& epsilon, int radius,
    const Provenance& request);

// Two-scale closure: with eta := modulus(eps/2), any x within eta of an
// (eps/2, delta)-persistent point is (eps, delta)-persistent. VACUOUS when
// eta = 0.
VerificationRecord verify_persistent_two_scale_closure(
    const Action& phi, const Rational& epsilon, const Rational& delta,
    int radius, const Provenance& request);

}  // namespace betalab
