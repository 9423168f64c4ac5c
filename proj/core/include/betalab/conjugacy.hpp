#pragma once

#include <memory>

#include "betalab/stability.hpp"

namespace betalab {

// Bijection between two equal-size point sets; on finite spaces every
// bijection is a homeomorphism.
class PointBijection {
 public:
  static PointBijection from_images(std::vector<Point> images);
  static PointBijection identity(int n);

  int size() const { return static_cast<int>(fwd_.size()); }
  Point forward(Point x) const;
  Point backward(Point y) const;
  const std::vector<Point>& images() const { return fwd_; }
  PointBijection inverse() const;

 private:
  PointBijection() = default;
  std::vector<Point> fwd_;
  std::vector<Point> bwd_;
};

// Codomain metric making the bijection an isometry:
// d'(R(a), R(b)) = d(a, b).
FiniteMetricSpace pushforward_space(const FiniteMetricSpace& space,
                                    const PointBijection& bijection);

// The action with generator maps R o sigma o R^-1 on the pushforward space.
Action conjugate_action(const Action& phi, const PointBijection& bijection);
Action conjugate_action(const Action& phi, const PointBijection& bijection,
                        std::shared_ptr<const FiniteMetricSpace> target);

PointSet image_set(const PointSet& s, const PointBijection& bijection);

// Transports the perturbation family by conjugation (a bijection of
// families, so provenance is preserved) and asserts
// R(stable(phi)) = stable(R phi R^-1) at the same scale.
VerificationRecord verify_stable_set_conjugacy_transport(
    const Action& phi, const Rational& epsilon, const Rational& delta,
    int radius, const Provenance& request, const PointBijection& bijection);

// Same transport for persistent sets, plus the containment check that a
// persistence-through-everything verdict makes every singleton persistent.
VerificationRecord verify_persistent_set_conjugacy_transport(
    const Action& phi, const Rational& epsilon, const Rational& delta,
    int radius, const Provenance& request, const PointBijection& bijection);

}  // namespace betalab
