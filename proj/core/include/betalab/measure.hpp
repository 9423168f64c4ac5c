#pragma once

#include <optional>
#include <vector>

#include "betalab/rng.hpp"
#include "betalab/stability.hpp"

namespace betalab {

// Probability measure with exact rational point weights; weights sum to 1
// and the support is nonempty. On a finite space the Borel sigma-algebra is
// the power set, so a measure is exactly its weight vector.
class RationalMeasure {
 public:
  explicit RationalMeasure(std::vector<Rational> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(Point x) const;
  const std::vector<Rational>& weights() const { return weights_; }
  const PointSet& support() const { return support_; }

  friend bool operator==(const RationalMeasure&, const RationalMeasure&) =
      default;

 private:
  std::vector<Rational> weights_;
  PointSet support_;
};

RationalMeasure dirac(Point x, int space_size);

Rational measure_of(const RationalMeasure& mu, const PointSet& set);

// Sum of t_i * mu_i with strictly positive rational weights summing to 1.
RationalMeasure convex_combination(const std::vector<RationalMeasure>& measures,
                                   const std::vector<Rational>& coefficients);

// Seeded measure with weights on a fixed denominator lattice (numerators in
// [0, lattice], normalized exactly), supported inside `support`.
RationalMeasure random_measure(Rng& rng, int space_size,
                               const PointSet& support, int lattice = 64);
// Strictly positive lattice weights summing to 1.
std::vector<Rational> random_convex_coefficients(Rng& rng, int k,
                                                 int lattice = 64);

struct MeasureVerdict {
  bool persistent = false;
  // Index into family.actions of the first violating psi; -1 when none.
  int violator = -1;
};

// mu is persistent at scale iff supp(mu) lies in b_set(phi, psi, eps) for
// every psi in the family (equivalently mu(B) = 1, weights being positive on
// the support).
MeasureVerdict is_persistent_measure(const RationalMeasure& mu,
                                     const Action& phi, const Rational& epsilon,
                                     const PerturbationSet& family, int radius);

// mu(persistent set) = 1.
bool is_almost_persistent(const RationalMeasure& mu,
                          const ScaleIndexedPointSet& persistent_set);

// Exact set equality between the persistent points and the points whose
// Dirac measure is persistent.
VerificationRecord verify_persistent_dirac_characterization(
    const Action& phi, const Rational& epsilon, const PerturbationSet& family,
    int radius);

// Seeded convex combinations of persistent measures stay persistent.
VerificationRecord verify_persistent_measure_convexity(
    const Action& phi, const Rational& epsilon, const PerturbationSet& family,
    int radius, int trials, std::uint64_t seed);

// Finite biconditional: the persistent set is everything iff every Dirac
// (and each of `trials` seeded measures) is persistent.
VerificationRecord verify_pointwise_persistence_measure_equivalence(
    const Action& phi, const Rational& epsilon, const PerturbationSet& family,
    int radius, int trials, std::uint64_t seed);

// Chain scale eta = modulus(eps/2), delta = eta: measures supported inside
// the (eps/2, delta)-persistent set are persistent at (eps, delta). VACUOUS
// when eta = 0 or when no persistent point exists to support a measure.
VerificationRecord verify_almost_persistent_measures_persist(
    const Action& phi, const Rational& epsilon, int radius,
    const Provenance& request, int trials, std::uint64_t seed);

}  // namespace betalab
