#pragma once

#include <cstdint>

#include "betalab/conjugacy.hpp"
#include "betalab/instances.hpp"
#include "betalab/measure.hpp"

namespace betalab {

struct SuiteOptions {
  Rational epsilon;
  Rational delta;
  int radius = 1;
  Provenance request;      // exhaustive or sampled family at (delta, radius)
  int trials = 50;         // measure trial budget
  int bijections = 3;      // seeded bijections for the transport checks
  std::uint64_t seed = 0;  // master seed for trials and bijections
  // When set, the transport checks run with exactly this bijection (image
  // array, 0-indexed) instead of the seeded ones.
  std::optional<std::vector<Point>> explicit_bijection;
};

// Runs the full verification suite on one instance: formula agreement for
// gamma, the complement identity, the Dirac characterization and convexity
// of persistent measures, the pointwise/measure equivalence, the two-scale
// closure, persistence of measures supported on persistent points, the
// equicontinuity-stability chain, and the conjugacy transport of stable and
// persistent sets under seeded bijections. The report also carries the
// computed persistent/stable sets at the requested scale.
Report run_verify_suite(const Instance& instance, const SuiteOptions& options);

}  // namespace betalab
