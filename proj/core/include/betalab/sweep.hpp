#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betalab/instances.hpp"
#include "betalab/stability.hpp"

namespace betalab {

struct SweepOptions {
  std::vector<Rational> epsilon_grid;
  std::vector<Rational> delta_grid;
  std::vector<int> radius_grid;
  Provenance request;
  // Upper bound on grid cells; beyond it the sweep refuses (budget error).
  std::size_t max_cells = 4096;
};

struct SweepCell {
  Scale scale;
  Provenance provenance;
  PointSet persistent;
  // Unset when some orbit cannot saturate at this radius; the reason is in
  // stable_error.
  std::optional<PointSet> stable;
  std::string stable_error;
  std::size_t family_size = 0;
};

struct AuditViolation {
  std::string law;  // "epsilon_monotone" | "delta_antitone" | "radius_b_set"
  std::string detail;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // ordered by (radius, delta, epsilon)
  // Violations of the exact monotonicity laws; empty on a correct build.
  std::vector<AuditViolation> violations;
  // Non-fatal observations (e.g. coupled persistent cells moving against R,
  // which no law forbids).
  std::vector<std::string> diagnostics;
  // frontier[x] lists, for each (epsilon, radius), the largest grid delta
  // keeping x persistent, serialized in the JSON payload.
  std::string to_json_string() const;
  bool ok() const { return violations.empty(); }
};

// Computes persistent/stable sets over the grid and audits the monotonicity
// laws that are exact theorems at fixed provenance: persistent/stable sets
// grow with epsilon, shrink as delta grows (cell families are nested by
// construction in both modes), and per-psi b_sets shrink as the radius
// grows. Sampled mode draws one master pool at (max delta, max radius) and
// filters it per cell, so sampled cell families are nested exactly like
// exhaustive ones.
SweepResult run_sweep(const Instance& instance, const SweepOptions& options);

}  // namespace betalab
