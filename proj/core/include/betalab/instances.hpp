#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betalab/action.hpp"

namespace betalab {

// Provenance block carried by generated comb-space instance files.
struct CombSpaceProvenance {
  int period = 0;     // t
  int depth = 0;      // K
  DistanceMatrix core_metric;
};

struct Instance {
  std::shared_ptr<const FiniteMetricSpace> space;
  GroupModel group;
  Action action;
  std::optional<CombSpaceProvenance> provenance;
};

// L3: 3-point path (d(0,1)=d(1,2)=1, d(0,2)=2), Cyclic(2), identity action.
Instance build_l3();
// C6: 6-point circle with arc metric, Integers, rotation by +1.
Instance build_c6();
// By name: "L3" | "C6" (case-insensitive). Throws ArgumentError otherwise.
Instance build_named(const std::string& name);

// Comb space over a periodic core: a t-point cyclic core (default: arc
// metric) plus clusters q(i,k,j) for i in {1,2,3}, 1 <= k <= depth,
// 0 <= j < t. Distances: 1/k within a (k,j)-cluster; 1/k + d0(core_j, b) from
// q(i,k,j) to a core point b; 1/k + 1/m + d0(core_j, core_r) across distinct
// clusters. The single generator maps core_j -> core_{j+1} and
// q(i,k,j) -> q(i,k,j+1) (indices mod t), acting as the Integers.
struct CombSpaceConfig {
  int period = 1;  // t >= 1
  int depth = 1;   // K >= 1
  // Defaults to the arc metric on `period` points; must make the cyclic
  // shift an isometry.
  std::optional<DistanceMatrix> core;
};

Instance build_comb_space(const CombSpaceConfig& config);

// Point index helpers for the comb space layout: core points first, then
// clusters grouped by (k, i) with j contiguous.
Point comb_core_index(const CombSpaceConfig& config, int j);
Point comb_q_index(const CombSpaceConfig& config, int i, int k, int j);

struct SelfCheckResult {
  bool ok = true;
  std::vector<std::string> failures;
};

// Post-build checks: metric axioms over all triples, action validity, the
// singleton-ball law (open balls of radius < 1/k around cluster points are
// singletons, probed at 1/(k+1) and 1/k - 1/(k(k+1))), and that the
// generator restricted to each cluster is a t-cycle.
SelfCheckResult run_comb_space_checks(const Instance& instance);

}  // namespace betalab
