#include "betalab/instances.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace betalab {

namespace {

DistanceMatrix arc_metric(int n) {
  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int gap = std::abs(i - j);
      dist[i][j] = Rational(std::min(gap, n - gap));
    }
  }
  return dist;
}

}  // namespace

Instance build_l3() {
  DistanceMatrix dist = {
      {Rational(0), Rational(1), Rational(2)},
      {Rational(1), Rational(0), Rational(1)},
      {Rational(2), Rational(1), Rational(0)},
  };
  auto space = std::make_shared<const FiniteMetricSpace>(
      std::move(dist), std::vector<std::string>{"p0", "p1", "p2"});
  GroupModel group = GroupModel::cyclic(2);
  Action action(space, group, {identity_permutation(3)});
  return Instance{space, group, std::move(action), std::nullopt};
}

Instance build_c6() {
  auto space = std::make_shared<const FiniteMetricSpace>(arc_metric(6));
  GroupModel group = GroupModel::integers();
  Permutation rotation(6);
  for (int i = 0; i < 6; ++i) rotation[i] = (i + 1) % 6;
  Action action(space, group, {rotation});
  return Instance{space, group, std::move(action), std::nullopt};
}

Instance build_named(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (key == "L3") return build_l3();
  if (key == "C6") return build_c6();
  throw ArgumentError("unknown named instance '" + name +
                      "' (expected L3 or C6)");
}

Point comb_core_index(const CombSpaceConfig& config, int j) {
  return j % config.period;
}

Point comb_q_index(const CombSpaceConfig& config, int i, int k, int j) {
  const int t = config.period;
  return t + ((k - 1) * 3 + (i - 1)) * t + (j % t);
}

Instance build_comb_space(const CombSpaceConfig& config) {
  const int t = config.period;
  const int depth = config.depth;
  if (t < 1) throw ArgumentError("period must be >= 1");
  if (depth < 1) throw ArgumentError("depth must be >= 1");

  const DistanceMatrix core =
      config.core.has_value() ? *config.core : arc_metric(t);
  if (static_cast<int>(core.size()) != t) {
    throw InstanceError("core metric size does not match the period");
  }
  {
    const MetricValidation core_check = validate_metric(core);
    if (!core_check.ok) {
      throw InstanceError("core metric invalid: " +
                          core_check.violations.front().to_string());
    }
  }
  for (int j = 0; j < t; ++j) {
    for (int r = 0; r < t; ++r) {
      if (core[(j + 1) % t][(r + 1) % t] != core[j][r]) {
        throw InstanceError(
            "the cyclic shift is not an isometry of the core metric "
            "(offending pair " +
            std::to_string(j) + "," + std::to_string(r) + ")");
      }
    }
  }

  const int n = t + 3 * depth * t;
  std::vector<std::string> labels(n);
  for (int j = 0; j < t; ++j) labels[j] = "c" + std::to_string(j);
  for (int k = 1; k <= depth; ++k) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 0; j < t; ++j) {
        std::ostringstream name;
        name << "q(" << i << "," << k << "," << j << ")";
        labels[comb_q_index(config, i, k, j)] = name.str();
      }
    }
  }

  // Cluster coordinates per point; core points get k = 0.
  struct Coord {
    int i = 0, k = 0, j = 0;
  };
  std::vector<Coord> coord(n);
  for (int j = 0; j < t; ++j) coord[j] = {0, 0, j};
  for (int k = 1; k <= depth; ++k) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 0; j < t; ++j) {
        coord[comb_q_index(config, i, k, j)] = {i, k, j};
      }
    }
  }

  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const Coord& ca = coord[a];
      const Coord& cb = coord[b];
      if (ca.k == 0 && cb.k == 0) {
        dist[a][b] = core[ca.j][cb.j];
      } else if (ca.k == 0) {
        dist[a][b] = Rational(1, cb.k) + core[cb.j][ca.j];
      } else if (cb.k == 0) {
        dist[a][b] = Rational(1, ca.k) + core[ca.j][cb.j];
      } else if (ca.k == cb.k && ca.j == cb.j) {
        dist[a][b] = Rational(1, ca.k);
      } else {
        dist[a][b] =
            Rational(1, ca.k) + Rational(1, cb.k) + core[ca.j][cb.j];
      }
    }
  }

  auto space = std::make_shared<const FiniteMetricSpace>(std::move(dist),
                                                         std::move(labels));
  GroupModel group = GroupModel::integers();
  Permutation shift(n);
  for (int j = 0; j < t; ++j) shift[j] = (j + 1) % t;
  for (int k = 1; k <= depth; ++k) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 0; j < t; ++j) {
        shift[comb_q_index(config, i, k, j)] =
            comb_q_index(config, i, k, (j + 1) % t);
      }
    }
  }
  Action action(space, group, {shift});

  CombSpaceProvenance provenance{t, depth, core};
  return Instance{space, group, std::move(action), std::move(provenance)};
}

SelfCheckResult run_comb_space_checks(const Instance& instance) {
  SelfCheckResult result;
  auto fail = [&](const std::string& what) {
    result.ok = false;
    result.failures.push_back(what);
  };

  if (!instance.provenance.has_value()) {
    fail("instance carries no generation provenance");
    return result;
  }
  const int t = instance.provenance->period;
  const int depth = instance.provenance->depth;
  const CombSpaceConfig config{t, depth, instance.provenance->core_metric};
  const FiniteMetricSpace& space = *instance.space;

  const MetricValidation metric_check = validate_metric(space.matrix());
  if (!metric_check.ok) {
    fail("metric axioms: " + metric_check.violations.front().to_string());
  }
  if (!(instance.group == GroupModel::integers())) {
    fail("the generator must act as the integers");
  }
  if (relations_hold(instance.group, instance.action.generator_maps()).ok ==
      false) {
    fail("generator maps break the group relations");
  }

  const Permutation& f = instance.action.generator_map(0);
  for (int k = 1; k <= depth; ++k) {
    for (int i = 1; i <= 3; ++i) {
      // The generator restricted to each cluster is a t-cycle.
      Point z = comb_q_index(config, i, k, 0);
      Point walker = z;
      for (int step = 0; step < t; ++step) {
        const Point expect = comb_q_index(config, i, k, step % t);
        if (walker != expect) {
          fail("cluster (" + std::to_string(i) + "," + std::to_string(k) +
               ") is not shifted cyclically");
          break;
        }
        walker = f[walker];
      }
      if (walker != z) {
        fail("cluster (" + std::to_string(i) + "," + std::to_string(k) +
             ") does not close after " + std::to_string(t) + " steps");
      }

      // Singleton-ball law: open balls of radius < 1/k around each cluster
      // point along its forward orbit contain only the point itself.
      const Rational one_over_k(1, k);
      const std::vector<Rational> probes = {
          Rational(1, k + 1),
          one_over_k - Rational(1, static_cast<long long>(k) * (k + 1))};
      for (int j = 0; j < t; ++j) {
        Point orbit_point = comb_q_index(config, i, k, j);
        for (int step = 0; step < t; ++step) {
          for (const Rational& eps : probes) {
            const PointSet ball = space.open_ball(orbit_point, eps);
            if (ball != PointSet{orbit_point}) {
              fail("open ball of radius " + format_rational(eps) +
                   " around " + space.label(orbit_point) +
                   " is not a singleton");
            }
          }
          orbit_point = f[orbit_point];
        }
      }
    }
  }
  return result;
}

}  // namespace betalab
