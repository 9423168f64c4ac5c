#include "betalab/sweep.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace betalab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::string cell_key(const Scale& scale) {
  std::ostringstream out;
  out << format_rational(scale.epsilon) << "|" << format_rational(scale.delta)
      << "|" << scale.radius;
  return out.str();
}

}  // namespace

SweepResult run_sweep(const Instance& instance, const SweepOptions& options) {
  const Action& phi = instance.action;

  if (options.epsilon_grid.empty() || options.delta_grid.empty() ||
      options.radius_grid.empty()) {
    throw ArgumentError("sweep grids must be nonempty");
  }
  const std::vector<Rational> eps_grid = sorted_unique(options.epsilon_grid);
  const std::vector<Rational> delta_grid = sorted_unique(options.delta_grid);
  std::vector<int> radius_grid = options.radius_grid;
  std::sort(radius_grid.begin(), radius_grid.end());
  radius_grid.erase(std::unique(radius_grid.begin(), radius_grid.end()),
                    radius_grid.end());
  for (int r : radius_grid) {
    if (r < 1) throw ArgumentError("sweep radii must be >= 1");
  }
  const std::size_t cell_count =
      eps_grid.size() * delta_grid.size() * radius_grid.size();
  if (cell_count > options.max_cells) {
    throw ArgumentError("sweep grid has " + std::to_string(cell_count) +
                        " cells, over the budget of " +
                        std::to_string(options.max_cells));
  }

  const int radius_max = radius_grid.back();
  const Rational delta_max = delta_grid.back();

  // Cell families. Sampled mode filters one master pool drawn at
  // (delta_max, radius_max), so families are nested in delta and in radius
  // exactly like exhaustive ones.
  std::map<std::pair<std::string, int>, PerturbationSet> families;
  std::optional<PerturbationSet> master;
  if (options.request.is_sampled()) {
    master = sample_perturbations(phi, delta_max, radius_max,
                                  options.request.seed, options.request.count);
  }
  auto family_at = [&](const Rational& delta, int radius) -> PerturbationSet& {
    const auto key = std::make_pair(format_rational(delta), radius);
    auto it = families.find(key);
    if (it != families.end()) return it->second;
    PerturbationSet family;
    if (master.has_value()) {
      family.delta = delta;
      family.radius = radius;
      family.provenance = master->provenance;
      const CayleyBall ball = phi.group().cayley_ball(radius);
      for (const Action& psi : master->actions) {
        if (action_distance_within(phi, psi, ball, delta)) {
          family.actions.push_back(psi);
        }
      }
      family.total_yields = family.actions.size();
    } else {
      family = enumerate_perturbations(phi, delta, radius);
    }
    return families.emplace(key, std::move(family)).first->second;
  };

  SweepResult result;
  for (int radius : radius_grid) {
    for (const Rational& delta : delta_grid) {
      const PerturbationSet& family = family_at(delta, radius);
      for (const Rational& eps : eps_grid) {
        SweepCell cell;
        cell.scale = Scale{eps, delta, radius};
        cell.provenance = family.provenance;
        cell.family_size = family.actions.size();
        cell.persistent =
            persistent_points(phi, eps, family, radius).members;
        try {
          cell.stable = stable_points(phi, eps, family, radius).members;
        } catch (const RadiusError& err) {
          cell.stable_error = err.what();
        }
        result.cells.push_back(std::move(cell));
      }
    }
  }

  auto cell_at = [&](const Rational& eps, const Rational& delta,
                     int radius) -> const SweepCell& {
    const std::string key = cell_key(Scale{eps, delta, radius});
    for (const SweepCell& cell : result.cells) {
      if (cell_key(cell.scale) == key) return cell;
    }
    throw Error("internal: sweep cell lookup failed");
  };

  // Law: persistent/stable sets grow with epsilon (fixed delta, radius).
  for (int radius : radius_grid) {
    for (const Rational& delta : delta_grid) {
      for (std::size_t e = 0; e + 1 < eps_grid.size(); ++e) {
        const SweepCell& lo = cell_at(eps_grid[e], delta, radius);
        const SweepCell& hi = cell_at(eps_grid[e + 1], delta, radius);
        if (!set_subset(lo.persistent, hi.persistent)) {
          result.violations.push_back(
              {"epsilon_monotone",
               "persistent set shrank from eps=" +
                   format_rational(eps_grid[e]) + " to " +
                   format_rational(eps_grid[e + 1]) + " at " +
                   lo.scale.to_string()});
        }
        if (lo.stable.has_value() && hi.stable.has_value() &&
            !set_subset(*lo.stable, *hi.stable)) {
          result.violations.push_back(
              {"epsilon_monotone",
               "stable set shrank from eps=" + format_rational(eps_grid[e]) +
                   " to " + format_rational(eps_grid[e + 1]) + " at " +
                   lo.scale.to_string()});
        }
      }
    }
  }

  // Law: persistent/stable sets shrink as delta grows (families nested).
  for (int radius : radius_grid) {
    for (const Rational& eps : eps_grid) {
      for (std::size_t d = 0; d + 1 < delta_grid.size(); ++d) {
        const SweepCell& lo = cell_at(eps, delta_grid[d], radius);
        const SweepCell& hi = cell_at(eps, delta_grid[d + 1], radius);
        if (!set_subset(hi.persistent, lo.persistent)) {
          result.violations.push_back(
              {"delta_antitone",
               "persistent set grew from delta=" +
                   format_rational(delta_grid[d]) + " to " +
                   format_rational(delta_grid[d + 1]) + " at " +
                   hi.scale.to_string()});
        }
        if (lo.stable.has_value() && hi.stable.has_value() &&
            !set_subset(*hi.stable, *lo.stable)) {
          result.violations.push_back(
              {"delta_antitone",
               "stable set grew from delta=" + format_rational(delta_grid[d]) +
                   " to " + format_rational(delta_grid[d + 1]) + " at " +
                   hi.scale.to_string()});
        }
      }
    }
  }

  // Law: per-psi b_sets shrink as the radius grows, checked on the family
  // valid at radius_max (its members are valid at every smaller radius).
  for (const Rational& delta : delta_grid) {
    const PerturbationSet& family = family_at(delta, radius_max);
    for (std::size_t i = 0; i < family.actions.size(); ++i) {
      for (const Rational& eps : eps_grid) {
        for (std::size_t r = 0; r + 1 < radius_grid.size(); ++r) {
          const PointSet coarse =
              b_set(phi, family.actions[i], eps, radius_grid[r]);
          const PointSet fine =
              b_set(phi, family.actions[i], eps, radius_grid[r + 1]);
          if (!set_subset(fine, coarse)) {
            result.violations.push_back(
                {"radius_b_set",
                 "b_set grew from R=" + std::to_string(radius_grid[r]) +
                     " to R=" + std::to_string(radius_grid[r + 1]) +
                     " for family member " + std::to_string(i) + " at eps=" +
                     format_rational(eps) + ", delta=" +
                     format_rational(delta)});
          }
        }
      }
    }
  }

  // Diagnostic only: the coupled persistent cells have no radius law (the
  // constraint on the family and the shadowing requirement tighten together).
  for (const Rational& eps : eps_grid) {
    for (const Rational& delta : delta_grid) {
      for (std::size_t r = 0; r + 1 < radius_grid.size(); ++r) {
        const SweepCell& lo = cell_at(eps, delta, radius_grid[r]);
        const SweepCell& hi = cell_at(eps, delta, radius_grid[r + 1]);
        if (!set_subset(hi.persistent, lo.persistent)) {
          result.diagnostics.push_back(
              "persistent cell grew with the radius at eps=" +
              format_rational(eps) + ", delta=" + format_rational(delta) +
              " (R=" + std::to_string(radius_grid[r]) + " -> " +
              std::to_string(radius_grid[r + 1]) +
              "): the family tightened faster than the shadowing constraint");
        }
      }
    }
  }

  return result;
}

std::string SweepResult::to_json_string() const {
  ordered_json doc;
  ordered_json cell_array = ordered_json::array();
  for (const SweepCell& cell : cells) {
    ordered_json entry;
    entry["scale"] = {{"epsilon", format_rational(cell.scale.epsilon)},
                      {"delta", format_rational(cell.scale.delta)},
                      {"radius", cell.scale.radius}};
    entry["provenance"] = cell.provenance.to_string();
    entry["family_size"] = cell.family_size;
    entry["persistent"] = cell.persistent;
    if (cell.stable.has_value()) {
      entry["stable"] = *cell.stable;
    } else {
      entry["stable"] = nullptr;
      entry["stable_error"] = cell.stable_error;
    }
    cell_array.push_back(std::move(entry));
  }
  doc["cells"] = std::move(cell_array);

  // Persistence frontier: for each point and (epsilon, radius), the largest
  // grid delta keeping the point persistent. Cells arrive with delta
  // ascending within each (radius, epsilon), so overwriting keeps the max.
  ordered_json frontier = ordered_json::array();
  std::vector<std::pair<std::string, int>> key_order;
  std::map<std::pair<std::string, int>, std::map<int, std::string>> best;
  for (const SweepCell& cell : cells) {
    const auto key = std::make_pair(format_rational(cell.scale.epsilon),
                                    cell.scale.radius);
    if (!best.contains(key)) key_order.push_back(key);
    auto& row = best[key];
    for (Point x : cell.persistent) {
      row[x] = format_rational(cell.scale.delta);
    }
  }
  for (const auto& key : key_order) {
    ordered_json entry;
    entry["epsilon"] = key.first;
    entry["radius"] = key.second;
    ordered_json per_point;
    for (const auto& [x, delta] : best[key]) {
      per_point[std::to_string(x)] = delta;
    }
    entry["largest_delta"] = std::move(per_point);
    frontier.push_back(std::move(entry));
  }
  doc["persistence_frontier"] = std::move(frontier);

  ordered_json violation_array = ordered_json::array();
  for (const AuditViolation& v : violations) {
    violation_array.push_back({{"law", v.law}, {"detail", v.detail}});
  }
  doc["violations"] = std::move(violation_array);
  doc["diagnostics"] = diagnostics;
  return doc.dump(2) + "\n";
}

}  // namespace betalab
