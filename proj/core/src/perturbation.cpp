#include "betalab/perturbation.hpp"

#include <map>
#include <sstream>

#include "betalab/rng.hpp"

namespace betalab {

std::string Provenance::to_string() const {
  if (kind == Kind::Exhaustive) return "exhaustive";
  std::ostringstream out;
  out << "sampled(seed=" << seed << ",count=" << count << ")";
  return out.str();
}

namespace {

// All bijections x -> candidates[x], lexicographic in the image arrays.
// Aborts with EnumerationCapError once more than `cap` are found.
std::vector<Permutation> candidate_permutations(
    const std::vector<PointSet>& candidates, std::uint64_t cap) {
  const int n = static_cast<int>(candidates.size());
  std::vector<Permutation> out;
  Permutation current(n, -1);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, int x) -> void {
    if (x == n) {
      if (out.size() >= cap) {
        throw EnumerationCapError(
            "candidate permutation count exceeds the enumeration cap (" +
            std::to_string(cap) + "); use sampled mode");
      }
      out.push_back(current);
      return;
    }
    for (Point image : candidates[x]) {
      if (used[image]) continue;
      used[image] = true;
      current[x] = image;
      self(self, x + 1);
      used[image] = false;
    }
  };
  extend(extend, 0);
  return out;
}

// One seeded bijection x -> candidates[x]: image choices are shuffled per
// point, then resolved by backtracking; succeeds whenever any bijection
// exists (the base action always provides one).
Permutation random_candidate_permutation(
    const std::vector<PointSet>& candidates, Rng& rng) {
  const int n = static_cast<int>(candidates.size());
  std::vector<PointSet> shuffled = candidates;
  for (auto& options : shuffled) rng.shuffle(options);

  Permutation current(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (Point image : shuffled[x]) {
      if (used[image]) continue;
      used[image] = true;
      current[x] = image;
      if (self(self, x + 1)) return true;
      used[image] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) {
    throw SamplingSaturationError("no bijection within the displacement bound");
  }
  return current;
}

std::vector<std::vector<PointSet>> generator_candidates(const Action& base,
                                                        const Rational& delta) {
  const FiniteMetricSpace& space = base.space();
  std::vector<std::vector<PointSet>> all;
  all.reserve(base.generator_count());
  for (int gi = 0; gi < base.generator_count(); ++gi) {
    std::vector<PointSet> per_point;
    per_point.reserve(space.size());
    for (Point x = 0; x < space.size(); ++x) {
      per_point.push_back(space.closed_ball(base.generator_map(gi)[x], delta));
    }
    all.push_back(std::move(per_point));
  }
  return all;
}

std::string action_signature(const std::vector<Permutation>& maps) {
  std::ostringstream out;
  for (const auto& m : maps) {
    for (Point p : m) out << p << ',';
    out << ';';
  }
  return out.str();
}

}  // namespace

PerturbationSet enumerate_perturbations(const Action& base,
                                        const Rational& delta, int radius,
                                        std::uint64_t cap) {
  if (delta < 0) throw ArgumentError("delta must be nonnegative");
  if (radius == 0) {
    throw RadiusError(
        "radius 0 makes the closeness constraint vacuous for generator "
        "choice (degenerate scale); use radius >= 1");
  }
  if (radius < 0) throw ArgumentError("radius must be nonnegative");

  const CayleyBall ball = base.group().cayley_ball(radius);
  const auto candidates = generator_candidates(base, delta);

  std::vector<std::vector<Permutation>> per_generator;
  std::uint64_t product = 1;
  for (const auto& per_point : candidates) {
    per_generator.push_back(candidate_permutations(per_point, cap));
    const std::uint64_t count = per_generator.back().size();
    if (count == 0) {
      product = 0;
      break;
    }
    if (product > cap / count) {
      throw EnumerationCapError(
          "per-generator candidate product exceeds the enumeration cap (" +
          std::to_string(cap) + "); use sampled mode");
    }
    product *= count;
  }

  PerturbationSet out;
  out.delta = delta;
  out.radius = radius;
  out.provenance = Provenance::exhaustive();

  const int gens = base.generator_count();
  std::vector<std::size_t> pick(gens, 0);
  if (product > 0) {
    while (true) {
      std::vector<Permutation> maps;
      maps.reserve(gens);
      for (int gi = 0; gi < gens; ++gi) {
        maps.push_back(per_generator[gi][pick[gi]]);
      }
      if (relations_hold(base.group(), maps).ok) {
        Action candidate(Action::Trusted{}, base.space_ptr(), base.group(),
                         std::move(maps));
        if (action_distance_within(base, candidate, ball, delta)) {
          out.actions.push_back(std::move(candidate));
        }
      }
      // Odometer, last generator fastest.
      int gi = gens - 1;
      while (gi >= 0) {
        if (++pick[gi] < per_generator[gi].size()) break;
        pick[gi] = 0;
        --gi;
      }
      if (gi < 0) break;
    }
  }
  out.total_yields = out.actions.size();
  return out;
}

PerturbationSet sample_perturbations(const Action& base, const Rational& delta,
                                     int radius, std::uint64_t seed, int count,
                                     std::uint64_t max_attempts) {
  if (delta < 0) throw ArgumentError("delta must be nonnegative");
  if (radius < 0) throw ArgumentError("radius must be nonnegative");
  if (count < 1) throw ArgumentError("sample count must be >= 1");

  const CayleyBall ball = base.group().cayley_ball(radius);
  const auto candidates = generator_candidates(base, delta);

  PerturbationSet out;
  out.delta = delta;
  out.radius = radius;
  out.provenance = Provenance::sampled(seed, count);

  std::map<std::string, int> seen;
  auto admit = [&](const Action& action) {
    out.total_yields += 1;
    auto [it, inserted] =
        seen.emplace(action_signature(action.generator_maps()),
                     static_cast<int>(out.actions.size()));
    if (inserted) {
      out.actions.push_back(action);
    } else {
      out.duplicates_dropped += 1;
    }
  };

  admit(base);  // the trivial perturbation is never missed

  Rng rng(seed);
  if (max_attempts == 0) {
    max_attempts = 1000 + 200 * static_cast<std::uint64_t>(count);
  }
  std::uint64_t attempts = 0;
  while (out.total_yields < static_cast<std::size_t>(count)) {
    if (attempts++ >= max_attempts) {
      throw SamplingSaturationError(
          "sampling retry cap exhausted after " + std::to_string(attempts - 1) +
          " attempts (" + std::to_string(out.total_yields) + "/" +
          std::to_string(count) + " yields); the constraint is too tight");
    }
    std::vector<Permutation> maps;
    maps.reserve(base.generator_count());
    for (int gi = 0; gi < base.generator_count(); ++gi) {
      maps.push_back(random_candidate_permutation(candidates[gi], rng));
    }
    if (!relations_hold(base.group(), maps).ok) continue;
    Action candidate(Action::Trusted{}, base.space_ptr(), base.group(),
                     std::move(maps));
    if (!action_distance_within(base, candidate, ball, delta)) continue;
    admit(candidate);
  }
  return out;
}

PerturbationSet make_perturbation_set(const Action& base, const Rational& delta,
                                      int radius, const Provenance& request) {
  if (request.kind == Provenance::Kind::Exhaustive) {
    return enumerate_perturbations(base, delta, radius);
  }
  return sample_perturbations(base, delta, radius, request.seed, request.count);
}

}  // namespace betalab
