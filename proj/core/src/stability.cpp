#include "betalab/stability.hpp"

#include <chrono>
#include <deque>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace betalab {

using ordered_json = nlohmann::ordered_json;

namespace {

using PermList = std::vector<Permutation>;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

bool gamma_member(const FiniteMetricSpace& space, const PermList& phi_perms,
                  const PermList& psi_perms, Point x, Point y,
                  const Rational& epsilon) {
  for (std::size_t k = 0; k < phi_perms.size(); ++k) {
    if (space.distance(phi_perms[k][x], psi_perms[k][y]) > epsilon) {
      return false;
    }
  }
  return true;
}

PointSet gamma_from_perms(const FiniteMetricSpace& space,
                          const PermList& phi_perms, const PermList& psi_perms,
                          Point x, const Rational& epsilon) {
  PointSet out;
  for (Point y = 0; y < space.size(); ++y) {
    if (gamma_member(space, phi_perms, psi_perms, x, y, epsilon)) {
      out.push_back(y);
    }
  }
  return out;
}

bool b_member(const FiniteMetricSpace& space, const PermList& phi_perms,
              const PermList& psi_perms, Point x, const Rational& epsilon) {
  for (Point y = 0; y < space.size(); ++y) {
    if (gamma_member(space, phi_perms, psi_perms, x, y, epsilon)) return true;
  }
  return false;
}

void check_epsilon(const Rational& epsilon) {
  if (epsilon < 0) throw ArgumentError("epsilon must be nonnegative");
}

void check_point(const FiniteMetricSpace& space, Point x) {
  if (x < 0 || x >= space.size()) {
    throw ArgumentError("point index " + std::to_string(x) +
                        " outside space of size " +
                        std::to_string(space.size()));
  }
}

// Max over the ball of d(phi_g(x), phi_g(y)) for every pair, reused by the
// modulus computations.
std::vector<std::vector<Rational>> orbit_pair_spread(const Action& phi,
                                                     int radius) {
  const FiniteMetricSpace& space = phi.space();
  const CayleyBall ball = phi.group().cayley_ball(radius);
  const auto perms = phi.ball_permutations(ball);
  std::vector<std::vector<Rational>> spread(
      space.size(), std::vector<Rational>(space.size(), Rational(0)));
  for (Point x = 0; x < space.size(); ++x) {
    for (Point y = x + 1; y < space.size(); ++y) {
      Rational best(0);
      for (const auto& perm : perms) {
        const Rational& d = space.distance(perm[x], perm[y]);
        if (d > best) best = d;
      }
      spread[x][y] = best;
      spread[y][x] = std::move(best);
    }
  }
  return spread;
}

}  // namespace

PointSet gamma_set(const Action& phi, const Action& psi, Point x,
                   const Rational& epsilon, int radius) {
  require_comparable(phi, psi);
  check_epsilon(epsilon);
  check_point(phi.space(), x);
  const CayleyBall ball = phi.group().cayley_ball(radius);
  return gamma_from_perms(phi.space(), phi.ball_permutations(ball),
                          psi.ball_permutations(ball), x, epsilon);
}

PointSet gamma_set_preimage_route(const Action& phi, const Action& psi,
                                  Point x, const Rational& epsilon,
                                  int radius) {
  require_comparable(phi, psi);
  check_epsilon(epsilon);
  check_point(phi.space(), x);
  const FiniteMetricSpace& space = phi.space();
  const CayleyBall ball = phi.group().cayley_ball(radius);
  const auto phi_perms = phi.ball_permutations(ball);
  const auto psi_perms = psi.ball_permutations(ball);

  PointSet result = full_set(space.size());
  for (int k = 0; k < ball.size() && !result.empty(); ++k) {
    // psi_{g^-1}(B[phi_g(x), eps]) = { y : psi_g(y) in B[phi_g(x), eps] }.
    const PointSet ball_k = space.closed_ball(phi_perms[k][x], epsilon);
    const Permutation psi_inverse = inverse_permutation(psi_perms[k]);
    PointSet preimage;
    preimage.reserve(ball_k.size());
    for (Point z : ball_k) preimage.push_back(psi_inverse[z]);
    result = set_intersection(result, set_sorted(std::move(preimage)));
  }
  return result;
}

PointSet b_set(const Action& phi, const Action& psi, const Rational& epsilon,
               int radius) {
  require_comparable(phi, psi);
  check_epsilon(epsilon);
  const FiniteMetricSpace& space = phi.space();
  const CayleyBall ball = phi.group().cayley_ball(radius);
  const auto phi_perms = phi.ball_permutations(ball);
  const auto psi_perms = psi.ball_permutations(ball);
  PointSet out;
  for (Point x = 0; x < space.size(); ++x) {
    if (b_member(space, phi_perms, psi_perms, x, epsilon)) out.push_back(x);
  }
  return out;
}

PointSet c_set(const Action& phi, const Rational& epsilon,
               const PerturbationSet& family, int radius) {
  check_epsilon(epsilon);
  const FiniteMetricSpace& space = phi.space();
  const CayleyBall ball = phi.group().cayley_ball(radius);
  const auto phi_perms = phi.ball_permutations(ball);
  std::vector<bool> refused(space.size(), false);
  for (const Action& psi : family.actions) {
    const auto psi_perms = psi.ball_permutations(ball);
    for (Point x = 0; x < space.size(); ++x) {
      if (!refused[x] &&
          !b_member(space, phi_perms, psi_perms, x, epsilon)) {
        refused[x] = true;
      }
    }
  }
  PointSet out;
  for (Point x = 0; x < space.size(); ++x) {
    if (refused[x]) out.push_back(x);
  }
  return out;
}

ScaleIndexedPointSet persistent_points(const Action& phi,
                                       const Rational& epsilon,
                                       const PerturbationSet& family,
                                       int radius) {
  check_epsilon(epsilon);
  const FiniteMetricSpace& space = phi.space();
  const CayleyBall ball = phi.group().cayley_ball(radius);
  const auto phi_perms = phi.ball_permutations(ball);

  PointSet members = full_set(space.size());
  for (const Action& psi : family.actions) {
    if (members.empty()) break;
    const auto psi_perms = psi.ball_permutations(ball);
    PointSet survivors;
    survivors.reserve(members.size());
    for (Point x : members) {
      if (b_member(space, phi_perms, psi_perms, x, epsilon)) {
        survivors.push_back(x);
      }
    }
    members = std::move(survivors);
  }

  // Complement identity against the independently computed refusal set.
  const PointSet refused = c_set(phi, epsilon, family, radius);
  if (set_difference(full_set(space.size()), refused) != members) {
    throw Error("internal: persistent set does not complement the refusal set");
  }

  return {Scale{epsilon, family.delta, radius}, std::move(members),
          family.provenance};
}

Point StabilityWitness::image_of(Point z) const {
  for (const auto& [from, to] : map) {
    if (from == z) return to;
  }
  throw ArgumentError("point not in the witness domain");
}

WitnessResult semiconjugacy_search(const Action& phi, const Action& psi,
                                   Point x, const Rational& epsilon,
                                   int radius) {
  require_comparable(phi, psi);
  check_epsilon(epsilon);
  check_point(phi.space(), x);
  const FiniteMetricSpace& space = phi.space();

  const Orbit orb = orbit(psi, x, radius);
  if (!orb.saturated) {
    throw RadiusError("orbit of point " + std::to_string(x) +
                      " is not saturated at radius " + std::to_string(radius) +
                      "; enlarge the radius to capture the orbit closure");
  }

  bool saw_ill_defined = false;
  bool saw_displacement = false;
  std::optional<StabilityWitness> best;

  for (Point anchor : space.closed_ball(x, epsilon)) {
    // Propagate h(x) = anchor through the generator maps over the orbit;
    // equivariance on every generator extends to all group elements.
    std::vector<Point> image(space.size(), -1);
    image[x] = anchor;
    std::deque<Point> queue{x};
    bool ill_defined = false;
    while (!queue.empty() && !ill_defined) {
      const Point z = queue.front();
      queue.pop_front();
      for (int gi = 0; gi < psi.generator_count() && !ill_defined; ++gi) {
        for (int sign : {+1, -1}) {
          const int letter = sign * (gi + 1);
          const Point z2 = psi.apply_letter(letter, z);
          const Point target = phi.apply_letter(letter, image[z]);
          if (image[z2] < 0) {
            image[z2] = target;
            queue.push_back(z2);
          } else if (image[z2] != target) {
            ill_defined = true;
            break;
          }
        }
      }
    }
    if (ill_defined) {
      saw_ill_defined = true;
      continue;
    }
    Rational displacement(0);
    for (Point z : orb.points) {
      const Rational& d = space.distance(image[z], z);
      if (d > displacement) displacement = d;
    }
    if (displacement > epsilon) {
      saw_displacement = true;
      continue;
    }
    if (!best || displacement < best->max_displacement) {
      StabilityWitness witness;
      witness.base_point = x;
      witness.anchor = anchor;
      for (Point z : orb.points) witness.map.emplace_back(z, image[z]);
      witness.max_displacement = displacement;
      best = std::move(witness);
    }
  }

  if (best) return *best;

  NoWitness none;
  if (saw_ill_defined && saw_displacement) {
    none.reason = NoWitness::Reason::Mixed;
    none.detail = "every anchor failed: some ill-defined, some displaced";
  } else if (saw_ill_defined) {
    none.reason = NoWitness::Reason::IllDefined;
    none.detail = "every anchor makes the induced map ill-defined";
  } else {
    none.reason = NoWitness::Reason::Displacement;
    none.detail = "every anchor displaces some orbit point beyond epsilon";
  }
  return none;
}

bool audit_witness(const Action& phi, const Action& psi,
                   const StabilityWitness& witness, const Rational& epsilon,
                   int radius) {
  const FiniteMetricSpace& space = phi.space();
  const Orbit orb = orbit(psi, witness.base_point, radius);
  if (!orb.saturated) return false;

  std::vector<Point> image(space.size(), -1);
  for (const auto& [z, hz] : witness.map) image[z] = hz;
  // Totality on the orbit.
  for (Point z : orb.points) {
    if (image[z] < 0) return false;
  }
  if (image[witness.base_point] != witness.anchor) return false;
  // Generator equivariance on the orbit (hence equivariance everywhere).
  for (Point z : orb.points) {
    for (int gi = 0; gi < psi.generator_count(); ++gi) {
      if (image[psi.generator_map(gi)[z]] !=
          phi.generator_map(gi)[image[z]]) {
        return false;
      }
    }
  }
  // Ball-anchored equivariance and the displacement bound.
  const CayleyBall ball = phi.group().cayley_ball(radius);
  const auto phi_perms = phi.ball_permutations(ball);
  const auto psi_perms = psi.ball_permutations(ball);
  Rational displacement(0);
  for (Point z : orb.points) {
    const Rational& d = space.distance(image[z], z);
    if (d > displacement) displacement = d;
  }
  if (displacement != witness.max_displacement || displacement > epsilon) {
    return false;
  }
  for (int k = 0; k < ball.size(); ++k) {
    if (image[psi_perms[k][witness.base_point]] !=
        phi_perms[k][witness.anchor]) {
      return false;
    }
  }
  return true;
}

ScaleIndexedPointSet stable_points(const Action& phi, const Rational& epsilon,
                                   const PerturbationSet& family, int radius) {
  check_epsilon(epsilon);
  const FiniteMetricSpace& space = phi.space();
  PointSet members;
  for (Point x = 0; x < space.size(); ++x) {
    bool stable = true;
    for (std::size_t i = 0; i < family.actions.size() && stable; ++i) {
      try {
        stable = std::holds_alternative<StabilityWitness>(
            semiconjugacy_search(phi, family.actions[i], x, epsilon, radius));
      } catch (const RadiusError& err) {
        throw RadiusError("stable_points: point " + std::to_string(x) +
                          " under family member " + std::to_string(i) + ": " +
                          err.what());
      }
    }
    if (stable) members.push_back(x);
  }
  return {Scale{epsilon, family.delta, radius}, std::move(members),
          family.provenance};
}

namespace {

// Largest admissible delta among the candidates (descending), falling back
// to delta = epsilon when no positive candidate works; `admissible` must be
// antitone (valid at d implies valid below d).
Rational largest_admissible(const std::vector<Rational>& candidates_desc,
                            const Rational& epsilon,
                            const std::function<bool(const Rational&)>& valid) {
  for (const Rational& d : candidates_desc) {
    if (valid(d)) return d;
  }
  if (epsilon > 0 && valid(epsilon)) return epsilon;
  return Rational(0);
}

}  // namespace

Rational equicontinuity_modulus(const Action& phi, const Rational& epsilon,
                                int radius) {
  check_epsilon(epsilon);
  const FiniteMetricSpace& space = phi.space();
  const auto spread = orbit_pair_spread(phi, radius);

  auto valid = [&](const Rational& delta) {
    for (Point x = 0; x < space.size(); ++x) {
      for (Point y = x + 1; y < space.size(); ++y) {
        if (space.distance(x, y) <= delta && spread[x][y] > epsilon) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<Rational> candidates = space.realized_distances();
  std::reverse(candidates.begin(), candidates.end());
  return largest_admissible(candidates, epsilon, valid);
}

Rational pointwise_equicontinuity_modulus(const Action& phi, Point x,
                                          const Rational& epsilon,
                                          int radius) {
  check_epsilon(epsilon);
  const FiniteMetricSpace& space = phi.space();
  const auto spread = orbit_pair_spread(phi, radius);

  auto valid = [&](const Rational& delta) {
    for (Point y = 0; y < space.size(); ++y) {
      if (y != x && space.distance(x, y) <= delta && spread[x][y] > epsilon) {
        return false;
      }
    }
    return true;
  };

  std::vector<Rational> candidates = space.realized_distances();
  std::reverse(candidates.begin(), candidates.end());
  return largest_admissible(candidates, epsilon, valid);
}

VerificationRecord verify_equicontinuous_stability_implies_persistence(
    const Action& phi, const Rational& epsilon, int radius,
    const Provenance& request) {
  Stopwatch timer;
  VerificationRecord record;
  record.name = "equicontinuous_stability_implies_persistence";
  record.provenance = request;

  const Rational half = epsilon / 2;
  const Rational eta = equicontinuity_modulus(phi, half, radius);
  record.scale = Scale{epsilon, eta, radius};

  if (eta == 0) {
    record.verdict = Verdict::Vacuous;
    record.notes.push_back(
        "equicontinuity modulus at epsilon/2 is zero; only the base action "
        "qualifies");
    record.wall_seconds = timer.seconds();
    return record;
  }

  const PerturbationSet family =
      make_perturbation_set(phi, eta, radius, request);
  const ScaleIndexedPointSet stable = stable_points(phi, eta, family, radius);
  const ScaleIndexedPointSet persistent =
      persistent_points(phi, epsilon, family, radius);

  ordered_json details;
  details["eta"] = format_rational(eta);
  details["family_size"] = family.actions.size();
  details["stable"] = stable.members;
  details["persistent"] = persistent.members;

  record.verdict = Verdict::Pass;
  if (!set_subset(stable.members, persistent.members)) {
    record.verdict = Verdict::Fail;
    details["stable_not_persistent"] =
        set_difference(stable.members, persistent.members);
  }

  // Triangle audit of the concluding bound on every witness:
  // d(phi_g(x), psi_g(x)) <= d(phi_g(x), phi_g(h(x))) +
  //                          d(h(psi_g(x)), psi_g(x)) <= eps.
  const FiniteMetricSpace& space = phi.space();
  const CayleyBall ball = phi.group().cayley_ball(radius);
  const auto phi_perms = phi.ball_permutations(ball);
  std::size_t audited = 0;
  ordered_json failures = ordered_json::array();
  for (Point x : stable.members) {
    for (std::size_t i = 0; i < family.actions.size(); ++i) {
      const Action& psi = family.actions[i];
      const WitnessResult found =
          semiconjugacy_search(phi, psi, x, eta, radius);
      const auto* witness = std::get_if<StabilityWitness>(&found);
      if (witness == nullptr || !audit_witness(phi, psi, *witness, eta, radius)) {
        record.verdict = Verdict::Fail;
        failures.push_back({{"kind", "witness_audit"}, {"x", x}, {"psi", i}});
        continue;
      }
      const auto psi_perms = psi.ball_permutations(ball);
      std::vector<Point> image(space.size(), -1);
      for (const auto& [z, hz] : witness->map) image[z] = hz;
      for (int k = 0; k < ball.size(); ++k) {
        const Point phix = phi_perms[k][x];
        const Point psix = psi_perms[k][x];
        const Rational lhs = space.distance(phix, psix);
        const Rational term1 = space.distance(phix, phi_perms[k][image[x]]);
        const Rational term2 = space.distance(image[psix], psix);
        if (lhs > term1 + term2 || term1 + term2 > epsilon) {
          record.verdict = Verdict::Fail;
          failures.push_back({{"kind", "triangle"},
                              {"x", x},
                              {"psi", i},
                              {"g", ball.elements[k].to_string()}});
        }
      }
      ++audited;
    }
  }
  details["witnesses_audited"] = audited;
  if (!failures.empty()) details["counterexamples"] = failures;
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = timer.seconds();
  return record;
}

VerificationRecord verify_persistent_two_scale_closure(
    const Action& phi, const Rational& epsilon, const Rational& delta,
    int radius, const Provenance& request) {
  Stopwatch timer;
  VerificationRecord record;
  record.name = "persistent_two_scale_closure";
  record.scale = Scale{epsilon, delta, radius};
  record.provenance = request;

  const Rational half = epsilon / 2;
  const Rational eta = equicontinuity_modulus(phi, half, radius);
  if (eta == 0) {
    record.verdict = Verdict::Vacuous;
    record.notes.push_back("equicontinuity modulus at epsilon/2 is zero");
    record.wall_seconds = timer.seconds();
    return record;
  }

  const PerturbationSet family =
      make_perturbation_set(phi, delta, radius, request);
  const ScaleIndexedPointSet fine =
      persistent_points(phi, half, family, radius);
  const ScaleIndexedPointSet coarse =
      persistent_points(phi, epsilon, family, radius);

  const FiniteMetricSpace& space = phi.space();
  record.verdict = Verdict::Pass;
  ordered_json details;
  details["eta"] = format_rational(eta);
  ordered_json failures = ordered_json::array();
  for (Point x = 0; x < space.size(); ++x) {
    for (Point fine_point : fine.members) {
      if (space.distance(x, fine_point) <= eta &&
          !set_contains(coarse.members, x)) {
        record.verdict = Verdict::Fail;
        failures.push_back({{"x", x}, {"near", fine_point}});
      }
    }
  }
  if (!failures.empty()) details["counterexamples"] = failures;
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = timer.seconds();
  return record;
}

}  // namespace betalab
