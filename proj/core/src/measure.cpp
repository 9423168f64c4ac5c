#include "betalab/measure.hpp"

#include <chrono>

#include <json.hpp>

namespace betalab {

using ordered_json = nlohmann::ordered_json;

namespace {

double elapsed(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

RationalMeasure::RationalMeasure(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  Rational total(0);
  for (Point x = 0; x < static_cast<Point>(weights_.size()); ++x) {
    if (weights_[x] < 0) {
      throw ArgumentError("measure weight at point " + std::to_string(x) +
                          " is negative");
    }
    if (weights_[x] > 0) support_.push_back(x);
    total += weights_[x];
  }
  if (total != 1) {
    throw ArgumentError("measure weights sum to " + format_rational(total) +
                        ", expected 1");
  }
  // total = 1 forces a nonempty support.
}

const Rational& RationalMeasure::weight(Point x) const {
  if (x < 0 || x >= size()) throw ArgumentError("point out of range");
  return weights_[x];
}

RationalMeasure dirac(Point x, int space_size) {
  if (x < 0 || x >= space_size) {
    throw ArgumentError("dirac point out of range");
  }
  std::vector<Rational> weights(space_size, Rational(0));
  weights[x] = 1;
  return RationalMeasure(std::move(weights));
}

Rational measure_of(const RationalMeasure& mu, const PointSet& set) {
  Rational total(0);
  for (Point x : set) total += mu.weight(x);
  return total;
}

RationalMeasure convex_combination(const std::vector<RationalMeasure>& measures,
                                   const std::vector<Rational>& coefficients) {
  if (measures.empty() || measures.size() != coefficients.size()) {
    throw ArgumentError("convex combination needs matching nonempty lists");
  }
  Rational total(0);
  for (const Rational& t : coefficients) {
    if (t <= 0) throw ArgumentError("convex coefficients must be positive");
    total += t;
  }
  if (total != 1) {
    throw ArgumentError("convex coefficients sum to " +
                        format_rational(total) + ", expected 1");
  }
  const int n = measures.front().size();
  std::vector<Rational> weights(n, Rational(0));
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (measures[i].size() != n) {
      throw ArgumentError("measures live on different spaces");
    }
    for (Point x = 0; x < n; ++x) {
      weights[x] += coefficients[i] * measures[i].weight(x);
    }
  }
  return RationalMeasure(std::move(weights));
}

RationalMeasure random_measure(Rng& rng, int space_size,
                               const PointSet& support, int lattice) {
  if (support.empty()) {
    throw ArgumentError("random measure needs a nonempty support set");
  }
  std::vector<Rational> weights(space_size, Rational(0));
  while (true) {
    Rational total(0);
    for (Point x : support) {
      const long long numer =
          static_cast<long long>(rng.bounded(lattice + 1));
      weights[x] = Rational(numer, lattice);
      total += weights[x];
    }
    if (total == 0) continue;  // all-zero draw: redraw
    for (Point x : support) weights[x] /= total;
    return RationalMeasure(std::move(weights));
  }
}

std::vector<Rational> random_convex_coefficients(Rng& rng, int k, int lattice) {
  if (k < 1) throw ArgumentError("need at least one coefficient");
  std::vector<Rational> out(k);
  Rational total(0);
  for (auto& t : out) {
    t = Rational(1 + static_cast<long long>(rng.bounded(lattice)), lattice);
    total += t;
  }
  for (auto& t : out) t /= total;
  return out;
}

MeasureVerdict is_persistent_measure(const RationalMeasure& mu,
                                     const Action& phi, const Rational& epsilon,
                                     const PerturbationSet& family,
                                     int radius) {
  if (mu.size() != phi.space().size()) {
    throw ArgumentError("measure does not live on the action's space");
  }
  for (std::size_t i = 0; i < family.actions.size(); ++i) {
    const PointSet b = b_set(phi, family.actions[i], epsilon, radius);
    if (!set_subset(mu.support(), b)) {
      return {false, static_cast<int>(i)};
    }
  }
  return {true, -1};
}

bool is_almost_persistent(const RationalMeasure& mu,
                          const ScaleIndexedPointSet& persistent_set) {
  return measure_of(mu, persistent_set.members) == 1;
}

VerificationRecord verify_persistent_dirac_characterization(
    const Action& phi, const Rational& epsilon, const PerturbationSet& family,
    int radius) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "persistent_dirac_characterization";
  record.scale = Scale{epsilon, family.delta, radius};
  record.provenance = family.provenance;

  const ScaleIndexedPointSet persistent =
      persistent_points(phi, epsilon, family, radius);
  PointSet via_dirac;
  for (Point x = 0; x < phi.space().size(); ++x) {
    if (is_persistent_measure(dirac(x, phi.space().size()), phi, epsilon,
                              family, radius)
            .persistent) {
      via_dirac.push_back(x);
    }
  }

  ordered_json details;
  details["persistent"] = persistent.members;
  details["dirac_persistent"] = via_dirac;
  record.verdict =
      persistent.members == via_dirac ? Verdict::Pass : Verdict::Fail;
  if (record.failed()) {
    details["only_persistent"] = set_difference(persistent.members, via_dirac);
    details["only_dirac"] = set_difference(via_dirac, persistent.members);
  }
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

VerificationRecord verify_persistent_measure_convexity(
    const Action& phi, const Rational& epsilon, const PerturbationSet& family,
    int radius, int trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "persistent_measure_convexity";
  record.scale = Scale{epsilon, family.delta, radius};
  record.provenance = family.provenance;

  const ScaleIndexedPointSet persistent =
      persistent_points(phi, epsilon, family, radius);
  ordered_json details;
  details["persistent"] = persistent.members;

  if (persistent.members.empty()) {
    record.verdict = Verdict::Vacuous;
    record.notes.push_back(
        "no persistent point at this scale, so no persistent measure exists");
    record.details_json = details.dump();
    record.wall_seconds = elapsed(start);
    return record;
  }

  Rng rng(seed);
  record.verdict = Verdict::Pass;
  ordered_json failures = ordered_json::array();
  int executed = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int k = 1 + rng.index(4);
    std::vector<RationalMeasure> parts;
    parts.reserve(k);
    for (int i = 0; i < k; ++i) {
      // Measures supported inside the persistent set are exactly the
      // persistent measures at this scale.
      parts.push_back(
          random_measure(rng, phi.space().size(), persistent.members));
    }
    const RationalMeasure mix =
        convex_combination(parts, random_convex_coefficients(rng, k));
    const MeasureVerdict verdict =
        is_persistent_measure(mix, phi, epsilon, family, radius);
    ++executed;
    if (!verdict.persistent) {
      record.verdict = Verdict::Fail;
      failures.push_back(
          {{"trial", trial}, {"violating_psi", verdict.violator}});
    }
  }
  details["trials"] = executed;
  if (!failures.empty()) details["counterexamples"] = failures;
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

VerificationRecord verify_pointwise_persistence_measure_equivalence(
    const Action& phi, const Rational& epsilon, const PerturbationSet& family,
    int radius, int trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "pointwise_persistence_measure_equivalence";
  record.scale = Scale{epsilon, family.delta, radius};
  record.provenance = family.provenance;

  const int n = phi.space().size();
  const ScaleIndexedPointSet persistent =
      persistent_points(phi, epsilon, family, radius);
  const bool pointwise = persistent.members == full_set(n);

  bool all_diracs = true;
  int dirac_violator = -1;
  for (Point x = 0; x < n; ++x) {
    if (!is_persistent_measure(dirac(x, n), phi, epsilon, family, radius)
             .persistent) {
      all_diracs = false;
      dirac_violator = x;
      break;
    }
  }

  record.verdict = Verdict::Pass;
  ordered_json details;
  details["pointwise_persistent"] = pointwise;
  details["all_diracs_persistent"] = all_diracs;

  // Forward direction: pointwise persistence makes every measure persistent
  // (diracs plus a seeded batch). Converse: persistent diracs pin every point.
  if (pointwise) {
    if (!all_diracs) {
      record.verdict = Verdict::Fail;
      details["dirac_violator"] = dirac_violator;
    }
    Rng rng(seed);
    ordered_json failures = ordered_json::array();
    for (int trial = 0; trial < trials; ++trial) {
      const RationalMeasure mu = random_measure(rng, n, full_set(n));
      const MeasureVerdict verdict =
          is_persistent_measure(mu, phi, epsilon, family, radius);
      if (!verdict.persistent) {
        record.verdict = Verdict::Fail;
        failures.push_back(
            {{"trial", trial}, {"violating_psi", verdict.violator}});
      }
    }
    details["trials"] = trials;
    if (!failures.empty()) details["counterexamples"] = failures;
  } else if (all_diracs) {
    // Diracs all persistent but some point is not: the biconditional broke.
    record.verdict = Verdict::Fail;
    details["not_persistent"] =
        set_difference(full_set(n), persistent.members);
  }
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

VerificationRecord verify_almost_persistent_measures_persist(
    const Action& phi, const Rational& epsilon, int radius,
    const Provenance& request, int trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "almost_persistent_measures_persist";
  record.provenance = request;

  const Rational half = epsilon / 2;
  const Rational eta = equicontinuity_modulus(phi, half, radius);
  record.scale = Scale{epsilon, eta, radius};
  if (eta == 0) {
    record.verdict = Verdict::Vacuous;
    record.notes.push_back("equicontinuity modulus at epsilon/2 is zero");
    record.wall_seconds = elapsed(start);
    return record;
  }

  const PerturbationSet family =
      make_perturbation_set(phi, eta, radius, request);
  const ScaleIndexedPointSet fine = persistent_points(phi, half, family, radius);

  ordered_json details;
  details["eta"] = format_rational(eta);
  details["persistent_at_half"] = fine.members;

  if (fine.members.empty()) {
    record.verdict = Verdict::Vacuous;
    record.notes.push_back(
        "no persistent point at epsilon/2: no supported measure to test");
    record.details_json = details.dump();
    record.wall_seconds = elapsed(start);
    return record;
  }

  Rng rng(seed);
  record.verdict = Verdict::Pass;
  ordered_json failures = ordered_json::array();
  for (int trial = 0; trial < trials; ++trial) {
    const RationalMeasure mu =
        random_measure(rng, phi.space().size(), fine.members);
    const MeasureVerdict verdict =
        is_persistent_measure(mu, phi, epsilon, family, radius);
    if (!verdict.persistent) {
      record.verdict = Verdict::Fail;
      failures.push_back(
          {{"trial", trial}, {"violating_psi", verdict.violator}});
    }
  }
  details["trials"] = trials;
  if (!failures.empty()) details["counterexamples"] = failures;
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

}  // namespace betalab
