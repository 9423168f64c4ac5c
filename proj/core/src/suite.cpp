#include "betalab/suite.hpp"

#include <chrono>

#include <json.hpp>

#include "betalab/instance_io.hpp"

namespace betalab {

using ordered_json = nlohmann::ordered_json;

namespace {

double elapsed(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

VerificationRecord check_gamma_formula_agreement(const Action& phi,
                                                 const Rational& epsilon,
                                                 const PerturbationSet& family,
                                                 int radius) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "gamma_formula_agreement";
  record.scale = Scale{epsilon, family.delta, radius};
  record.provenance = family.provenance;
  record.verdict = Verdict::Pass;

  ordered_json failures = ordered_json::array();
  std::size_t compared = 0;
  for (std::size_t i = 0; i < family.actions.size(); ++i) {
    for (Point x = 0; x < phi.space().size(); ++x) {
      const PointSet direct =
          gamma_set(phi, family.actions[i], x, epsilon, radius);
      const PointSet via_preimages =
          gamma_set_preimage_route(phi, family.actions[i], x, epsilon, radius);
      ++compared;
      if (direct != via_preimages) {
        record.verdict = Verdict::Fail;
        failures.push_back({{"psi", i},
                            {"x", x},
                            {"direct", direct},
                            {"preimage_route", via_preimages}});
      }
    }
  }
  ordered_json details;
  details["pairs_compared"] = compared;
  if (!failures.empty()) details["counterexamples"] = failures;
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

VerificationRecord check_complement_identity(const Action& phi,
                                             const Rational& epsilon,
                                             const PerturbationSet& family,
                                             int radius) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "persistent_complement_identity";
  record.scale = Scale{epsilon, family.delta, radius};
  record.provenance = family.provenance;

  const ScaleIndexedPointSet persistent =
      persistent_points(phi, epsilon, family, radius);
  const PointSet refused = c_set(phi, epsilon, family, radius);
  const PointSet via_complement =
      set_difference(full_set(phi.space().size()), refused);

  record.verdict =
      persistent.members == via_complement ? Verdict::Pass : Verdict::Fail;
  ordered_json details;
  details["persistent"] = persistent.members;
  details["refused"] = refused;
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

}  // namespace

Report run_verify_suite(const Instance& instance, const SuiteOptions& options) {
  const Action& phi = instance.action;
  Report report;
  report.fingerprint = instance_fingerprint(instance);
  report.instance_summary = std::to_string(phi.space().size()) + " points, " +
                            instance.group.to_string();

  const PerturbationSet family = make_perturbation_set(
      phi, options.delta, options.radius, options.request);

  report.records.push_back(
      check_gamma_formula_agreement(phi, options.epsilon, family,
                                    options.radius));
  report.records.push_back(
      check_complement_identity(phi, options.epsilon, family, options.radius));
  report.records.push_back(verify_persistent_dirac_characterization(
      phi, options.epsilon, family, options.radius));
  report.records.push_back(verify_persistent_measure_convexity(
      phi, options.epsilon, family, options.radius, options.trials,
      options.seed));
  report.records.push_back(verify_pointwise_persistence_measure_equivalence(
      phi, options.epsilon, family, options.radius, options.trials,
      options.seed + 1));
  report.records.push_back(verify_persistent_two_scale_closure(
      phi, options.epsilon, options.delta, options.radius, options.request));
  report.records.push_back(verify_almost_persistent_measures_persist(
      phi, options.epsilon, options.radius, options.request, options.trials,
      options.seed + 2));
  report.records.push_back(verify_equicontinuous_stability_implies_persistence(
      phi, options.epsilon, options.radius, options.request));

  std::vector<PointBijection> transports;
  if (options.explicit_bijection.has_value()) {
    transports.push_back(
        PointBijection::from_images(*options.explicit_bijection));
  } else {
    Rng bijection_rng(options.seed + 3);
    for (int b = 0; b < options.bijections; ++b) {
      Permutation images = identity_permutation(phi.space().size());
      bijection_rng.shuffle(images);
      transports.push_back(PointBijection::from_images(images));
    }
  }
  for (const PointBijection& bijection : transports) {
    report.records.push_back(verify_stable_set_conjugacy_transport(
        phi, options.epsilon, options.delta, options.radius, options.request,
        bijection));
    report.records.push_back(verify_persistent_set_conjugacy_transport(
        phi, options.epsilon, options.delta, options.radius, options.request,
        bijection));
  }

  // Computed sets at the requested scale.
  ordered_json sets;
  const ScaleIndexedPointSet persistent =
      persistent_points(phi, options.epsilon, family, options.radius);
  sets["persistent"] = persistent.members;
  try {
    const ScaleIndexedPointSet stable =
        stable_points(phi, options.epsilon, family, options.radius);
    sets["stable"] = stable.members;
  } catch (const RadiusError& err) {
    sets["stable"] = nullptr;
    sets["stable_error"] = std::string(err.what());
  }
  sets["family_size"] = family.actions.size();
  sets["family_total_yields"] = family.total_yields;
  if (family.duplicates_dropped > 0) {
    sets["family_duplicates_dropped"] = family.duplicates_dropped;
  }
  report.extra_json = sets.dump();
  return report;
}

}  // namespace betalab
