#include "betalab/conjugacy.hpp"

#include <chrono>

#include <json.hpp>

namespace betalab {

using ordered_json = nlohmann::ordered_json;

PointBijection PointBijection::from_images(std::vector<Point> images) {
  if (!is_permutation(images)) {
    throw ArgumentError("bijection image array is not a permutation");
  }
  PointBijection out;
  out.bwd_ = inverse_permutation(images);
  out.fwd_ = std::move(images);
  return out;
}

PointBijection PointBijection::identity(int n) {
  return from_images(identity_permutation(n));
}

Point PointBijection::forward(Point x) const {
  if (x < 0 || x >= size()) throw ArgumentError("point out of range");
  return fwd_[x];
}

Point PointBijection::backward(Point y) const {
  if (y < 0 || y >= size()) throw ArgumentError("point out of range");
  return bwd_[y];
}

PointBijection PointBijection::inverse() const {
  PointBijection out;
  out.fwd_ = bwd_;
  out.bwd_ = fwd_;
  return out;
}

FiniteMetricSpace pushforward_space(const FiniteMetricSpace& space,
                                    const PointBijection& bijection) {
  if (bijection.size() != space.size()) {
    throw ArgumentError("bijection size does not match the space");
  }
  const int n = space.size();
  DistanceMatrix dist(n, std::vector<Rational>(n));
  std::vector<std::string> labels(n);
  for (Point a = 0; a < n; ++a) {
    labels[bijection.forward(a)] = space.label(a);
    for (Point b = 0; b < n; ++b) {
      dist[bijection.forward(a)][bijection.forward(b)] = space.distance(a, b);
    }
  }
  return FiniteMetricSpace(std::move(dist), std::move(labels));
}

Action conjugate_action(const Action& phi, const PointBijection& bijection,
                        std::shared_ptr<const FiniteMetricSpace> target) {
  if (bijection.size() != phi.space().size()) {
    throw ArgumentError("bijection size does not match the action's space");
  }
  std::vector<Permutation> maps;
  maps.reserve(phi.generator_count());
  for (int gi = 0; gi < phi.generator_count(); ++gi) {
    Permutation conjugated(bijection.size());
    for (Point y = 0; y < bijection.size(); ++y) {
      conjugated[y] =
          bijection.forward(phi.generator_map(gi)[bijection.backward(y)]);
    }
    maps.push_back(std::move(conjugated));
  }
  return Action(std::move(target), phi.group(), std::move(maps));
}

Action conjugate_action(const Action& phi, const PointBijection& bijection) {
  auto target = std::make_shared<const FiniteMetricSpace>(
      pushforward_space(phi.space(), bijection));
  return conjugate_action(phi, bijection, std::move(target));
}

PointSet image_set(const PointSet& s, const PointBijection& bijection) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (Point x : s) out.push_back(bijection.forward(x));
  return set_sorted(std::move(out));
}

namespace {

double elapsed(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Transports the family by conjugation, preserving order and provenance.
PerturbationSet conjugate_family(const PerturbationSet& family,
                                 const PointBijection& bijection,
                                 const std::shared_ptr<const FiniteMetricSpace>&
                                     target) {
  PerturbationSet out;
  out.delta = family.delta;
  out.radius = family.radius;
  out.provenance = family.provenance;
  out.total_yields = family.total_yields;
  out.duplicates_dropped = family.duplicates_dropped;
  out.actions.reserve(family.actions.size());
  for (const Action& psi : family.actions) {
    out.actions.push_back(conjugate_action(psi, bijection, target));
  }
  return out;
}

struct TransportSetup {
  Action conjugated_base;
  PerturbationSet family;
  PerturbationSet conjugated_family;
};

TransportSetup transport_setup(const Action& phi, const Rational& delta,
                               int radius, const Provenance& request,
                               const PointBijection& bijection) {
  auto target = std::make_shared<const FiniteMetricSpace>(
      pushforward_space(phi.space(), bijection));
  PerturbationSet family = make_perturbation_set(phi, delta, radius, request);
  PerturbationSet conjugated = conjugate_family(family, bijection, target);
  return TransportSetup{conjugate_action(phi, bijection, target),
                        std::move(family), std::move(conjugated)};
}

}  // namespace

VerificationRecord verify_stable_set_conjugacy_transport(
    const Action& phi, const Rational& epsilon, const Rational& delta,
    int radius, const Provenance& request, const PointBijection& bijection) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "stable_set_conjugacy_transport";
  record.scale = Scale{epsilon, delta, radius};
  record.provenance = request;

  TransportSetup setup = transport_setup(phi, delta, radius, request, bijection);
  const ScaleIndexedPointSet original =
      stable_points(phi, epsilon, setup.family, radius);
  const ScaleIndexedPointSet transported = stable_points(
      setup.conjugated_base, epsilon, setup.conjugated_family, radius);
  const PointSet mapped = image_set(original.members, bijection);

  ordered_json details;
  details["bijection"] = bijection.images();
  details["stable"] = original.members;
  details["stable_image"] = mapped;
  details["stable_conjugated"] = transported.members;
  record.verdict =
      mapped == transported.members ? Verdict::Pass : Verdict::Fail;
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

VerificationRecord verify_persistent_set_conjugacy_transport(
    const Action& phi, const Rational& epsilon, const Rational& delta,
    int radius, const Provenance& request, const PointBijection& bijection) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.name = "persistent_set_conjugacy_transport";
  record.scale = Scale{epsilon, delta, radius};
  record.provenance = request;

  TransportSetup setup = transport_setup(phi, delta, radius, request, bijection);
  const ScaleIndexedPointSet original =
      persistent_points(phi, epsilon, setup.family, radius);
  const ScaleIndexedPointSet transported = persistent_points(
      setup.conjugated_base, epsilon, setup.conjugated_family, radius);
  const PointSet mapped = image_set(original.members, bijection);

  ordered_json details;
  details["bijection"] = bijection.images();
  details["persistent"] = original.members;
  details["persistent_image"] = mapped;
  details["persistent_conjugated"] = transported.members;
  record.verdict =
      mapped == transported.members ? Verdict::Pass : Verdict::Fail;

  // Persistence through everything makes each singleton persistent.
  const bool through_everything =
      original.members == full_set(phi.space().size());
  details["pointwise_from_global"] = through_everything;
  if (through_everything) {
    for (Point x = 0; x < phi.space().size(); ++x) {
      if (!set_contains(original.members, x)) {
        record.verdict = Verdict::Fail;
        details["pointwise_counterexample"] = x;
      }
    }
  }
  record.details_json = details.dump();
  append_sampled_note(record);
  record.wall_seconds = elapsed(start);
  return record;
}

}  // namespace betalab
