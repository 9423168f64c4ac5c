#include <doctest.h>

#include "betalab/conjugacy.hpp"
#include "betalab/instances.hpp"
#include "support/corpus.hpp"

using namespace betalab;
using namespace betalab::testsupport;

TEST_CASE("bijection validation and inversion") {
  CHECK_THROWS_AS(PointBijection::from_images({0, 0, 1}), ArgumentError);
  const PointBijection swap = PointBijection::from_images({2, 1, 0});
  CHECK(swap.forward(0) == 2);
  CHECK(swap.backward(2) == 0);
  const PointBijection inv = swap.inverse();
  for (Point x = 0; x < 3; ++x) {
    CHECK(inv.forward(swap.forward(x)) == x);
    CHECK(swap.forward(inv.forward(x)) == x);
  }
}

TEST_CASE("pushforward metrics") {
  const Instance l3 = build_l3();
  const PointBijection id = PointBijection::identity(3);
  CHECK(pushforward_space(*l3.space, id) == *l3.space);

  const PointBijection relabel = PointBijection::from_images({2, 1, 0});
  const FiniteMetricSpace moved = pushforward_space(*l3.space, relabel);
  CHECK(moved.distance(2, 1) == rat(1));  // image of the old edge (0,1)
  CHECK(moved.distance(0, 2) == rat(2));
  CHECK(validate_metric(moved.matrix()).ok);
  // Transporting back restores the original matrix.
  const FiniteMetricSpace back = pushforward_space(moved, relabel.inverse());
  CHECK(back.matrix() == l3.space->matrix());
}

TEST_CASE("conjugated actions") {
  const Instance c6 = build_c6();
  const PointBijection id = PointBijection::identity(6);
  CHECK(conjugate_action(c6.action, id).generator_map(0) ==
        c6.action.generator_map(0));

  Permutation reflect(6);
  for (int i = 0; i < 6; ++i) reflect[i] = (6 - i) % 6;
  const PointBijection mirror = PointBijection::from_images(reflect);
  const Action conjugated = conjugate_action(c6.action, mirror);
  Permutation counter_rotation(6);
  for (int i = 0; i < 6; ++i) counter_rotation[i] = (i + 5) % 6;
  CHECK(conjugated.generator_map(0) == counter_rotation);

  const Action round_trip = conjugate_action(conjugated, mirror.inverse());
  CHECK(round_trip.generator_map(0) == c6.action.generator_map(0));
}

TEST_CASE("isometric transport commutes with every set computation") {
  const Instance instance = random_cyclic_instance(4, 2, 77);
  Rng rng(78);
  Permutation images = identity_permutation(4);
  rng.shuffle(images);
  const PointBijection bijection = PointBijection::from_images(images);

  auto target = std::make_shared<const FiniteMetricSpace>(
      pushforward_space(*instance.space, bijection));
  const Action conjugated = conjugate_action(instance.action, bijection, target);

  const PerturbationSet family =
      enumerate_perturbations(instance.action, rat(1), 1);
  const Rational eps = rat(1, 2);
  for (const Action& psi : family.actions) {
    const Action psi_conjugated = conjugate_action(psi, bijection, target);
    for (Point x = 0; x < 4; ++x) {
      CHECK(image_set(gamma_set(instance.action, psi, x, eps, 1), bijection) ==
            gamma_set(conjugated, psi_conjugated, bijection.forward(x), eps,
                      1));
    }
    CHECK(image_set(b_set(instance.action, psi, eps, 1), bijection) ==
          b_set(conjugated, psi_conjugated, eps, 1));
  }
}

TEST_CASE("stable and persistent sets transport along bijections") {
  const Instance l3 = build_l3();
  const PointBijection id = PointBijection::identity(3);
  CHECK(verify_stable_set_conjugacy_transport(l3.action, rat(1, 2), rat(1), 1,
                                              Provenance::exhaustive(), id)
            .verdict == Verdict::Pass);

  const PointBijection relabel = PointBijection::from_images({2, 1, 0});
  CHECK(verify_stable_set_conjugacy_transport(l3.action, rat(1, 2), rat(1), 1,
                                              Provenance::exhaustive(),
                                              relabel)
            .verdict == Verdict::Pass);
  CHECK(verify_persistent_set_conjugacy_transport(l3.action, rat(1, 2), rat(1),
                                                  1, Provenance::exhaustive(),
                                                  relabel)
            .verdict == Verdict::Pass);
  // A scale where the sets are nonempty.
  CHECK(verify_persistent_set_conjugacy_transport(l3.action, rat(1), rat(1), 1,
                                                  Provenance::exhaustive(),
                                                  relabel)
            .verdict == Verdict::Pass);
}

TEST_CASE("transport on the circle with exhaustive and sampled families") {
  const Instance c6 = build_c6();
  Permutation reflect(6);
  for (int i = 0; i < 6; ++i) reflect[i] = (6 - i) % 6;
  const PointBijection mirror = PointBijection::from_images(reflect);

  CHECK(verify_stable_set_conjugacy_transport(c6.action, rat(2), rat(1), 3,
                                              Provenance::exhaustive(), mirror)
            .verdict == Verdict::Pass);
  const VerificationRecord sampled = verify_persistent_set_conjugacy_transport(
      c6.action, rat(2), rat(1), 3, Provenance::sampled(99, 40), mirror);
  CHECK(sampled.verdict == Verdict::Pass);
  REQUIRE_FALSE(sampled.notes.empty());
  CHECK(sampled.notes.front() == "sampled — not a proof");
}

TEST_CASE("round trip through a bijection restores the original sets") {
  const Instance l3 = build_l3();
  const PointBijection relabel = PointBijection::from_images({1, 2, 0});
  auto target = std::make_shared<const FiniteMetricSpace>(
      pushforward_space(*l3.space, relabel));
  const Action conjugated = conjugate_action(l3.action, relabel, target);

  const PerturbationSet family =
      enumerate_perturbations(l3.action, rat(1), 1);
  const PointSet original =
      persistent_points(l3.action, rat(1), family, 1).members;

  const PerturbationSet conjugated_family =
      enumerate_perturbations(conjugated, rat(1), 1);
  const PointSet there =
      persistent_points(conjugated, rat(1), conjugated_family, 1).members;
  CHECK(image_set(original, relabel) == there);
  CHECK(image_set(there, relabel.inverse()) == original);
}
