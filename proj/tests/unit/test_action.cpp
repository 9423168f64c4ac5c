#include <doctest.h>

#include "betalab/action.hpp"
#include "betalab/instances.hpp"
#include "support/oracles.hpp"

using namespace betalab;
using namespace betalab::testsupport;

TEST_CASE("identity element fixes every point") {
  const Instance c6 = build_c6();
  for (Point x = 0; x < 6; ++x) {
    CHECK(c6.action.evaluate(c6.group.identity(), x) == x);
  }
}

TEST_CASE("rotation powers on the circle") {
  const Instance c6 = build_c6();
  GroupElement cubed = c6.group.identity();
  cubed.exps[0] = 3;
  CHECK(c6.action.evaluate(cubed, 2) == 5);
  GroupElement inverse = c6.group.identity();
  inverse.exps[0] = -1;
  CHECK(c6.action.evaluate(inverse, 0) == 5);
}

TEST_CASE("foreign group elements are rejected") {
  const Instance c6 = build_c6();
  CHECK_THROWS_AS(c6.action.evaluate(GroupModel::cyclic(2).identity(), 0),
                  ArgumentError);
}

TEST_CASE("evaluation respects composition") {
  const Instance c6 = build_c6();
  const auto l3 = build_l3();
  auto space4 = std::make_shared<const FiniteMetricSpace>(
      random_metric_space(4, 99));
  const Action free_action(space4, GroupModel::free(2),
                           {Permutation{1, 0, 3, 2}, Permutation{1, 2, 3, 0}});
  const std::vector<const Action*> actions = {&c6.action, &l3.action,
                                              &free_action};
  for (const Action* action : actions) {
    const CayleyBall ball = action->group().cayley_ball(2);
    for (const GroupElement& g : ball.elements) {
      for (const GroupElement& h : ball.elements) {
        const GroupElement gh = action->group().compose(g, h);
        for (Point x = 0; x < action->space().size(); ++x) {
          CHECK(action->evaluate(gh, x) ==
                action->evaluate(g, action->evaluate(h, x)));
        }
      }
    }
  }
}

TEST_CASE("ball permutations agree with evaluation") {
  const Instance c6 = build_c6();
  const CayleyBall ball = c6.group.cayley_ball(3);
  const auto perms = c6.action.ball_permutations(ball);
  for (int k = 0; k < ball.size(); ++k) {
    for (Point x = 0; x < 6; ++x) {
      CHECK(perms[k][x] == c6.action.evaluate(ball.elements[k], x));
      CHECK(perms[k][x] == oracle_evaluate(c6.action, ball.elements[k], x));
    }
  }
}

TEST_CASE("action distance") {
  const Instance c6 = build_c6();
  const CayleyBall ball = c6.group.cayley_ball(2);
  CHECK(action_distance(c6.action, c6.action, ball) == 0);

  Permutation counter_rotation(6);
  for (int i = 0; i < 6; ++i) counter_rotation[i] = (i + 5) % 6;
  const Action reversed(c6.space, c6.group, {counter_rotation});
  const std::vector<GroupElement> just_s = {c6.group.generator(0)};
  CHECK(action_distance(c6.action, reversed, just_s) == rat(2));

  const Instance l3 = build_l3();
  const Action swapped(l3.space, l3.group, {Permutation{1, 0, 2}});
  const std::vector<GroupElement> e_and_s = {l3.group.identity(),
                                             l3.group.generator(0)};
  CHECK(action_distance(l3.action, swapped, e_and_s) == rat(1));
}

TEST_CASE("action distance is monotone in the index set") {
  const Instance c6 = build_c6();
  Permutation tweak = {1, 2, 3, 4, 5, 0};
  std::swap(tweak[0], tweak[1]);  // rotation composed with a local swap
  const Action psi(c6.space, c6.group, {tweak});
  const CayleyBall big = c6.group.cayley_ball(3);
  Rational previous(0);
  for (int r = 0; r <= 3; ++r) {
    const Rational d = action_distance(c6.action, psi, c6.group.cayley_ball(r));
    CHECK(d >= previous);
    previous = d;
  }
  CHECK(action_distance(c6.action, psi, big) ==
        oracle_action_distance(c6.action, psi, 3));
}

TEST_CASE("mismatched actions cannot be compared") {
  const Instance c6 = build_c6();
  const Instance l3 = build_l3();
  const CayleyBall ball = c6.group.cayley_ball(1);
  CHECK_THROWS_AS(action_distance(c6.action, l3.action, ball), ArgumentError);
}

TEST_CASE("orbits and saturation") {
  const Instance c6 = build_c6();
  const Orbit tight = orbit(c6.action, 0, 0);
  CHECK(tight.points == PointSet{0});
  CHECK_FALSE(tight.saturated);

  const Orbit partial = orbit(c6.action, 0, 2);
  CHECK(partial.points == PointSet{0, 1, 2, 4, 5});
  CHECK_FALSE(partial.saturated);

  const Orbit whole = orbit(c6.action, 0, 3);
  CHECK(whole.points == full_set(6));
  CHECK(whole.saturated);

  const Instance l3 = build_l3();
  const Orbit fixed = orbit(l3.action, 1, 0);
  CHECK(fixed.points == PointSet{1});
  CHECK(fixed.saturated);  // the identity action fixes everything

  const CombSpaceConfig config{2, 3, std::nullopt};
  const Instance comb = build_comb_space(config);
  const Point z = comb_q_index(config, 1, 3, 0);
  const Orbit cluster = orbit(comb.action, z, 1);
  CHECK(cluster.points ==
        set_sorted({z, comb_q_index(config, 1, 3, 1)}));
  CHECK(cluster.saturated);
}

TEST_CASE("construction validates bijectivity and relations") {
  const Instance l3 = build_l3();
  CHECK_THROWS_AS(Action(l3.space, l3.group, {Permutation{0, 0, 1}}),
                  InstanceError);
  CHECK_THROWS_AS(Action(l3.space, l3.group, {}), InstanceError);
  CHECK_THROWS_AS(Action(l3.space, GroupModel::cyclic(3),
                         {Permutation{1, 0, 2}}),
                  InstanceError);  // swap has order 2, not 3
}
