#include <doctest.h>

#include "betalab/group.hpp"

using namespace betalab;

namespace {

GroupElement nth(const CayleyBall& ball, int i) { return ball.elements[i]; }

}  // namespace

TEST_CASE("composition in each kind") {
  const GroupModel c6 = GroupModel::cyclic(6);
  GroupElement four = c6.identity();
  four.exps[0] = 4;
  GroupElement three = c6.identity();
  three.exps[0] = 3;
  CHECK(c6.compose(four, three).exps[0] == 1);

  const GroupModel z = GroupModel::integers();
  GroupElement minus_two = z.identity();
  minus_two.exps[0] = -2;
  GroupElement five = z.identity();
  five.exps[0] = 5;
  CHECK(z.compose(minus_two, five).exps[0] == 3);

  const GroupModel f2 = GroupModel::free(2);
  const GroupElement a = f2.generator(0);
  const GroupElement b = f2.generator(1);
  const GroupElement ab = f2.compose(a, b);
  CHECK(f2.compose(ab, f2.inverse(b)) == a);
  CHECK(ab.to_string() == "s1*s2");
}

TEST_CASE("mixed-group composition is rejected") {
  const GroupModel c2 = GroupModel::cyclic(2);
  const GroupModel z = GroupModel::integers();
  CHECK_THROWS_AS(c2.compose(c2.identity(), z.identity()), ArgumentError);
  CHECK_THROWS_AS(GroupModel::cyclic(3).compose(c2.identity(), c2.identity()),
                  ArgumentError);
}

TEST_CASE("integers ball of radius 2 in canonical order") {
  const CayleyBall ball = GroupModel::integers().cayley_ball(2);
  REQUIRE(ball.size() == 5);
  CHECK(nth(ball, 0).exps[0] == 0);
  CHECK(nth(ball, 1).exps[0] == 1);
  CHECK(nth(ball, 2).exps[0] == -1);
  CHECK(nth(ball, 3).exps[0] == 2);
  CHECK(nth(ball, 4).exps[0] == -2);
  CHECK_FALSE(ball.entire_group);
}

TEST_CASE("cyclic(2) ball of radius 1 is the whole group") {
  const CayleyBall ball = GroupModel::cyclic(2).cayley_ball(1);
  REQUIRE(ball.size() == 2);
  CHECK(ball.entire_group);
}

TEST_CASE("free(2) ball of radius 2 has 17 elements") {
  CHECK(GroupModel::free(2).cayley_ball(2).size() == 1 + 4 + 12);
}

TEST_CASE("smaller balls are prefixes of larger ones") {
  for (const GroupModel& group :
       {GroupModel::cyclic(6), GroupModel::integers(), GroupModel::free(2),
        GroupModel::free_abelian(2)}) {
    const CayleyBall big = group.cayley_ball(3);
    for (int r = 0; r <= 3; ++r) {
      const CayleyBall small = group.cayley_ball(r);
      REQUIRE(small.size() <= big.size());
      for (int i = 0; i < small.size(); ++i) {
        CHECK(small.elements[i] == big.elements[i]);
      }
    }
  }
}

TEST_CASE("balls are inverse-closed and identity-led") {
  for (const GroupModel& group :
       {GroupModel::cyclic(5), GroupModel::integers(), GroupModel::free(2),
        GroupModel::free_abelian(2)}) {
    const CayleyBall ball = group.cayley_ball(2);
    CHECK(ball.elements[0] == group.identity());
    for (const GroupElement& g : ball.elements) {
      const GroupElement inv = group.inverse(g);
      CHECK(group.word_length(inv) == group.word_length(g));
      CHECK(std::find(ball.elements.begin(), ball.elements.end(), inv) !=
            ball.elements.end());
      CHECK(group.compose(g, inv) == group.identity());
    }
  }
}

TEST_CASE("composition is associative on ball triples") {
  for (const GroupModel& group :
       {GroupModel::cyclic(4), GroupModel::integers(),
        GroupModel::free_abelian(2), GroupModel::free(2)}) {
    const CayleyBall ball = group.cayley_ball(group.kind() == GroupKind::Free
                                                  ? 2
                                                  : 3);
    for (const GroupElement& a : ball.elements) {
      for (const GroupElement& b : ball.elements) {
        for (const GroupElement& c : ball.elements) {
          CHECK(group.compose(group.compose(a, b), c) ==
                group.compose(a, group.compose(b, c)));
        }
      }
    }
  }
}

TEST_CASE("relation checks") {
  const GroupModel c2 = GroupModel::cyclic(2);
  const GroupModel c3 = GroupModel::cyclic(3);
  const Permutation swap01 = {1, 0, 2};

  CHECK(relations_hold(c2, {swap01}).ok);

  const RelationCheck bad = relations_hold(c3, {swap01});
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.violation->relation == "s^3 = e");
  CHECK(bad.violation->witness == 0);

  const GroupModel ab2 = GroupModel::free_abelian(2);
  const Permutation cycle = {1, 2, 0};
  const RelationCheck noncommuting = relations_hold(ab2, {cycle, swap01});
  REQUIRE_FALSE(noncommuting.ok);
  CHECK(noncommuting.violation->witness == 0);

  CHECK(relations_hold(GroupModel::integers(), {cycle}).ok);
  CHECK(relations_hold(GroupModel::free(2), {cycle, swap01}).ok);
}

TEST_CASE("structural errors are distinct from relation violations") {
  const GroupModel c2 = GroupModel::cyclic(2);
  CHECK_THROWS_AS(relations_hold(c2, {Permutation{0, 0, 1}}), InstanceError);
  CHECK_THROWS_AS(relations_hold(c2, {}), InstanceError);
  CHECK_THROWS_AS(
      relations_hold(GroupModel::free_abelian(2), {Permutation{0, 1}}),
      InstanceError);
}

TEST_CASE("word lengths and normal forms") {
  const GroupModel c6 = GroupModel::cyclic(6);
  GroupElement r5 = c6.identity();
  r5.exps[0] = 5;
  CHECK(c6.word_length(r5) == 1);  // s^-1 is shorter than s^5
  CHECK(c6.word_length(c6.identity()) == 0);

  const GroupModel f2 = GroupModel::free(2);
  GroupElement w = f2.generator(0);
  w = f2.times_letter(w, +2);
  w = f2.times_letter(w, -2);
  CHECK(w == f2.generator(0));  // free reduction
  CHECK(f2.word_length(w) == 1);
}
