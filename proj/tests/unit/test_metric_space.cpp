#include <doctest.h>

#include "betalab/instances.hpp"
#include "betalab/metric_space.hpp"
#include "support/corpus.hpp"

using namespace betalab;
using namespace betalab::testsupport;

namespace {

DistanceMatrix l3_matrix() {
  return {{rat(0), rat(1), rat(2)},
          {rat(1), rat(0), rat(1)},
          {rat(2), rat(1), rat(0)}};
}

}  // namespace

TEST_CASE("single point space validates") {
  const MetricValidation report = validate_metric({{rat(0)}});
  CHECK(report.ok);
}

TEST_CASE("two point space and a symmetry break") {
  DistanceMatrix m = {{rat(0), rat(1)}, {rat(1), rat(0)}};
  CHECK(validate_metric(m).ok);
  m[1][0] = rat(2);
  const MetricValidation report = validate_metric(m);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations.front().axiom == "symmetry");
  CHECK(report.violations.front().i == 0);
  CHECK(report.violations.front().j == 1);
}

TEST_CASE("broken path metric fails the triangle inequality at (0,1,2)") {
  DistanceMatrix m = {{rat(0), rat(1), rat(3)},
                      {rat(1), rat(0), rat(1)},
                      {rat(3), rat(1), rat(0)}};
  const MetricValidation report = validate_metric(m);
  REQUIRE_FALSE(report.ok);
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.axiom == "triangle" && v.i == 0 && v.j == 1 && v.k == 2) found = true;
  }
  CHECK(found);
}

TEST_CASE("non-square input is a structural error") {
  CHECK_THROWS_AS(validate_metric({{rat(0), rat(1)}, {rat(1)}}),
                  InstanceError);
}

TEST_CASE("single off-diagonal edits are caught with the right axiom") {
  // Metamorphic probe: each kind of single-entry corruption of a valid
  // metric is rejected with the matching axiom name.
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const FiniteMetricSpace space = random_metric_space(4, seed);
    Rng rng(seed * 31);
    const int i = rng.index(4);
    int j = rng.index(4);
    if (j == i) j = (j + 1) % 4;

    DistanceMatrix sym = space.matrix();
    sym[i][j] += 1;
    bool saw_symmetry = false;
    for (const auto& v : validate_metric(sym).violations) {
      saw_symmetry |= v.axiom == "symmetry";
    }
    CHECK(saw_symmetry);

    DistanceMatrix pos = space.matrix();
    pos[i][j] = pos[j][i] = rat(0);
    bool saw_positivity = false;
    for (const auto& v : validate_metric(pos).violations) {
      saw_positivity |= v.axiom == "positivity";
    }
    CHECK(saw_positivity);

    DistanceMatrix tri = space.matrix();
    tri[i][j] = tri[j][i] = space.diameter() * 3;
    bool saw_triangle = false;
    for (const auto& v : validate_metric(tri).violations) {
      saw_triangle |= v.axiom == "triangle";
    }
    CHECK(saw_triangle);

    DistanceMatrix diag = space.matrix();
    diag[i][i] = rat(1);
    bool saw_diagonal = false;
    for (const auto& v : validate_metric(diag).violations) {
      saw_diagonal |= v.axiom == "diagonal";
    }
    CHECK(saw_diagonal);
  }
}

TEST_CASE("closed balls") {
  const FiniteMetricSpace space(l3_matrix());
  CHECK(space.closed_ball(0, rat(0)) == PointSet{0});
  CHECK(space.closed_ball(1, rat(1)) == PointSet{0, 1, 2});
  CHECK_THROWS_AS(space.closed_ball(0, rat(-1, 2)), ArgumentError);
}

TEST_CASE("open balls") {
  const Instance c6 = build_c6();
  CHECK(c6.space->open_ball(0, rat(0)) == PointSet{});
  CHECK(c6.space->open_ball(0, rat(2)) == PointSet{0, 1, 5});
  CHECK_THROWS_AS(c6.space->open_ball(0, rat(-1)), ArgumentError);
}

TEST_CASE("comb-space balls around cluster points are singletons") {
  const Instance comb = build_comb_space({2, 3, std::nullopt});
  const CombSpaceConfig config{2, 3, std::nullopt};
  const Point z = comb_q_index(config, 1, 3, 0);
  CHECK(comb.space->closed_ball(z, rat(1, 4)) == PointSet{z});
  // Distance exactly 1/3 to the same-cluster neighbors is excluded by
  // strictness.
  CHECK(comb.space->open_ball(z, rat(1, 3)) == PointSet{z});
  CHECK(comb.space->closed_ball(z, rat(1, 3)).size() > 1);
}

TEST_CASE("ball nesting and open-closed containment") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const FiniteMetricSpace space = random_metric_space(4, seed);
    const std::vector<Rational> radii = {rat(0), rat(1, 3), rat(1), rat(2),
                                         space.diameter()};
    for (Point x = 0; x < space.size(); ++x) {
      for (std::size_t a = 0; a < radii.size(); ++a) {
        CHECK(set_subset(space.open_ball(x, radii[a]),
                         space.closed_ball(x, radii[a])));
        for (std::size_t b = a; b < radii.size(); ++b) {
          const Rational r1 = std::min(radii[a], radii[b]);
          const Rational r2 = std::max(radii[a], radii[b]);
          CHECK(set_subset(space.closed_ball(x, r1), space.closed_ball(x, r2)));
        }
      }
    }
  }
}

TEST_CASE("realized distances and diameter") {
  const FiniteMetricSpace space(l3_matrix());
  CHECK(space.realized_distances() == std::vector<Rational>{rat(1), rat(2)});
  CHECK(space.diameter() == rat(2));
  CHECK(space.realized_distances_from(0) ==
        std::vector<Rational>{rat(1), rat(2)});
}
