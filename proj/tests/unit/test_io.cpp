#include <doctest.h>

#include <filesystem>

#include "betalab/instance_io.hpp"

using namespace betalab;

namespace {

std::string scratch_path(const std::string& name) {
  const auto dir =
      std::filesystem::temp_directory_path() / "betalab_io_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

bool same_instance(const Instance& a, const Instance& b) {
  if (!(*a.space == *b.space)) return false;
  if (!(a.group == b.group)) return false;
  if (a.action.generator_maps() != b.action.generator_maps()) return false;
  if (a.provenance.has_value() != b.provenance.has_value()) return false;
  if (a.provenance.has_value()) {
    if (a.provenance->period != b.provenance->period) return false;
    if (a.provenance->depth != b.provenance->depth) return false;
    if (a.provenance->core_metric != b.provenance->core_metric) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("save and load round trip") {
  for (const Instance& instance :
       {build_l3(), build_c6(), build_comb_space({2, 3, std::nullopt})}) {
    const std::string path = scratch_path("roundtrip.json");
    save_instance(instance, path);
    const Instance loaded = load_instance(path);
    CHECK(same_instance(instance, loaded));
    // Serialization itself is deterministic.
    CHECK(serialize_instance(instance) == serialize_instance(loaded));
    CHECK(instance_fingerprint(instance) == instance_fingerprint(loaded));
  }
}

TEST_CASE("loaded generated instances pass their self checks") {
  const Instance comb = build_comb_space({2, 3, std::nullopt});
  const std::string path = scratch_path("comb.json");
  save_instance(comb, path);
  const Instance loaded = load_instance(path);
  CHECK(run_comb_space_checks(loaded).ok);
  CHECK(serialize_instance(loaded) ==
        serialize_instance(build_comb_space({2, 3, std::nullopt})));
}

TEST_CASE("tampered symmetry is reported with the axiom and the indices") {
  const std::string text = R"({
    "points": ["a", "b"],
    "metric": [["0", "1"], ["2", "0"]],
    "group": {"kind": "cyclic", "n": 2},
    "action": {"s1": [1, 0]}
  })";
  try {
    parse_instance(text);
    FAIL("expected an InstanceError");
  } catch (const InstanceError& err) {
    const std::string what = err.what();
    CHECK(what.find("symmetry") != std::string::npos);
    CHECK(what.find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("schema violations are reported distinctly") {
  CHECK_THROWS_WITH_AS(parse_instance("not json"),
                       doctest::Contains("malformed JSON"), InstanceError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"points": ["a"]})"),
                       doctest::Contains("missing 'metric'"), InstanceError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "points": ["a", "b"],
        "metric": [["0", "1"]],
        "group": {"kind": "cyclic", "n": 2},
        "action": {"s1": [0, 1]}
      })"),
      doctest::Contains("n x n"), InstanceError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "points": ["a", "b"],
        "metric": [["0", "x"], ["x", "0"]],
        "group": {"kind": "cyclic", "n": 2},
        "action": {"s1": [0, 1]}
      })"),
      doctest::Contains("metric[0][1]"), InstanceError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "points": ["a", "b"],
        "metric": [["0", "1"], ["1", "0"]],
        "group": {"kind": "dihedral", "n": 2},
        "action": {"s1": [0, 1]}
      })"),
      doctest::Contains("unknown group kind"), InstanceError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "points": ["a", "b"],
        "metric": [["0", "1"], ["1", "0"]],
        "group": {"kind": "cyclic", "n": 2},
        "action": {}
      })"),
      doctest::Contains("missing generator 's1'"), InstanceError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "points": ["a", "b"],
        "metric": [["0", "1"], ["1", "0"]],
        "group": {"kind": "cyclic", "n": 2},
        "action": {"s1": [0, 0]}
      })"),
      doctest::Contains("not a bijection"), InstanceError);
  CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), InstanceError);
}

TEST_CASE("a relation failure is distinct from schema problems") {
  // swap(0,1) has order 2, which breaks the cyclic(3) relation.
  const std::string text = R"({
    "points": ["a", "b", "c"],
    "metric": [["0","1","2"],["1","0","1"],["2","1","0"]],
    "group": {"kind": "cyclic", "n": 3},
    "action": {"s1": [1, 0, 2]}
  })";
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("relation"),
                       InstanceError);
}

TEST_CASE("measure literals") {
  const RationalMeasure mu = parse_measure(R"({"0": "1/2", "2": "1/2"})", 3);
  CHECK(mu.weights() == std::vector<Rational>{rat(1, 2), rat(0), rat(1, 2)});
  const RationalMeasure back = parse_measure(serialize_measure(mu), 3);
  CHECK(back == mu);
  CHECK_THROWS_AS(parse_measure(R"({"0": "1/2"})", 3), InstanceError);
  CHECK_THROWS_AS(parse_measure(R"({"7": "1"})", 3), InstanceError);
  CHECK_THROWS_AS(parse_measure(R"({"x": "1"})", 3), InstanceError);
  CHECK_THROWS_AS(parse_measure(R"([1, 2])", 3), InstanceError);
}
