#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betalab/action.hpp"
#include "betalab/rational.hpp"

namespace betalab {

// How a perturbation family was produced. Every downstream set records this
// so sampled results are never mistaken for exhaustive ones.
struct Provenance {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  int count = 0;

  static Provenance exhaustive() { return {}; }
  static Provenance sampled(std::uint64_t seed, int count) {
    return {Kind::Sampled, seed, count};
  }
  bool is_sampled() const { return kind == Kind::Sampled; }
  std::string to_string() const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Materialized family of actions within delta of the base over the
// radius-ball, distinct and in deterministic order. For sampled families the
// base action always comes first and repeats are collapsed into
// duplicates_dropped while still counting toward total_yields.
struct PerturbationSet {
  Rational delta;
  int radius = 0;
  Provenance provenance;
  std::vector<Action> actions;
  std::size_t total_yields = 0;
  std::size_t duplicates_dropped = 0;
};

// Exactly the actions psi with valid generator bijections, group relations,
// and action_distance(base, psi, cayley_ball(radius)) <= delta. Generator
// candidates are pruned through closed balls around the base images (a
// necessary condition once radius >= 1), assembled by backtracking, then
// filtered by relations and by the full ball distance. Throws RadiusError on
// radius = 0 (degenerate scale) and EnumerationCapError when the product of
// per-generator candidate-permutation counts would exceed cap.
PerturbationSet enumerate_perturbations(
    const Action& base, const Rational& delta, int radius,
    std::uint64_t cap = kDefaultEnumerationCap);

// Seeded rejection sampling of `count` valid perturbations (base first,
// repeats possible). Identical seed => identical stream. Throws
// SamplingSaturationError when the retry cap is exhausted; max_attempts = 0
// picks the default cap of 1000 + 200 * count.
PerturbationSet sample_perturbations(const Action& base, const Rational& delta,
                                     int radius, std::uint64_t seed, int count,
                                     std::uint64_t max_attempts = 0);

PerturbationSet make_perturbation_set(const Action& base, const Rational& delta,
                                      int radius, const Provenance& request);

}  // namespace betalab
