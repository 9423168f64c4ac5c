#pragma once

// Independent brute-force oracles. These deliberately avoid the library's
// folded ball permutations and candidate pruning: elements are evaluated
// word by word, shadowing sets by the literal double loop, perturbation
// families by filtering every permutation assignment, and stability by
// trying every map from the orbit into the space.

#include <variant>

#include "betalab/perturbation.hpp"
#include "betalab/stability.hpp"
#include "support/corpus.hpp"

namespace betalab::testsupport {

// Evaluates g at x by walking an explicit letter word for g.
inline Point oracle_evaluate(const Action& action, const GroupElement& g,
                             Point x) {
  std::vector<int> letters;
  switch (g.kind) {
    case GroupKind::Cyclic:
      for (long long i = 0; i < g.exps[0]; ++i) letters.push_back(+1);
      break;
    case GroupKind::Integers:
    case GroupKind::FreeAbelian:
      for (int gi = 0; gi < static_cast<int>(g.exps.size()); ++gi) {
        const int letter = g.exps[gi] > 0 ? gi + 1 : -(gi + 1);
        for (long long i = 0; i < std::llabs(g.exps[gi]); ++i) {
          letters.push_back(letter);
        }
      }
      break;
    case GroupKind::Free:
      letters = g.word;
      break;
  }
  Point y = x;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    y = action.apply_letter(*it, y);
  }
  return y;
}

inline PointSet oracle_gamma(const Action& phi, const Action& psi, Point x,
                             const Rational& epsilon, int radius) {
  const CayleyBall ball = phi.group().cayley_ball(radius);
  PointSet out;
  for (Point y = 0; y < phi.space().size(); ++y) {
    bool shadows = true;
    for (const GroupElement& g : ball.elements) {
      if (phi.space().distance(oracle_evaluate(phi, g, x),
                               oracle_evaluate(psi, g, y)) > epsilon) {
        shadows = false;
        break;
      }
    }
    if (shadows) out.push_back(y);
  }
  return out;
}

inline Rational oracle_action_distance(const Action& phi, const Action& psi,
                                       int radius) {
  const CayleyBall ball = phi.group().cayley_ball(radius);
  Rational best(0);
  for (const GroupElement& g : ball.elements) {
    for (Point x = 0; x < phi.space().size(); ++x) {
      const Rational& d = phi.space().distance(oracle_evaluate(phi, g, x),
                                               oracle_evaluate(psi, g, x));
      if (d > best) best = d;
    }
  }
  return best;
}

// Every assignment of one permutation per generator, filtered by the
// definition: relations hold and the family stays within delta over the
// radius ball.
inline std::vector<std::vector<Permutation>> oracle_perturbations(
    const Action& base, const Rational& delta, int radius) {
  const int n = base.space().size();
  const std::vector<Permutation> perms = all_permutations(n);
  const int gens = base.generator_count();

  std::vector<std::vector<Permutation>> accepted;
  std::vector<std::size_t> pick(gens, 0);
  while (true) {
    std::vector<Permutation> maps;
    for (int gi = 0; gi < gens; ++gi) maps.push_back(perms[pick[gi]]);
    if (relations_hold(base.group(), maps).ok) {
      Action candidate(Action::Trusted{}, base.space_ptr(), base.group(), maps);
      if (oracle_action_distance(base, candidate, radius) <= delta) {
        accepted.push_back(maps);
      }
    }
    int gi = gens - 1;
    while (gi >= 0) {
      if (++pick[gi] < perms.size()) break;
      pick[gi] = 0;
      --gi;
    }
    if (gi < 0) break;
  }
  return accepted;
}

// Literal stability oracle: some map h from the saturated orbit into the
// space with h(x) within epsilon of x pointwise and equivariant under every
// ball element. Tries all |X|^|orbit| maps; tiny spaces only.
inline bool oracle_stable_under(const Action& phi, const Action& psi, Point x,
                                const Rational& epsilon, int radius) {
  const Orbit orb = orbit(psi, x, radius);
  if (!orb.saturated) throw RadiusError("oracle: orbit not saturated");
  const int n = phi.space().size();
  const int m = static_cast<int>(orb.points.size());
  const CayleyBall ball = phi.group().cayley_ball(radius);

  std::vector<int> choice(m, 0);
  while (true) {
    std::vector<Point> image(n, -1);
    for (int i = 0; i < m; ++i) image[orb.points[i]] = choice[i];
    bool good = true;
    for (Point z : orb.points) {
      if (phi.space().distance(image[z], z) > epsilon) good = false;
    }
    for (const GroupElement& g : ball.elements) {
      if (!good) break;
      for (Point z : orb.points) {
        const Point zg = oracle_evaluate(psi, g, z);
        if (image[zg] != oracle_evaluate(phi, g, image[z])) {
          good = false;
          break;
        }
      }
    }
    if (good) return true;
    int i = m - 1;
    while (i >= 0) {
      if (++choice[i] < n) break;
      choice[i] = 0;
      --i;
    }
    if (i < 0) return false;
  }
}

inline PointSet oracle_stable_points(const Action& phi,
                                     const PerturbationSet& family,
                                     const Rational& epsilon, int radius) {
  PointSet out;
  for (Point x = 0; x < phi.space().size(); ++x) {
    bool stable = true;
    for (const Action& psi : family.actions) {
      if (!oracle_stable_under(phi, psi, x, epsilon, radius)) {
        stable = false;
        break;
      }
    }
    if (stable) out.push_back(x);
  }
  return out;
}

}  // namespace betalab::testsupport
