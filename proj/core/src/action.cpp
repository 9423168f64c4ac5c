#include "betalab/action.hpp"

#include <cstdlib>
#include <sstream>

namespace betalab {

namespace {

void validate_maps(const FiniteMetricSpace& space, const GroupModel& group,
                   const std::vector<Permutation>& maps) {
  if (static_cast<int>(maps.size()) != group.rank()) {
    throw InstanceError("action needs " + std::to_string(group.rank()) +
                        " generator maps, got " + std::to_string(maps.size()));
  }
  for (int i = 0; i < static_cast<int>(maps.size()); ++i) {
    if (static_cast<int>(maps[i].size()) != space.size()) {
      throw InstanceError("generator map s" + std::to_string(i + 1) +
                          " has size " + std::to_string(maps[i].size()) +
                          ", expected " + std::to_string(space.size()));
    }
  }
  RelationCheck rel = relations_hold(group, maps);  // also checks bijectivity
  if (!rel.ok) {
    std::ostringstream out;
    out << "group relation " << rel.violation->relation
        << " violated at point " << rel.violation->witness;
    throw InstanceError(out.str());
  }
}

}  // namespace

Action::Action(std::shared_ptr<const FiniteMetricSpace> space, GroupModel group,
               std::vector<Permutation> generator_maps)
    : space_(std::move(space)), group_(group), gen_(std::move(generator_maps)) {
  if (!space_) throw ArgumentError("action needs a space");
  validate_maps(*space_, group_, gen_);
  gen_inv_.reserve(gen_.size());
  for (const auto& g : gen_) gen_inv_.push_back(inverse_permutation(g));
}

Action::Action(Trusted, std::shared_ptr<const FiniteMetricSpace> space,
               GroupModel group, std::vector<Permutation> generator_maps)
    : space_(std::move(space)), group_(group), gen_(std::move(generator_maps)) {
  gen_inv_.reserve(gen_.size());
  for (const auto& g : gen_) gen_inv_.push_back(inverse_permutation(g));
}

Point Action::apply_letter(int letter, Point x) const {
  const int gen = std::abs(letter) - 1;
  return letter > 0 ? gen_[gen][x] : gen_inv_[gen][x];
}

Point Action::evaluate(const GroupElement& g, Point x) const {
  if (!group_.owns(g)) {
    throw ArgumentError("element " + g.to_string() +
                        " does not belong to the action's group " +
                        group_.to_string());
  }
  Point y = x;
  switch (group_.kind()) {
    case GroupKind::Cyclic: {
      for (long long i = 0; i < g.exps[0]; ++i) y = gen_[0][y];
      break;
    }
    case GroupKind::Integers:
    case GroupKind::FreeAbelian: {
      for (int gi = 0; gi < static_cast<int>(g.exps.size()); ++gi) {
        const long long e = g.exps[gi];
        const Permutation& step = e > 0 ? gen_[gi] : gen_inv_[gi];
        for (long long i = 0; i < std::llabs(e); ++i) y = step[y];
      }
      break;
    }
    case GroupKind::Free: {
      // Phi_{l1 l2 ... lm} = Phi_{l1} o ... o Phi_{lm}: rightmost first.
      for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) {
        y = apply_letter(*it, y);
      }
      break;
    }
  }
  return y;
}

std::vector<Permutation> Action::ball_permutations(
    const CayleyBall& ball) const {
  std::vector<Permutation> perms;
  perms.reserve(ball.elements.size());
  for (int k = 0; k < ball.size(); ++k) {
    if (ball.parent[k] < 0) {
      perms.push_back(identity_permutation(space_->size()));
      continue;
    }
    // elements[k] = elements[parent] * letter, so the permutation applies the
    // letter first and the parent's word after it.
    const Permutation& parent = perms[ball.parent[k]];
    Permutation perm(parent.size());
    for (Point x = 0; x < static_cast<Point>(parent.size()); ++x) {
      perm[x] = parent[apply_letter(ball.letter[k], x)];
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

bool Action::same_generator_maps(const Action& other) const {
  return gen_ == other.gen_;
}

void require_comparable(const Action& phi, const Action& psi) {
  const bool same_space = phi.space_ptr() == psi.space_ptr() ||
                          phi.space() == psi.space();
  if (!same_space) {
    throw ArgumentError("actions live on different spaces");
  }
  if (!(phi.group() == psi.group())) {
    throw ArgumentError("actions have different groups");
  }
}

Rational action_distance(const Action& phi, const Action& psi,
                         std::span<const GroupElement> index_set) {
  require_comparable(phi, psi);
  Rational best(0);
  for (const GroupElement& g : index_set) {
    for (Point x = 0; x < phi.space().size(); ++x) {
      const Rational& d =
          phi.space().distance(phi.evaluate(g, x), psi.evaluate(g, x));
      if (d > best) best = d;
    }
  }
  return best;
}

Rational action_distance(const Action& phi, const Action& psi,
                         const CayleyBall& ball) {
  require_comparable(phi, psi);
  const auto phi_perms = phi.ball_permutations(ball);
  const auto psi_perms = psi.ball_permutations(ball);
  Rational best(0);
  for (int k = 0; k < ball.size(); ++k) {
    for (Point x = 0; x < phi.space().size(); ++x) {
      const Rational& d =
          phi.space().distance(phi_perms[k][x], psi_perms[k][x]);
      if (d > best) best = d;
    }
  }
  return best;
}

bool action_distance_within(const Action& phi, const Action& psi,
                            const CayleyBall& ball, const Rational& delta) {
  require_comparable(phi, psi);
  const auto phi_perms = phi.ball_permutations(ball);
  const auto psi_perms = psi.ball_permutations(ball);
  for (int k = 0; k < ball.size(); ++k) {
    for (Point x = 0; x < phi.space().size(); ++x) {
      if (phi.space().distance(phi_perms[k][x], psi_perms[k][x]) > delta) {
        return false;
      }
    }
  }
  return true;
}

Orbit orbit(const Action& action, Point x, int radius) {
  if (x < 0 || x >= action.space().size()) {
    throw ArgumentError("orbit base point out of range");
  }
  const CayleyBall ball = action.group().cayley_ball(radius);
  const auto perms = action.ball_permutations(ball);
  std::vector<Point> points;
  points.reserve(perms.size());
  for (const auto& perm : perms) points.push_back(perm[x]);
  Orbit out;
  out.points = set_sorted(std::move(points));
  out.saturated = true;
  for (int i = 0; i < action.generator_count() && out.saturated; ++i) {
    for (Point z : out.points) {
      if (!set_contains(out.points, action.generator_map(i)[z])) {
        out.saturated = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace betalab
