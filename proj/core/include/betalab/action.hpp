#pragma once

#include <memory>
#include <span>
#include <vector>

#include "betalab/group.hpp"
#include "betalab/metric_space.hpp"
#include "betalab/rational.hpp"

namespace betalab {

// Group action on a finite metric space, given by one permutation per
// positive generator. Construction validates bijectivity and the group
// relations; evaluation of any element is then well defined. Immutable.
class Action {
 public:
  struct Trusted {};  // internal: skip re-validation (enumeration hot path)

  Action(std::shared_ptr<const FiniteMetricSpace> space, GroupModel group,
         std::vector<Permutation> generator_maps);
  Action(Trusted, std::shared_ptr<const FiniteMetricSpace> space,
         GroupModel group, std::vector<Permutation> generator_maps);

  const FiniteMetricSpace& space() const { return *space_; }
  const std::shared_ptr<const FiniteMetricSpace>& space_ptr() const {
    return space_;
  }
  const GroupModel& group() const { return group_; }
  int generator_count() const { return static_cast<int>(gen_.size()); }
  const Permutation& generator_map(int i) const { return gen_[i]; }
  const Permutation& generator_inverse_map(int i) const { return gen_inv_[i]; }
  const std::vector<Permutation>& generator_maps() const { return gen_; }

  // Image of x under a single signed letter.
  Point apply_letter(int letter, Point x) const;
  // Image of x under the action of g (throws ArgumentError for elements of a
  // different group).
  Point evaluate(const GroupElement& g, Point x) const;

  // Permutation realized by each ball element, folded along the ball's
  // breadth-first derivation; index-aligned with ball.elements.
  std::vector<Permutation> ball_permutations(const CayleyBall& ball) const;

  bool same_generator_maps(const Action& other) const;

 private:
  std::shared_ptr<const FiniteMetricSpace> space_;
  GroupModel group_;
  std::vector<Permutation> gen_;
  std::vector<Permutation> gen_inv_;
};

// Throws ArgumentError unless both actions live on the same space and group.
void require_comparable(const Action& phi, const Action& psi);

// d_J(phi, psi) = max over j in J and points x of d(phi_j(x), psi_j(x)).
Rational action_distance(const Action& phi, const Action& psi,
                         std::span<const GroupElement> index_set);
Rational action_distance(const Action& phi, const Action& psi,
                         const CayleyBall& ball);
// Early-exit variant of the ball overload.
bool action_distance_within(const Action& phi, const Action& psi,
                            const CayleyBall& ball, const Rational& delta);

struct Orbit {
  PointSet points;
  // True iff the point set is closed under every generator map; the space
  // being finite, that makes it the full orbit and its own closure.
  bool saturated = false;
};

Orbit orbit(const Action& action, Point x, int radius);

}  // namespace betalab
