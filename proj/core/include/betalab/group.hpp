#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betalab/types.hpp"

namespace betalab {

enum class GroupKind { Cyclic, Integers, FreeAbelian, Free };

std::string group_kind_name(GroupKind kind);

// Element in normal form. Cyclic: residue in exps[0]; Integers/FreeAbelian:
// exponent vector; Free: freely reduced word of signed letters, +(i+1) for
// generator i and -(i+1) for its inverse.
struct GroupElement {
  GroupKind kind = GroupKind::Integers;
  int param = 1;  // cyclic order, or rank
  std::vector<long long> exps;
  std::vector<int> word;

  bool is_identity() const;
  std::string to_string() const;  // "e", "s^3", "s1*s2^-1", ...

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  bool operator<(const GroupElement& other) const;
};

// Word-metric ball of radius R, in deterministic shortlex order with letters
// ordered s1 < s1^-1 < s2 < s2^-1 < ... elements[0] is the identity.
// parent/letter record the breadth-first derivation: elements[k] equals
// elements[parent[k]] * letter[k].
struct CayleyBall {
  int radius = 0;
  std::vector<GroupElement> elements;
  std::vector<int> parent;  // -1 for the identity
  std::vector<int> letter;  // 0 for the identity, else signed letter
  bool entire_group = false;

  int size() const { return static_cast<int>(elements.size()); }
};

struct RelationViolation {
  std::string relation;  // e.g. "s^3 = e", "s1*s2 = s2*s1"
  Point witness = -1;
};

struct RelationCheck {
  bool ok = true;
  std::optional<RelationViolation> violation;
};

// Finitely generated group of one of four kinds, with the symmetric
// generating set {s_i, s_i^-1}. Immutable.
class GroupModel {
 public:
  static GroupModel cyclic(int n);
  static GroupModel integers();
  static GroupModel free_abelian(int rank);
  static GroupModel free(int rank);

  GroupKind kind() const { return kind_; }
  // Number of positive generators.
  int rank() const;
  // Order of the cyclic kind; throws for other kinds.
  int cyclic_order() const;

  GroupElement identity() const;
  GroupElement generator(int index, bool inverted = false) const;
  // Right multiplication by a signed letter (+/-(i+1)).
  GroupElement times_letter(const GroupElement& g, int letter) const;
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  int word_length(const GroupElement& g) const;

  bool owns(const GroupElement& g) const;

  CayleyBall cayley_ball(int radius) const;

  std::string to_string() const;
  friend bool operator==(const GroupModel&, const GroupModel&) = default;

 private:
  GroupModel(GroupKind kind, int param) : kind_(kind), param_(param) {}
  void check_owned(const GroupElement& g) const;

  GroupKind kind_;
  int param_;  // n for Cyclic, rank otherwise (Integers: 1)
};

// Checks the defining relations of the group kind on a permutation
// assignment for the positive generators (Cyclic: s^n = id; FreeAbelian:
// pairwise commutation; Integers/Free: vacuous). A non-bijective assignment
// or a wrong generator count is a structural InstanceError, distinct from a
// violated relation.
RelationCheck relations_hold(const GroupModel& group,
                             const std::vector<Permutation>& assignment);

}  // namespace betalab
