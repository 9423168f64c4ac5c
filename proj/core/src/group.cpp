#include "betalab/group.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace betalab {

std::string group_kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Integers: return "integers";
    case GroupKind::FreeAbelian: return "free_abelian";
    case GroupKind::Free: return "free";
  }
  return "?";
}

bool GroupElement::is_identity() const {
  if (kind == GroupKind::Free) return word.empty();
  for (long long e : exps) {
    if (e != 0) return false;
  }
  return true;
}

std::string GroupElement::to_string() const {
  if (is_identity()) return "e";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](int gen, long long power) {
    if (power == 0) return;
    if (!first) out << "*";
    first = false;
    out << "s";
    if (kind == GroupKind::FreeAbelian || kind == GroupKind::Free) {
      out << (gen + 1);
    }
    if (power != 1) out << "^" << power;
  };
  switch (kind) {
    case GroupKind::Cyclic:
    case GroupKind::Integers:
      emit(0, exps[0]);
      break;
    case GroupKind::FreeAbelian:
      for (int i = 0; i < static_cast<int>(exps.size()); ++i) emit(i, exps[i]);
      break;
    case GroupKind::Free: {
      // Run-length over the reduced word.
      std::size_t i = 0;
      while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        const int letter = word[i];
        const int gen = std::abs(letter) - 1;
        const long long power =
            (letter > 0 ? 1 : -1) * static_cast<long long>(j - i);
        emit(gen, power);
        i = j;
      }
      break;
    }
  }
  return out.str();
}

bool GroupElement::operator<(const GroupElement& other) const {
  if (kind != other.kind) return kind < other.kind;
  if (param != other.param) return param < other.param;
  if (exps != other.exps) return exps < other.exps;
  return word < other.word;
}

GroupModel GroupModel::cyclic(int n) {
  if (n < 1) throw ArgumentError("cyclic order must be >= 1");
  return GroupModel(GroupKind::Cyclic, n);
}

GroupModel GroupModel::integers() { return GroupModel(GroupKind::Integers, 1); }

GroupModel GroupModel::free_abelian(int rank) {
  if (rank < 1) throw ArgumentError("rank must be >= 1");
  return GroupModel(GroupKind::FreeAbelian, rank);
}

GroupModel GroupModel::free(int rank) {
  if (rank < 1) throw ArgumentError("rank must be >= 1");
  return GroupModel(GroupKind::Free, rank);
}

int GroupModel::rank() const {
  switch (kind_) {
    case GroupKind::Cyclic:
    case GroupKind::Integers:
      return 1;
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
      return param_;
  }
  return 1;
}

int GroupModel::cyclic_order() const {
  if (kind_ != GroupKind::Cyclic) {
    throw ArgumentError("cyclic_order on a non-cyclic group");
  }
  return param_;
}

GroupElement GroupModel::identity() const {
  GroupElement e;
  e.kind = kind_;
  e.param = param_;
  if (kind_ != GroupKind::Free) {
    e.exps.assign(kind_ == GroupKind::FreeAbelian ? param_ : 1, 0);
  }
  return e;
}

GroupElement GroupModel::generator(int index, bool inverted) const {
  if (index < 0 || index >= rank()) {
    throw ArgumentError("generator index out of range");
  }
  return times_letter(identity(), inverted ? -(index + 1) : index + 1);
}

void GroupModel::check_owned(const GroupElement& g) const {
  if (!owns(g)) {
    throw ArgumentError("group element belongs to a different group (" +
                        group_kind_name(g.kind) + " vs " +
                        group_kind_name(kind_) + ")");
  }
}

bool GroupModel::owns(const GroupElement& g) const {
  if (g.kind != kind_ || g.param != param_) return false;
  switch (kind_) {
    case GroupKind::Cyclic:
      return g.exps.size() == 1 && g.exps[0] >= 0 && g.exps[0] < param_;
    case GroupKind::Integers:
      return g.exps.size() == 1;
    case GroupKind::FreeAbelian:
      return static_cast<int>(g.exps.size()) == param_;
    case GroupKind::Free:
      return g.exps.empty();
  }
  return false;
}

GroupElement GroupModel::times_letter(const GroupElement& g, int letter) const {
  check_owned(g);
  const int gen = std::abs(letter) - 1;
  if (gen < 0 || gen >= rank()) throw ArgumentError("letter out of range");
  const long long step = letter > 0 ? 1 : -1;
  GroupElement out = g;
  switch (kind_) {
    case GroupKind::Cyclic:
      out.exps[0] = ((out.exps[0] + step) % param_ + param_) % param_;
      break;
    case GroupKind::Integers:
      out.exps[0] += step;
      break;
    case GroupKind::FreeAbelian:
      out.exps[gen] += step;
      break;
    case GroupKind::Free:
      if (!out.word.empty() && out.word.back() == -letter) {
        out.word.pop_back();
      } else {
        out.word.push_back(letter);
      }
      break;
  }
  return out;
}

GroupElement GroupModel::compose(const GroupElement& g,
                                 const GroupElement& h) const {
  check_owned(g);
  check_owned(h);
  GroupElement out = g;
  switch (kind_) {
    case GroupKind::Cyclic:
      out.exps[0] = ((g.exps[0] + h.exps[0]) % param_ + param_) % param_;
      break;
    case GroupKind::Integers:
      out.exps[0] = g.exps[0] + h.exps[0];
      break;
    case GroupKind::FreeAbelian:
      for (int i = 0; i < param_; ++i) out.exps[i] = g.exps[i] + h.exps[i];
      break;
    case GroupKind::Free:
      for (int letter : h.word) out = times_letter(out, letter);
      break;
  }
  return out;
}

GroupElement GroupModel::inverse(const GroupElement& g) const {
  check_owned(g);
  GroupElement out = g;
  switch (kind_) {
    case GroupKind::Cyclic:
      out.exps[0] = (param_ - g.exps[0]) % param_;
      break;
    case GroupKind::Integers:
      out.exps[0] = -g.exps[0];
      break;
    case GroupKind::FreeAbelian:
      for (auto& e : out.exps) e = -e;
      break;
    case GroupKind::Free:
      out.word.clear();
      for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) {
        out.word.push_back(-*it);
      }
      break;
  }
  return out;
}

int GroupModel::word_length(const GroupElement& g) const {
  check_owned(g);
  switch (kind_) {
    case GroupKind::Cyclic: {
      const long long r = g.exps[0];
      return static_cast<int>(std::min(r, param_ - r));
    }
    case GroupKind::Integers:
      return static_cast<int>(std::llabs(g.exps[0]));
    case GroupKind::FreeAbelian: {
      long long total = 0;
      for (long long e : g.exps) total += std::llabs(e);
      return static_cast<int>(total);
    }
    case GroupKind::Free:
      return static_cast<int>(g.word.size());
  }
  return 0;
}

CayleyBall GroupModel::cayley_ball(int radius) const {
  if (radius < 0) throw ArgumentError("ball radius must be nonnegative");
  CayleyBall ball;
  ball.radius = radius;
  std::map<GroupElement, int> seen;

  const GroupElement e = identity();
  ball.elements.push_back(e);
  ball.parent.push_back(-1);
  ball.letter.push_back(0);
  seen.emplace(e, 0);

  // Breadth-first in shortlex order: letters s1 < s1^-1 < s2 < s2^-1 < ...
  std::size_t level_begin = 0;
  for (int length = 1; length <= radius; ++length) {
    const std::size_t level_end = ball.elements.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (int gen = 0; gen < rank(); ++gen) {
        for (int sign : {+1, -1}) {
          const int letter = sign * (gen + 1);
          GroupElement child = times_letter(ball.elements[p], letter);
          if (word_length(child) != length) continue;
          if (seen.contains(child)) continue;
          seen.emplace(child, static_cast<int>(ball.elements.size()));
          ball.elements.push_back(std::move(child));
          ball.parent.push_back(static_cast<int>(p));
          ball.letter.push_back(letter);
        }
      }
    }
    level_begin = level_end;
    if (level_begin == ball.elements.size()) break;  // group exhausted
  }
  ball.entire_group = (kind_ == GroupKind::Cyclic &&
                       static_cast<int>(ball.elements.size()) == param_);
  return ball;
}

std::string GroupModel::to_string() const {
  switch (kind_) {
    case GroupKind::Cyclic:
      return "cyclic(" + std::to_string(param_) + ")";
    case GroupKind::Integers:
      return "integers";
    case GroupKind::FreeAbelian:
      return "free_abelian(" + std::to_string(param_) + ")";
    case GroupKind::Free:
      return "free(" + std::to_string(param_) + ")";
  }
  return "?";
}

RelationCheck relations_hold(const GroupModel& group,
                             const std::vector<Permutation>& assignment) {
  if (static_cast<int>(assignment.size()) != group.rank()) {
    throw InstanceError("expected " + std::to_string(group.rank()) +
                        " generator maps, got " +
                        std::to_string(assignment.size()));
  }
  const std::size_t n = assignment.empty() ? 0 : assignment.front().size();
  for (int i = 0; i < static_cast<int>(assignment.size()); ++i) {
    if (assignment[i].size() != n) {
      throw InstanceError("generator map s" + std::to_string(i + 1) +
                          " has inconsistent size");
    }
    if (!is_permutation(assignment[i])) {
      throw InstanceError("generator map s" + std::to_string(i + 1) +
                          " is not a bijection");
    }
  }

  RelationCheck check;
  switch (group.kind()) {
    case GroupKind::Cyclic: {
      const int order = group.cyclic_order();
      for (Point x = 0; x < static_cast<Point>(n); ++x) {
        Point y = x;
        for (int i = 0; i < order; ++i) y = assignment[0][y];
        if (y != x) {
          check.ok = false;
          check.violation = {"s^" + std::to_string(order) + " = e", x};
          return check;
        }
      }
      break;
    }
    case GroupKind::FreeAbelian: {
      for (int i = 0; i < group.rank(); ++i) {
        for (int j = i + 1; j < group.rank(); ++j) {
          for (Point x = 0; x < static_cast<Point>(n); ++x) {
            if (assignment[i][assignment[j][x]] !=
                assignment[j][assignment[i][x]]) {
              check.ok = false;
              check.violation = {"s" + std::to_string(i + 1) + "*s" +
                                     std::to_string(j + 1) + " = s" +
                                     std::to_string(j + 1) + "*s" +
                                     std::to_string(i + 1),
                                 x};
              return check;
            }
          }
        }
      }
      break;
    }
    case GroupKind::Integers:
    case GroupKind::Free:
      break;  // no relations
  }
  return check;
}

}  // namespace betalab
