#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betalab/rational.hpp"
#include "betalab/types.hpp"

namespace betalab {

using DistanceMatrix = std::vector<std::vector<Rational>>;

struct MetricViolation {
  std::string axiom;  // "diagonal" | "symmetry" | "positivity" | "triangle"
  Point i = -1;
  Point j = -1;
  Point k = -1;  // -1 when the axiom involves two indices only
  std::string to_string() const;
};

struct MetricValidation {
  bool ok = false;
  std::vector<MetricViolation> violations;
};

// Checks the four metric axioms on a square matrix and reports every
// violation with witnessing indices. A non-square input is a structural
// error (InstanceError), not an axiom violation.
MetricValidation validate_metric(const DistanceMatrix& dist);

// Finite metric space over points 0..n-1 with an exact rational distance
// matrix. Immutable after construction; the constructor enforces the axioms.
class FiniteMetricSpace {
 public:
  explicit FiniteMetricSpace(DistanceMatrix dist,
                             std::vector<std::string> labels = {});

  int size() const { return n_; }
  const Rational& distance(Point a, Point b) const;
  const std::string& label(Point x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  DistanceMatrix matrix() const;

  // { y : d(center, y) <= radius }. Throws ArgumentError on radius < 0.
  PointSet closed_ball(Point center, const Rational& radius) const;
  // { y : d(center, y) < radius }.
  PointSet open_ball(Point center, const Rational& radius) const;

  // Distinct positive distances, ascending.
  const std::vector<Rational>& realized_distances() const;
  // Distinct positive distances from x, ascending.
  std::vector<Rational> realized_distances_from(Point x) const;
  Rational diameter() const;

  bool operator==(const FiniteMetricSpace& other) const;

 private:
  void check_point(Point x) const;

  int n_;
  std::vector<Rational> dist_;  // row-major n*n
  std::vector<std::string> labels_;
  std::vector<Rational> realized_;
};

}  // namespace betalab
