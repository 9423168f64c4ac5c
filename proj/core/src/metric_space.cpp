#include "betalab/metric_space.hpp"

#include <sstream>
#include <utility>

namespace betalab {

std::string MetricViolation::to_string() const {
  std::ostringstream out;
  out << axiom << " violated at (" << i << "," << j;
  if (k >= 0) out << "," << k;
  out << ")";
  return out.str();
}

MetricValidation validate_metric(const DistanceMatrix& dist) {
  const int n = static_cast<int>(dist.size());
  for (const auto& row : dist) {
    if (static_cast<int>(row.size()) != n) {
      throw InstanceError("metric matrix is not square");
    }
  }
  MetricValidation report;
  for (int i = 0; i < n; ++i) {
    if (dist[i][i] != 0) report.violations.push_back({"diagonal", i, i, -1});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) {
        report.violations.push_back({"symmetry", i, j, -1});
      }
      if (dist[i][j] <= 0) {
        report.violations.push_back({"positivity", i, j, -1});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          report.violations.push_back({"triangle", i, j, k});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

FiniteMetricSpace::FiniteMetricSpace(DistanceMatrix dist,
                                     std::vector<std::string> labels)
    : n_(static_cast<int>(dist.size())), labels_(std::move(labels)) {
  if (n_ == 0) throw InstanceError("metric space needs at least one point");
  MetricValidation report = validate_metric(dist);
  if (!report.ok) {
    std::ostringstream out;
    out << "metric axioms violated:";
    for (const auto& v : report.violations) out << " " << v.to_string() << ";";
    throw InstanceError(out.str());
  }
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back("p" + std::to_string(i));
  } else if (static_cast<int>(labels_.size()) != n_) {
    throw InstanceError("label count does not match point count");
  }
  dist_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : dist) {
    for (const auto& d : row) dist_.push_back(d);
  }
  std::vector<Rational> values;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) values.push_back(distance(i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  realized_ = std::move(values);
}

void FiniteMetricSpace::check_point(Point x) const {
  if (x < 0 || x >= n_) {
    throw ArgumentError("point index " + std::to_string(x) +
                        " outside space of size " + std::to_string(n_));
  }
}

const Rational& FiniteMetricSpace::distance(Point a, Point b) const {
  check_point(a);
  check_point(b);
  return dist_[static_cast<std::size_t>(a) * n_ + b];
}

const std::string& FiniteMetricSpace::label(Point x) const {
  check_point(x);
  return labels_[x];
}

DistanceMatrix FiniteMetricSpace::matrix() const {
  DistanceMatrix out(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i][j] = distance(i, j);
  }
  return out;
}

PointSet FiniteMetricSpace::closed_ball(Point center,
                                        const Rational& radius) const {
  check_point(center);
  if (radius < 0) throw ArgumentError("ball radius must be nonnegative");
  PointSet out;
  for (Point y = 0; y < n_; ++y) {
    if (distance(center, y) <= radius) out.push_back(y);
  }
  return out;
}

PointSet FiniteMetricSpace::open_ball(Point center,
                                      const Rational& radius) const {
  check_point(center);
  if (radius < 0) throw ArgumentError("ball radius must be nonnegative");
  PointSet out;
  for (Point y = 0; y < n_; ++y) {
    if (distance(center, y) < radius) out.push_back(y);
  }
  return out;
}

const std::vector<Rational>& FiniteMetricSpace::realized_distances() const {
  return realized_;
}

std::vector<Rational> FiniteMetricSpace::realized_distances_from(
    Point x) const {
  check_point(x);
  std::vector<Rational> values;
  for (Point y = 0; y < n_; ++y) {
    if (y != x) values.push_back(distance(x, y));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Rational FiniteMetricSpace::diameter() const {
  return realized_.empty() ? Rational(0) : realized_.back();
}

bool FiniteMetricSpace::operator==(const FiniteMetricSpace& other) const {
  return n_ == other.n_ && dist_ == other.dist_ && labels_ == other.labels_;
}

}  // namespace betalab
