#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace betalab {

using Point = int;

// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<Point>;

// Permutation of {0..n-1} as an image array: p[i] is the image of i.
using Permutation = std::vector<Point>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad call-site argument (negative radius, foreign group element, ...).
struct ArgumentError : Error {
  using Error::Error;
};

// Structural problem with an instance: metric axiom violation, non-bijective
// generator map, broken group relation, malformed file.
struct InstanceError : Error {
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured combination cap.
struct EnumerationCapError : Error {
  using Error::Error;
};

// Rejection sampling hit its retry cap before producing the requested stream.
struct SamplingSaturationError : Error {
  using Error::Error;
};

// The word-length radius is too small for the requested computation
// (unsaturated orbit, or a degenerate perturbation scale).
struct RadiusError : Error {
  using Error::Error;
};

bool is_permutation(const Permutation& p);
Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& p);
// outer(inner(x)).
Permutation compose_permutations(const Permutation& outer, const Permutation& inner);

inline bool set_contains(const PointSet& s, Point x) {
  return std::binary_search(s.begin(), s.end(), x);
}

PointSet set_sorted(std::vector<Point> xs);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
bool set_subset(const PointSet& a, const PointSet& b);
PointSet full_set(int n);

std::string point_set_to_string(const PointSet& s);

}  // namespace betalab
