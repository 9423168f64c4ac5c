#include "betalab/types.hpp"

#include <sstream>

namespace betalab {

bool is_permutation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(p.size(), false);
  for (Point image : p) {
    if (image < 0 || image >= n || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (Point i = 0; i < static_cast<Point>(p.size()); ++i) inv[p[i]] = i;
  return inv;
}

Permutation compose_permutations(const Permutation& outer,
                                 const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

PointSet set_sorted(std::vector<Point> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet full_set(int n) { return identity_permutation(n); }

std::string point_set_to_string(const PointSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

}  // namespace betalab
