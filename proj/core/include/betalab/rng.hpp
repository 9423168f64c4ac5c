#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace betalab {

// Seeded generator with portable derived draws. mt19937_64 output is fully
// specified by the standard; std::uniform_int_distribution is not, so bounded
// draws are done here to keep streams byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), unbiased via rejection.
  std::uint64_t bounded(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw = eng_();
    while (draw >= limit) draw = eng_();
    return draw % n;
  }

  int index(std::size_t n) { return static_cast<int>(bounded(n)); }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[bounded(i)]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace betalab
