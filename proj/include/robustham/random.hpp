#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace robustham {

// Identifies one reproducible random stream: the user seed plus a trial
// index. Equal seeds give bit-identical streams on every platform.
struct Seed {
  std::uint64_t value = 0;
  std::uint64_t trial = 0;

  Seed with_trial(std::uint64_t t) const { return {value, t}; }
  friend bool operator==(const Seed&, const Seed&) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

// The repository-wide generator: std::mt19937_64 (whose output sequence is
// fixed by the standard) seeded from splitmix64(value, trial, stream).
// Distributions are implemented here rather than taken from <random>
// because the standard library distributions are not portable bit-for-bit.
class Rng {
 public:
  explicit Rng(Seed seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin() { return (next() >> 63) != 0; }
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform integer in [0, bound), bound > 0; rejection sampling.
  std::uint64_t below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace robustham
