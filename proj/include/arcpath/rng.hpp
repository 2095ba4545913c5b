#pragma once

#include <cstdint>
#include <random>

namespace arcpath {

// Seeded generator with a fixed uint64 -> double mapping. The mapping is
// spelled out here instead of going through std::uniform_real_distribution,
// whose output is implementation-defined; identical seeds must give
// identical samples everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  bool coin() { return (gen_() & 1u) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace arcpath
