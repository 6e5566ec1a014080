#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace seglab {

/// Deterministic random source. The engine is std::mt19937_64 (its output
/// sequence is pinned by the standard); the distributions are derived here
/// because the standard ones are implementation-defined, and the
/// reproducibility contracts need identical streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal();

  /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Derives an independent stream seed from a base seed and a salt
/// (splitmix64 finalizer), e.g. one shuffle stream per epoch.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace seglab
