#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tjurina {

// Deterministic random source. All randomized choices in the pipeline draw
// from an Rng derived from (user seed, purpose tag), so runs with equal seeds
// are byte-identical and independent stages do not perturb each other.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  static uint64_t derive(uint64_t seed, std::string_view tag) {
    // FNV-1a over the tag, folded into the seed.
    uint64_t h = 1469598103934665603ull ^ seed;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return h;
  }

  static Rng derived(uint64_t seed, std::string_view tag) { return Rng(derive(seed, tag)); }

  uint64_t next() { return eng_(); }

  // Uniform in [lo, hi], inclusive.
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(eng_() % span);
  }

  // Small nonzero integer, handy for generic coordinate changes.
  int64_t small_nonzero(int64_t bound) {
    int64_t v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tjurina
