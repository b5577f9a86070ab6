#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace qrc {

// Deterministic random stream. std::mt19937_64 supplies the raw bits (its
// output sequence is fixed by the standard); conversions to doubles and
// bounded integers are implemented here so draws do not depend on the
// standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal();

  // Uniform integer in [0, n). Rejection sampling, bias-free. n must be > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// Stable child-seed derivation (splitmix64 finalizer). Each stream index
// yields an independent child; adding streams never disturbs existing ones.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// FNV-1a over raw bytes; used to map configuration coordinates to run seeds.
std::uint64_t fnv1a64(const void* data, std::size_t len,
                      std::uint64_t h = 14695981039346656037ULL);

// Fisher-Yates shuffle driven by the deterministic stream above.
template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const auto j = rng.below(i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace qrc
