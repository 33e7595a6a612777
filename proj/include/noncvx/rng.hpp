#pragma once

#include <cstdint>
#include <random>

namespace noncvx {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Independent stream seed derived from a base seed and stream ids.
inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b = 0) {
  return splitmix64(splitmix64(base ^ splitmix64(a)) ^ splitmix64(b ^ 0x5851f42d4c957f2dull));
}

// mt19937_64 with hand-rolled uniform mappings, so streams reproduce across
// standard libraries (std distributions are not pinned by the standard).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t u64() { return eng_(); }

  double unit() {  // [0, 1)
    return static_cast<double>(u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Unbiased integer in [0, n).
  uint64_t index(uint64_t n) {
    uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = u64();
    } while (x >= bound);
    return x % n;
  }

 private:
  std::mt19937_64 eng_;
};

inline constexpr const char* kRngName = "mt19937_64";

}  // namespace noncvx
