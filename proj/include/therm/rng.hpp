#pragma once

#include <cstdint>
#include <vector>

namespace therm {

// splitmix64 step; also used to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Named RNG streams so every consumer draws from an independent,
// reproducible sequence derived from one root seed.
enum class RngStream : std::uint64_t {
  Scenario = 1,   // per-sample scenario draws (index = sample id)
  Split = 2,      // train/test shuffle
  Weights = 3,    // weight init (index = layer index)
  Shuffle = 4,    // epoch shuffles (index = epoch)
  Eval = 5,       // experiment scenario draws
  Test = 6,       // unit-test inputs
};

// xoshiro256++: portable, seedable, fixed output sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : s_) w = splitmix64(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // [0, 1) with 53 random bits; identical across platforms.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // [0, n)
  std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

  // Fisher-Yates; fixed algorithm so shuffles are reproducible.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Derives the seed of stream (root, stream, index). Documented rule:
// three chained splitmix64 expansions over root ^ tag ^ index.
inline std::uint64_t derive_seed(std::uint64_t root, RngStream stream,
                                 std::uint64_t index) {
  std::uint64_t s = root;
  std::uint64_t a = splitmix64(s);
  s = a ^ (static_cast<std::uint64_t>(stream) * 0xbf58476d1ce4e5b9ULL);
  a = splitmix64(s);
  s = a ^ (index * 0x94d049bb133111ebULL);
  return splitmix64(s);
}

inline Rng stream_rng(std::uint64_t root, RngStream stream,
                      std::uint64_t index) {
  return Rng(derive_seed(root, stream, index));
}

}  // namespace therm
