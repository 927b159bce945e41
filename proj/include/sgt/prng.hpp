#pragma once
// Deterministic pseudo-randomness.  Everything seeded must replay
// byte-identically across platforms and standard libraries, so we use a
// fixed splitmix64 stream and do bounded draws by plain modulo instead of
// going through std::uniform_int_distribution (whose output is
// implementation defined).

#include <cstdint>

namespace sgt {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n).  The modulo bias is irrelevant here; what
  // matters is that the sequence is fully pinned down.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Derive an independent stream for sub-task `stream` of a user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return g.next();
}

}  // namespace sgt
