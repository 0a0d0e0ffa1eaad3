#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace cliffhp {

// Deterministic random bit source. Wraps mt19937_64 and extracts bits
// directly instead of going through std::uniform_int_distribution, whose
// output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  bool bit() {
    if (cached_ == 0) {
      word_ = eng_();
      cached_ = 64;
    }
    bool b = word_ & 1;
    word_ >>= 1;
    --cached_;
    return b;
  }

  // Uniform integer in [0, m), m >= 1, by rejection on the minimal bit width.
  uint64_t below(uint64_t m) {
    if (m <= 1) {
      return 0;
    }
    int width = 64 - std::countl_zero(m - 1);
    uint64_t mask = width == 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
    for (;;) {
      uint64_t r = eng_() & mask;
      if (r < m) {
        return r;
      }
    }
  }

  // splitmix64 mix, used to derive independent per-trial seeds.
  static uint64_t mix(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
  uint64_t word_ = 0;
  int cached_ = 0;
};

}  // namespace cliffhp
