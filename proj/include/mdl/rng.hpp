#pragma once

#include <cstdint>

#include "mdl/bits.hpp"

namespace mdl {

// splitmix64: fixed-algorithm generator so results are identical across
// platforms and standard library implementations.
class rng {
public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection, bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold)
        return r % bound;
    }
  }

  bool next_bool() { return next_u64() >> 63; }

  // Uniform double in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bits next_bits(std::size_t n) {
    bits b;
    for (std::size_t i = 0; i < n; ++i)
      b.push_back(next_bool());
    return b;
  }

  // Derives an independent stream; used to give each trial its own
  // generator so scheduling order cannot affect results.
  static rng derive(std::uint64_t master, std::uint64_t stream) {
    rng mix(master ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull));
    std::uint64_t s = mix.next_u64();
    return rng(s ^ mix.next_u64());
  }

private:
  std::uint64_t state_;
};

} // namespace mdl
