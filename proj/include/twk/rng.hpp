#pragma once
// Seeded deterministic random numbers for instance generation: SplitMix64.
// Tiny, bit-identical across platforms, so seeded runs produce byte-stable
// reports.  Modulo bias is irrelevant at instance-generation ranges.

#include <cstdint>

namespace twk {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n >= 1
  long pick(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

  // uniform in [lo, hi], inclusive
  long range(long lo, long hi) { return lo + pick(hi - lo + 1); }

  // independent substream, so adding draws in one place does not shift others
  SplitMix64 fork() { return SplitMix64(next()); }
};

}  // namespace twk
