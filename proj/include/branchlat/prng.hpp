#pragma once

#include <cstdint>

#include "errors.hpp"

namespace branchlat {

// Deterministic splitmix64 generator. Distribution helpers are written out
// by hand because standard-library distributions are implementation-defined
// and outputs here must be byte-identical across platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Child generator for an independent named stream.
  Rng split(std::uint64_t stream) const {
    Rng mix(state ^ (stream * 0xd6e8feb86659fd93ULL + 0xa0761d6478bd642fULL));
    mix.next();
    return Rng(mix.next());
  }

  // Uniform in [lo, hi]. Modulo bias is irrelevant at the tiny ranges used.
  int next_int(int lo, int hi) {
    require(lo <= hi, "next_int needs lo <= hi");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  std::uint64_t next_index(std::uint64_t bound) {
    require(bound > 0, "next_index needs a positive bound");
    return next() % bound;
  }
};

// FNV-1a over a list of ints, for deriving per-object stream ids.
inline std::uint64_t fnv1a(std::uint64_t h, int v) {
  h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
  return h * 0x100000001b3ULL;
}

template <class IntRange>
std::uint64_t fnv1a_range(std::uint64_t h, const IntRange& r) {
  h = fnv1a(h, static_cast<int>(r.size()));
  for (int v : r) h = fnv1a(h, v);
  return h;
}

}  // namespace branchlat
