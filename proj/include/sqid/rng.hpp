#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "sqid/modular.hpp"

namespace sqid {

// splitmix64 finalizer. All seed derivation routes through this so that
// sweep rows and trials get independent, platform-stable streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable hash of (base, labels...). Documented in the README; changing it
// changes every derived stream, so treat as frozen.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = mix64(base);
  for (std::uint64_t v : labels) {
    h ^= mix64(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = mix64(h);
  }
  return h;
}

// Deterministic residue source. mt19937_64 output is fixed by the standard;
// reduction is a plain modulo (bias ~ p / 2^64, irrelevant here and keeps the
// stream reproducible across library implementations).
class ResidueStream {
 public:
  explicit ResidueStream(std::uint64_t seed) : eng_(seed) {}

  fe_t next(const Modulus& m) { return static_cast<fe_t>(eng_() % m.p()); }

  fe_t next_nonzero(const Modulus& m) {
    for (;;) {
      fe_t v = next(m);
      if (v != 0) return v;
    }
  }

  std::uint64_t next_u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sqid
