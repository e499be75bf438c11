#pragma once

// Seeded generator with a fully specified algorithm (splitmix64), so suite
// reports are bit-identical across platforms and standard libraries.

#include <cstdint>

namespace natfull {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(next() % n); }

  Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0x2545f4914f6cdd1dull)); }

 private:
  std::uint64_t state_;
};

}  // namespace natfull
