#pragma once

#include <cstdint>
#include <random>

namespace superell {

using RngSeed = std::uint64_t;

// Deterministic stream: same seed gives the same sequence on every platform
// (mt19937_64 output is fixed by the standard).
class Rng {
 public:
  explicit Rng(RngSeed seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::mt19937_64 gen_;
};

// Mixes a sub-stream label into a seed so that independent consumers
// (e.g. per-prime factorizations) stay decoupled but reproducible.
inline RngSeed derive_seed(RngSeed seed, std::uint64_t label) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (label + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace superell
