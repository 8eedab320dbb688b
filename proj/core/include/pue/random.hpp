#pragma once

#include <cstdint>
#include <random>

namespace pue {

using Rng = std::mt19937_64;

/// splitmix64 finalizer. Used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for child stream `index` of `parent`. Distinct (parent, index) pairs
/// give unrelated streams, so trial i sees the same draws no matter which
/// worker runs it or how many trials precede it.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  return mix_seed(mix_seed(parent) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

}  // namespace pue
