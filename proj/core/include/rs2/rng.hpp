#pragma once

#include <cstdint>
#include <random>

namespace rs2 {

using Rng = std::mt19937_64;

// Derives the sub-seed for the `stream`-th independent RNG of a run. Every
// consumer (net init, env, policy, replay sampling, ...) gets its own stream
// so adding a consumer never shifts the draws of the others.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream) {
  std::mt19937_64 g(master_seed);
  g.discard(stream);
  std::uint64_t s = g();
  // splitmix64 finalizer, so nearby masters/streams land far apart
  s += 0x9e3779b97f4a7c15ull;
  s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
  s = (s ^ (s >> 27)) * 0x94d049bb133111ebull;
  return s ^ (s >> 31);
}

}  // namespace rs2
