#pragma once

#include <cstdint>
#include <random>

namespace abr {

// Canonical draws on top of mt19937_64. std::uniform_*_distribution output is
// implementation-defined; these are stable across standard libraries.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Multiply-shift bound; n must be > 0.
inline int uniform_below(std::mt19937_64& g, int n) {
  return static_cast<int>((static_cast<unsigned __int128>(g()) *
                           static_cast<unsigned __int128>(n)) >>
                          64);
}

// Independent stream seeds derived from one master seed (splitmix64).
inline std::uint64_t subseed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace abr
