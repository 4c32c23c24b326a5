#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "abr/errors.hpp"

namespace abr {

// Per-chunk byte sizes for each bitrate level. Immutable after construction.
struct VideoManifest {
  int n_chunks = 0;
  int n_levels = 0;
  int chunk_duration_ms = 4000;
  std::vector<int> ladder_kbps;                     // strictly increasing
  std::vector<std::vector<std::int64_t>> sizes_bytes;  // [level][chunk], all > 0

  std::int64_t size_bytes(int level, int chunk) const {
    return sizes_bytes[static_cast<std::size_t>(level)][static_cast<std::size_t>(chunk)];
  }
};

// Size-table file: first line the ladder (kbps), then one line per level of
// space-separated byte counts.
VideoManifest load_video(const std::filesystem::path& path);
std::string serialize_video(const VideoManifest& video);

// Deterministic test-fixture generator. sizes[l][c] is the 4-second chunk
// size at ladder rate l, scaled by a seeded uniform draw in [1-j, 1+j].
VideoManifest synth_video(const std::vector<int>& ladder_kbps, int n_chunks,
                          double jitter_fraction, std::uint64_t seed);

void validate_video(const VideoManifest& video);

// Chunks where a higher level encodes smaller than a lower one. Real encodes
// occasionally do this, so it is a warning, not an invariant.
int monotonicity_violations(const VideoManifest& video);

}  // namespace abr
