#include "abr/video.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "abr/rng.hpp"

namespace abr {

namespace {

std::vector<std::int64_t> parse_int_line(const std::string& line, const std::string& what) {
  std::vector<std::int64_t> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DataError(what + ": non-integer field \"" + token + "\"");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

void validate_video(const VideoManifest& v) {
  if (v.n_levels <= 0 || v.n_chunks <= 0) throw DimensionMismatch("empty video table");
  if (static_cast<int>(v.ladder_kbps.size()) != v.n_levels ||
      static_cast<int>(v.sizes_bytes.size()) != v.n_levels) {
    throw DimensionMismatch("ladder has " + std::to_string(v.ladder_kbps.size()) +
                            " entries but table has " + std::to_string(v.sizes_bytes.size()) +
                            " rows");
  }
  for (std::size_t i = 1; i < v.ladder_kbps.size(); ++i) {
    if (v.ladder_kbps[i] <= v.ladder_kbps[i - 1]) {
      throw BadLadder("video ladder must be strictly increasing");
    }
  }
  if (v.ladder_kbps.front() <= 0) throw BadLadder("video ladder rates must be positive");
  for (const auto& row : v.sizes_bytes) {
    if (static_cast<int>(row.size()) != v.n_chunks) {
      throw DimensionMismatch("row has " + std::to_string(row.size()) + " chunks, expected " +
                              std::to_string(v.n_chunks));
    }
    for (std::int64_t s : row) {
      if (s <= 0) throw NonPositiveSize("chunk size " + std::to_string(s));
    }
  }
}

VideoManifest load_video(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile("cannot open video table: " + path.string());

  VideoManifest v;
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": empty file");
  for (std::int64_t r : parse_int_line(line, "ladder")) {
    v.ladder_kbps.push_back(static_cast<int>(r));
  }
  v.n_levels = static_cast<int>(v.ladder_kbps.size());
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    v.sizes_bytes.push_back(parse_int_line(line, "sizes"));
  }
  if (v.sizes_bytes.empty()) throw DimensionMismatch(path.string() + ": no size rows");
  v.n_chunks = static_cast<int>(v.sizes_bytes[0].size());
  validate_video(v);
  return v;
}

std::string serialize_video(const VideoManifest& v) {
  std::ostringstream out;
  for (int i = 0; i < v.n_levels; ++i) out << (i ? " " : "") << v.ladder_kbps[i];
  out << '\n';
  for (const auto& row : v.sizes_bytes) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
  return out.str();
}

VideoManifest synth_video(const std::vector<int>& ladder_kbps, int n_chunks,
                          double jitter_fraction, std::uint64_t seed) {
  if (!(jitter_fraction >= 0.0 && jitter_fraction < 0.5)) {
    throw BadJitter("jitter_fraction must be in [0, 0.5)");
  }
  VideoManifest v;
  v.ladder_kbps = ladder_kbps;
  v.n_levels = static_cast<int>(ladder_kbps.size());
  v.n_chunks = n_chunks;
  std::mt19937_64 rng(seed);
  for (int l = 0; l < v.n_levels; ++l) {
    // 4-second chunk at rate kbps: kbps * 1000 * 4 / 8 bytes.
    const double nominal = static_cast<double>(ladder_kbps[l]) * 1000.0 * 4.0 / 8.0;
    std::vector<std::int64_t> row(static_cast<std::size_t>(n_chunks));
    for (int c = 0; c < n_chunks; ++c) {
      const double u = (2.0 * uniform01(rng) - 1.0) * jitter_fraction;
      row[static_cast<std::size_t>(c)] = std::llround(nominal * (1.0 + u));
    }
    v.sizes_bytes.push_back(std::move(row));
  }
  validate_video(v);
  return v;
}

int monotonicity_violations(const VideoManifest& v) {
  int count = 0;
  for (int c = 0; c < v.n_chunks; ++c) {
    for (int l = 1; l < v.n_levels; ++l) {
      if (v.size_bytes(l, c) < v.size_bytes(l - 1, c)) ++count;
    }
  }
  return count;
}

}  // namespace abr
