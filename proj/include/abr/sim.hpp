#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "abr/trace.hpp"
#include "abr/video.hpp"

namespace abr {

// Playback model constants. Defaults follow the Pensieve simulator; every one
// is overridable here.
struct SimConfig {
  double chunk_duration_ms = 4000.0;
  double buffer_threshold_ms = 60000.0;  // client buffer cap
  double drain_sleep_ms = 500.0;         // idle increment while over the cap
  double link_rtt_ms = 80.0;
  double payload_portion = 0.95;  // fraction of raw bandwidth delivering payload
  int default_quality_level = 1;
  int throughput_history_len = 8;
};

inline constexpr int kObsRows = 6;
inline constexpr int kObsCols = 8;
inline constexpr int kObsDim = kObsRows * kObsCols;
inline constexpr int kNumLevels = 6;

// Row-major flattening of the 6x8 state matrix:
//   row 0: last selected quality / top ladder quality (last column)
//   row 1: buffer seconds / 10 (last column)
//   row 2: last 8 throughput samples, Mbps / 8 (oldest..newest)
//   row 3: last 8 download times, seconds / 10
//   row 4: next chunk sizes per level, megabytes (columns 0..5)
//   row 5: remaining chunks / total chunks (last column)
using Observation = std::array<double, kObsDim>;

// Episode start policy: evaluation uses Deterministic (trace time zero),
// training uses RandomOffset.
struct Start {
  enum class Kind { deterministic, random_offset };
  Kind kind = Kind::deterministic;
  std::uint64_t seed = 0;

  static Start deterministic() { return {Kind::deterministic, 0}; }
  static Start random_offset(std::uint64_t seed) { return {Kind::random_offset, seed}; }
};

struct StepOutcome {
  double delay_s = 0.0;
  double sleep_s = 0.0;
  double rebuffer_s = 0.0;
  double buffer_after_ms = 0.0;
  int selected_level = 0;
  std::int64_t chunk_bytes = 0;
  bool done = false;
};

// Full simulator state; a value copy is a snapshot.
struct SimState {
  int segment = 0;        // trace segment index
  double offset_s = 0.0;  // elapsed time within the segment
  double buffer_ms = 0.0;
  int next_chunk = 0;
  int last_level = 1;
  double consumed_s = 0.0;  // total trace time consumed, wraps included
  int hist_len = 8;
  std::array<double, kObsCols> throughput_mbps{};  // oldest..newest
  std::array<double, kObsCols> download_time_s{};

  bool operator==(const SimState&) const = default;
};

// Trace-driven chunk download / buffer simulator. Deterministic function of
// (trace, video, config, start, action sequence). Single-owner mutable state;
// run independent instances for parallel environments.
class Simulator {
 public:
  Simulator(const Trace& trace, const VideoManifest& video, const SimConfig& cfg);

  Observation reset(Start start);

  // Downloads the next chunk at `level`, applies rebuffering, buffer fill and
  // over-threshold drain, and updates the history rings.
  StepOutcome step(int level);

  Observation observation() const;

  // Advances the trace cursor while delivering `bytes`; returns elapsed
  // seconds including link RTT. Throws StalledForever if a full trace cycle
  // delivers nothing.
  double simulate_download(std::int64_t bytes);

  SimState snapshot() const { return state_; }
  void restore(const SimState& s) { state_ = s; }

  bool done() const { return state_.next_chunk >= video_->n_chunks; }
  int next_chunk() const { return state_.next_chunk; }
  int last_level() const { return state_.last_level; }
  double buffer_ms() const { return state_.buffer_ms; }
  double consumed_s() const { return state_.consumed_s; }
  std::span<const double> throughput_history() const {
    return {state_.throughput_mbps.data(), static_cast<std::size_t>(state_.hist_len)};
  }
  std::span<const double> download_history() const {
    return {state_.download_time_s.data(), static_cast<std::size_t>(state_.hist_len)};
  }

  const Trace& trace() const { return *trace_; }
  const VideoManifest& video() const { return *video_; }
  const SimConfig& config() const { return cfg_; }

 private:
  int segment_count() const { return static_cast<int>(trace_->points.size()) - 1; }
  double segment_duration(int seg) const;
  double segment_bandwidth_mbps(int seg) const;
  void next_segment();
  void advance_time(double dt_s);
  void push_history(double thr_mbps, double delay_s);

  const Trace* trace_;
  const VideoManifest* video_;
  SimConfig cfg_;
  SimState state_;
};

}  // namespace abr
