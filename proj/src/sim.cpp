#include "abr/sim.hpp"

#include <algorithm>
#include <cmath>

#include "abr/rng.hpp"

namespace abr {

namespace {
constexpr double kBytesPerMbps = 1.0e6 / 8.0;  // bytes per second at 1 Mbps
}

Simulator::Simulator(const Trace& trace, const VideoManifest& video, const SimConfig& cfg)
    : trace_(&trace), video_(&video), cfg_(cfg) {
  validate_trace(trace);
  validate_video(video);
  if (video.n_levels != kNumLevels) {
    throw DimensionMismatch("simulator expects " + std::to_string(kNumLevels) +
                            " bitrate levels, video has " + std::to_string(video.n_levels));
  }
  if (cfg.default_quality_level < 0 || cfg.default_quality_level >= video.n_levels) {
    throw ConfigError("default_quality_level out of range");
  }
  if (cfg.throughput_history_len < 1 || cfg.throughput_history_len > kObsCols) {
    throw ConfigError("throughput_history_len must be in [1, 8]");
  }
  if (!(cfg.payload_portion > 0.0 && cfg.payload_portion <= 1.0)) {
    throw ConfigError("payload_portion must be in (0, 1]");
  }
  if (cfg.chunk_duration_ms <= 0 || cfg.buffer_threshold_ms <= 0 || cfg.drain_sleep_ms <= 0 ||
      cfg.link_rtt_ms < 0) {
    throw ConfigError("simulator durations must be positive");
  }
  state_.hist_len = cfg.throughput_history_len;
  state_.last_level = cfg.default_quality_level;
}

double Simulator::segment_duration(int seg) const {
  const auto& pts = trace_->points;
  return pts[static_cast<std::size_t>(seg) + 1].time_s - pts[static_cast<std::size_t>(seg)].time_s;
}

// Bandwidth recorded at a segment's end timestamp applies across the segment.
double Simulator::segment_bandwidth_mbps(int seg) const {
  return trace_->points[static_cast<std::size_t>(seg) + 1].bandwidth_mbps;
}

void Simulator::next_segment() {
  state_.segment = (state_.segment + 1) % segment_count();
  state_.offset_s = 0.0;
}

void Simulator::advance_time(double dt_s) {
  state_.consumed_s += dt_s;
  while (dt_s > 0.0) {
    const double left = segment_duration(state_.segment) - state_.offset_s;
    if (dt_s < left) {
      state_.offset_s += dt_s;
      return;
    }
    dt_s -= left;
    next_segment();
  }
}

double Simulator::simulate_download(std::int64_t bytes) {
  double remaining = static_cast<double>(bytes);
  double delay_s = 0.0;
  int zero_segments = 0;  // consecutive segments delivering nothing
  while (remaining > 0.0) {
    const double left = segment_duration(state_.segment) - state_.offset_s;
    const double rate =
        segment_bandwidth_mbps(state_.segment) * kBytesPerMbps * cfg_.payload_portion;
    if (rate <= 0.0) {
      delay_s += left;
      state_.consumed_s += left;
      next_segment();
      if (++zero_segments > segment_count()) {
        throw StalledForever("trace " + trace_->id + " delivered no bytes over a full cycle");
      }
      continue;
    }
    zero_segments = 0;
    const double deliverable = rate * left;
    if (deliverable >= remaining) {
      const double t = remaining / rate;
      delay_s += t;
      state_.offset_s += t;
      state_.consumed_s += t;
      remaining = 0.0;
    } else {
      remaining -= deliverable;
      delay_s += left;
      state_.consumed_s += left;
      next_segment();
    }
  }
  const double rtt_s = cfg_.link_rtt_ms / 1000.0;
  advance_time(rtt_s);
  return delay_s + rtt_s;
}

Observation Simulator::reset(Start start) {
  state_.buffer_ms = 0.0;
  state_.next_chunk = 0;
  state_.last_level = cfg_.default_quality_level;
  state_.consumed_s = 0.0;
  state_.hist_len = cfg_.throughput_history_len;
  state_.throughput_mbps.fill(0.0);
  state_.download_time_s.fill(0.0);
  state_.offset_s = 0.0;
  if (start.kind == Start::Kind::random_offset) {
    std::mt19937_64 rng(start.seed);
    state_.segment = uniform_below(rng, segment_count());
  } else {
    state_.segment = 0;
  }
  return observation();
}

void Simulator::push_history(double thr_mbps, double delay_s) {
  const int n = state_.hist_len;
  for (int i = 0; i + 1 < n; ++i) {
    state_.throughput_mbps[static_cast<std::size_t>(i)] =
        state_.throughput_mbps[static_cast<std::size_t>(i) + 1];
    state_.download_time_s[static_cast<std::size_t>(i)] =
        state_.download_time_s[static_cast<std::size_t>(i) + 1];
  }
  state_.throughput_mbps[static_cast<std::size_t>(n) - 1] = thr_mbps;
  state_.download_time_s[static_cast<std::size_t>(n) - 1] = delay_s;
}

StepOutcome Simulator::step(int level) {
  if (done()) throw EpisodeFinished("all chunks already downloaded");
  if (level < 0 || level >= video_->n_levels) {
    throw BadAction("level " + std::to_string(level) + " out of range");
  }

  StepOutcome out;
  out.selected_level = level;
  out.chunk_bytes = video_->size_bytes(level, state_.next_chunk);

  const double buffer_before_ms = state_.buffer_ms;
  out.delay_s = simulate_download(out.chunk_bytes);
  const double delay_ms = out.delay_s * 1000.0;

  out.rebuffer_s = std::max(delay_ms - buffer_before_ms, 0.0) / 1000.0;
  state_.buffer_ms = std::max(buffer_before_ms - delay_ms, 0.0) + cfg_.chunk_duration_ms;

  // Client refuses to buffer past the threshold: idle in drain_sleep bursts,
  // consuming trace time but downloading nothing.
  double sleep_ms = 0.0;
  while (state_.buffer_ms > cfg_.buffer_threshold_ms) {
    state_.buffer_ms -= cfg_.drain_sleep_ms;
    advance_time(cfg_.drain_sleep_ms / 1000.0);
    sleep_ms += cfg_.drain_sleep_ms;
  }
  out.sleep_s = sleep_ms / 1000.0;

  push_history(static_cast<double>(out.chunk_bytes) * 8.0 / out.delay_s / 1.0e6, out.delay_s);

  state_.last_level = level;
  state_.next_chunk += 1;
  out.buffer_after_ms = state_.buffer_ms;
  out.done = done();
  return out;
}

Observation Simulator::observation() const {
  Observation obs{};
  const auto& ladder = video_->ladder_kbps;
  obs[0 * kObsCols + 7] = static_cast<double>(ladder[static_cast<std::size_t>(state_.last_level)]) /
                          static_cast<double>(ladder.back());
  obs[1 * kObsCols + 7] = state_.buffer_ms / 1000.0 / 10.0;
  const int n = state_.hist_len;
  for (int i = 0; i < n; ++i) {
    // right-aligned so the newest sample is always in the last column
    const int col = kObsCols - n + i;
    obs[2 * kObsCols + col] = state_.throughput_mbps[static_cast<std::size_t>(i)] / 8.0;
    obs[3 * kObsCols + col] = state_.download_time_s[static_cast<std::size_t>(i)] / 10.0;
  }
  if (!done()) {
    for (int l = 0; l < video_->n_levels; ++l) {
      obs[4 * kObsCols + l] = static_cast<double>(video_->size_bytes(l, state_.next_chunk)) / 1.0e6;
    }
  }
  obs[5 * kObsCols + 7] = static_cast<double>(video_->n_chunks - state_.next_chunk) /
                          static_cast<double>(video_->n_chunks);
  return obs;
}

}  // namespace abr
