#pragma once

#include <cstdint>
#include <vector>

#include "abr/qoe.hpp"
#include "abr/video.hpp"

namespace abr {

// Observable playback state shared by the rule-based controllers. Mirrors the
// simulator observables; throughput entries of 0 mean "no sample yet".
struct ControllerState {
  double buffer_s = 0.0;
  std::vector<double> throughput_mbps;  // oldest..newest, up to 8
  std::vector<double> download_time_s;
  int last_level = 0;
  std::vector<std::int64_t> next_chunk_sizes;  // bytes, one per level
  int chunks_remaining = 0;
};

// Buffer-based: reservoir + linear cushion mapped across the ladder.
struct BbConfig {
  double reservoir_s = 5.0;
  double cushion_s = 10.0;
};
int bb_select(const ControllerState& state, const std::vector<int>& ladder_kbps,
              const BbConfig& cfg = {});

// BOLA-basic: maximize (V * (v_m + gp) - Q) / S_m with v_m = ln(S_m / S_0)
// and Q the buffer in chunks. V and gp are derived so the lowest level's
// score crosses zero at min_buffer_s and the top level's at max_buffer_s.
struct BolaConfig {
  double min_buffer_s = 10.0;
  double max_buffer_s = 22.0;
  double chunk_duration_s = 4.0;
};
int bola_select(const ControllerState& state, const std::vector<int>& ladder_kbps,
                const BolaConfig& cfg = {});

// RobustMPC: exhaustive QoE maximization over a short horizon under a
// harmonic-mean throughput prediction discounted by recent prediction error.
struct MpcConfig {
  int horizon = 5;
  int throughput_window = 5;  // samples in the harmonic mean
  int error_window = 5;       // recent prediction errors considered
  double chunk_duration_s = 4.0;
};
int robust_mpc_select(const ControllerState& state, const VideoManifest& video,
                      const QoEConfig& qoe, const MpcConfig& cfg = {});

// Robust throughput prediction (Mbps): harmonic mean of the recent samples
// divided by (1 + max relative prediction error). With no samples, falls back
// to the lowest ladder rate. Errors are reconstructed from the history, using
// positions where a full prediction window precedes the sample.
double mpc_throughput_prediction(const ControllerState& state, const std::vector<int>& ladder_kbps,
                                 const MpcConfig& cfg = {});

// QUETRA: match the buffer against the expected M/D/1/K occupancy.
struct QuetraConfig {
  int capacity_chunks = 15;  // buffer threshold / chunk duration
  int throughput_window = 5;
  double chunk_duration_s = 4.0;
};
int quetra_select(const ControllerState& state, const std::vector<int>& ladder_kbps,
                  const QuetraConfig& cfg = {});

// Expected steady-state number in system for an M/D/1/K queue with offered
// load rho, solved via the embedded Markov chain at departures.
double md1k_expected_occupancy(double rho, int capacity);

}  // namespace abr
