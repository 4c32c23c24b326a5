#pragma once

#include <string>
#include <vector>

#include "abr/errors.hpp"

namespace abr {

// QoE = sum q(R_n) - delta * sum |q(R_{n+1}) - q(R_n)| - mu * sum T_n,
// with q(R) the bitrate in Mbps.
struct QoEConfig {
  double delta = 1.0;  // smoothness coefficient
  double mu = 4.3;     // rebuffer coefficient, quality units per second
};

inline double quality_mbps(int bitrate_kbps) { return static_cast<double>(bitrate_kbps) / 1000.0; }

struct ChunkRecord {
  int level = 0;
  int bitrate_kbps = 0;
  double rebuffer_s = 0.0;
};

struct QoESummary {
  double total = 0.0;
  double quality_sum = 0.0;
  double smoothness_penalty = 0.0;
  double rebuffer_penalty = 0.0;
  int n_chunks = 0;
};

QoESummary episode_qoe(const std::vector<ChunkRecord>& records, const QoEConfig& cfg);

// Per-step RL reward. Unlike episode QoE, the first chunk is charged a
// smoothness penalty against the previous (default) level.
double step_reward(int prev_bitrate_kbps, int bitrate_kbps, double rebuffer_s,
                   const QoEConfig& cfg);

struct RankReport {
  std::vector<std::string> algorithms;
  std::vector<std::string> trace_sets;
  std::vector<std::vector<double>> qoe;    // [algorithm][set]
  std::vector<std::vector<double>> ranks;  // [algorithm][set], 1 = best, ties averaged
  std::vector<double> ave_rank;            // mean rank across sets
};

// Ranks each trace-set column by QoE (highest first) and averages per
// algorithm. Ties receive the mean of the positions they cover.
RankReport average_rank(const std::vector<std::string>& algorithms,
                        const std::vector<std::string>& trace_sets,
                        const std::vector<std::vector<double>>& qoe_table);

// Rows = algorithms, columns = per-set ranks plus ave_rank.
std::string rank_report_csv(const RankReport& report);

// Paper-style display rounding.
double round1(double v);

}  // namespace abr
