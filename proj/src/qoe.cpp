#include "abr/qoe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace abr {

QoESummary episode_qoe(const std::vector<ChunkRecord>& records, const QoEConfig& cfg) {
  if (records.empty()) throw EmptyEpisode("episode has no chunks");
  QoESummary s;
  s.n_chunks = static_cast<int>(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    s.quality_sum += quality_mbps(records[i].bitrate_kbps);
    s.rebuffer_penalty += cfg.mu * records[i].rebuffer_s;
    if (i > 0) {
      s.smoothness_penalty += cfg.delta * std::abs(quality_mbps(records[i].bitrate_kbps) -
                                                   quality_mbps(records[i - 1].bitrate_kbps));
    }
  }
  s.total = s.quality_sum - s.smoothness_penalty - s.rebuffer_penalty;
  return s;
}

double step_reward(int prev_bitrate_kbps, int bitrate_kbps, double rebuffer_s,
                   const QoEConfig& cfg) {
  const double q = quality_mbps(bitrate_kbps);
  return q - cfg.mu * rebuffer_s - cfg.delta * std::abs(q - quality_mbps(prev_bitrate_kbps));
}

RankReport average_rank(const std::vector<std::string>& algorithms,
                        const std::vector<std::string>& trace_sets,
                        const std::vector<std::vector<double>>& qoe_table) {
  const std::size_t n_algos = algorithms.size();
  const std::size_t n_sets = trace_sets.size();
  if (n_algos == 0 || n_sets == 0) throw DataError("rank table must be nonempty");
  if (qoe_table.size() != n_algos) throw DataError("rank table row count mismatch");
  for (const auto& row : qoe_table) {
    if (row.size() != n_sets) throw DataError("rank table column count mismatch");
    for (double v : row) {
      if (!std::isfinite(v)) throw NonFiniteEntry("rank table entry is not finite");
    }
  }

  RankReport report;
  report.algorithms = algorithms;
  report.trace_sets = trace_sets;
  report.qoe = qoe_table;
  report.ranks.assign(n_algos, std::vector<double>(n_sets, 0.0));
  report.ave_rank.assign(n_algos, 0.0);

  for (std::size_t j = 0; j < n_sets; ++j) {
    std::vector<std::size_t> order(n_algos);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return qoe_table[a][j] > qoe_table[b][j];
    });
    std::size_t i = 0;
    while (i < n_algos) {
      std::size_t k = i;
      while (k + 1 < n_algos && qoe_table[order[k + 1]][j] == qoe_table[order[i]][j]) ++k;
      // positions i..k (0-based) share the mean of ranks i+1..k+1
      const double rank = (static_cast<double>(i) + static_cast<double>(k)) / 2.0 + 1.0;
      for (std::size_t m = i; m <= k; ++m) report.ranks[order[m]][j] = rank;
      i = k + 1;
    }
  }
  for (std::size_t a = 0; a < n_algos; ++a) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n_sets; ++j) sum += report.ranks[a][j];
    report.ave_rank[a] = sum / static_cast<double>(n_sets);
  }
  return report;
}

double round1(double v) { return std::round(v * 10.0) / 10.0; }

std::string rank_report_csv(const RankReport& report) {
  std::ostringstream out;
  out << "algorithm";
  for (const auto& s : report.trace_sets) out << ',' << s;
  out << ",ave_rank\n";
  for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
    out << report.algorithms[a];
    for (std::size_t j = 0; j < report.trace_sets.size(); ++j) out << ',' << report.ranks[a][j];
    out << ',' << report.ave_rank[a] << '\n';
  }
  return out.str();
}

}  // namespace abr
