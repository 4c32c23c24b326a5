#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "abr/errors.hpp"

namespace abr {

struct TracePoint {
  double time_s = 0.0;
  double bandwidth_mbps = 0.0;

  bool operator==(const TracePoint&) const = default;
};

// Timestamped bandwidth series. Immutable after construction; at least two
// points, strictly increasing timestamps, finite nonnegative bandwidths.
struct Trace {
  std::string id;
  std::vector<TracePoint> points;

  double duration_s() const {
    return points.back().time_s - points.front().time_s;
  }

  bool operator==(const Trace&) const = default;
};

enum class SetRole { train, test, ood };

const char* role_name(SetRole role);

struct TraceSet {
  std::string name;
  SetRole role = SetRole::test;
  std::vector<Trace> traces;
};

struct TraceSetStats {
  std::size_t count = 0;
  double min_bw_mbps = 0.0;
  double max_bw_mbps = 0.0;
};

// A benchmark: one training pool plus per-set test/OOD groups sharing a
// bitrate ladder and a rebuffer penalty.
struct BenchmarkManifest {
  std::string name;
  std::vector<int> ladder_kbps;  // strictly increasing, 6 entries
  double mu = 4.3;               // rebuffer penalty, quality units per second
  TraceSet train;
  std::vector<TraceSet> test;
  std::vector<TraceSet> ood;
};

// Parses "time_s bandwidth_mbps" lines. Blank lines and lines starting with
// '#' are skipped. Throws MalformedLine, NonMonotonicTime, TooFewPoints.
Trace parse_trace(const std::string& text, const std::string& id);

// Inverse of parse_trace; round-trips bit-exactly.
std::string serialize_trace(const Trace& trace);

Trace load_trace_file(const std::filesystem::path& path, std::string id);

// Loads a benchmark manifest (JSON) and every trace it references.
// Throws MissingFile, DuplicateTraceId, OverlappingRoles, BadLadder.
BenchmarkManifest load_manifest(const std::filesystem::path& path);

// Count and bandwidth range over every point of every member trace.
TraceSetStats trace_stats(const TraceSet& set);

void validate_trace(const Trace& trace);
void validate_manifest(const BenchmarkManifest& manifest);

}  // namespace abr
