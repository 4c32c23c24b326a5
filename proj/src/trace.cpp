#include "abr/trace.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace abr {

namespace {

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

const char* role_name(SetRole role) {
  switch (role) {
    case SetRole::train: return "train";
    case SetRole::test: return "test";
    case SetRole::ood: return "ood";
  }
  return "?";
}

Trace parse_trace(const std::string& text, const std::string& id) {
  Trace trace;
  trace.id = id;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_ws(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 2) {
      throw MalformedLine(id + ":" + std::to_string(lineno) +
                          ": expected \"time_s bandwidth_mbps\"");
    }
    TracePoint p;
    if (!parse_double(fields[0], p.time_s) || !parse_double(fields[1], p.bandwidth_mbps) ||
        p.time_s < 0.0 || p.bandwidth_mbps < 0.0) {
      throw MalformedLine(id + ":" + std::to_string(lineno) + ": bad field in \"" + line + "\"");
    }
    if (!trace.points.empty() && p.time_s <= trace.points.back().time_s) {
      throw NonMonotonicTime(id + ":" + std::to_string(lineno) + ": time must strictly increase");
    }
    trace.points.push_back(p);
  }
  if (trace.points.size() < 2) {
    throw TooFewPoints(id + ": need at least 2 points, got " +
                       std::to_string(trace.points.size()));
  }
  return trace;
}

std::string serialize_trace(const Trace& trace) {
  std::string out;
  for (const auto& p : trace.points) {
    out += format_double(p.time_s);
    out += ' ';
    out += format_double(p.bandwidth_mbps);
    out += '\n';
  }
  return out;
}

Trace load_trace_file(const std::filesystem::path& path, std::string id) {
  std::ifstream in(path);
  if (!in) throw MissingFile("cannot open trace file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trace(buf.str(), std::move(id));
}

void validate_trace(const Trace& trace) {
  if (trace.points.size() < 2) throw TooFewPoints(trace.id);
  double prev = -1.0;
  for (const auto& p : trace.points) {
    if (!std::isfinite(p.time_s) || !std::isfinite(p.bandwidth_mbps) || p.time_s < 0.0 ||
        p.bandwidth_mbps < 0.0) {
      throw MalformedLine(trace.id + ": non-finite or negative point");
    }
    if (p.time_s <= prev) throw NonMonotonicTime(trace.id);
    prev = p.time_s;
  }
}

namespace {

// Glob with wildcards in the final path component only. Matches are sorted
// so manifests load in a stable order.
std::vector<std::filesystem::path> expand_glob(const std::filesystem::path& base,
                                               const std::string& pattern) {
  std::filesystem::path full = base / pattern;
  std::filesystem::path dir = full.parent_path();
  std::string leaf = full.filename().string();
  if (leaf.find_first_of("*?[") == std::string::npos) {
    if (!std::filesystem::exists(full)) {
      throw MissingFile("trace file not found: " + full.string());
    }
    return {full};
  }
  if (!std::filesystem::is_directory(dir)) {
    throw MissingFile("trace directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> matches;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (fnmatch(leaf.c_str(), name.c_str(), 0) == 0) matches.push_back(entry.path());
  }
  if (matches.empty()) {
    throw MissingFile("glob matched no files: " + full.string());
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

TraceSet load_set(const std::filesystem::path& base, const std::string& set_name,
                  const std::string& glob, SetRole role) {
  TraceSet set;
  set.name = set_name;
  set.role = role;
  for (const auto& file : expand_glob(base, glob)) {
    std::string id = std::filesystem::relative(file, base).generic_string();
    set.traces.push_back(load_trace_file(file, id));
  }
  return set;
}

}  // namespace

void validate_manifest(const BenchmarkManifest& m) {
  if (m.name.empty()) throw DataError("manifest name must be nonempty");
  if (m.ladder_kbps.size() != 6) {
    throw BadLadder(m.name + ": ladder must have 6 entries");
  }
  for (std::size_t i = 1; i < m.ladder_kbps.size(); ++i) {
    if (m.ladder_kbps[i] <= m.ladder_kbps[i - 1]) {
      throw BadLadder(m.name + ": ladder must be strictly increasing");
    }
  }
  if (m.ladder_kbps.front() <= 0) throw BadLadder(m.name + ": ladder rates must be positive");
  if (!(m.mu > 0.0)) throw DataError(m.name + ": mu must be > 0");

  std::unordered_map<std::string, SetRole> seen;
  auto check_set = [&](const TraceSet& set) {
    if (set.name.empty()) throw DataError(m.name + ": trace set name must be nonempty");
    for (const auto& trace : set.traces) {
      validate_trace(trace);
      auto [it, inserted] = seen.emplace(trace.id, set.role);
      if (!inserted) {
        if (it->second != set.role) {
          throw OverlappingRoles("trace " + trace.id + " appears in both " +
                                 role_name(it->second) + " and " + role_name(set.role));
        }
        throw DuplicateTraceId("trace " + trace.id + " listed twice");
      }
    }
  };
  check_set(m.train);
  for (const auto& s : m.test) check_set(s);
  for (const auto& s : m.ood) check_set(s);
}

BenchmarkManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile("cannot open manifest: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("manifest parse error: " + std::string(e.what()));
  }

  BenchmarkManifest m;
  try {
    m.name = j.at("name").get<std::string>();
    m.ladder_kbps = j.at("ladder_kbps").get<std::vector<int>>();
    m.mu = j.at("mu").get<double>();
    const auto base = path.parent_path();
    const auto& groups = j.at("groups");
    auto load_group = [&](const char* key, SetRole role) {
      std::vector<TraceSet> sets;
      if (!groups.contains(key)) return sets;
      for (const auto& entry : groups.at(key)) {
        sets.push_back(load_set(base, entry.at("set_name").get<std::string>(),
                                entry.at("path_glob").get<std::string>(), role));
      }
      return sets;
    };
    auto train_sets = load_group("train", SetRole::train);
    m.train.name = train_sets.size() == 1 ? train_sets[0].name : "train";
    m.train.role = SetRole::train;
    for (auto& s : train_sets) {
      m.train.traces.insert(m.train.traces.end(), std::make_move_iterator(s.traces.begin()),
                            std::make_move_iterator(s.traces.end()));
    }
    m.test = load_group("test", SetRole::test);
    m.ood = load_group("ood", SetRole::ood);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("manifest field error: " + std::string(e.what()));
  }

  validate_manifest(m);
  return m;
}

TraceSetStats trace_stats(const TraceSet& set) {
  if (set.traces.empty()) throw EmptySet("trace set " + set.name + " is empty");
  TraceSetStats stats;
  stats.count = set.traces.size();
  stats.min_bw_mbps = set.traces[0].points[0].bandwidth_mbps;
  stats.max_bw_mbps = stats.min_bw_mbps;
  for (const auto& trace : set.traces) {
    for (const auto& p : trace.points) {
      stats.min_bw_mbps = std::min(stats.min_bw_mbps, p.bandwidth_mbps);
      stats.max_bw_mbps = std::max(stats.max_bw_mbps, p.bandwidth_mbps);
    }
  }
  return stats;
}

}  // namespace abr
