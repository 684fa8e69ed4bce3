#pragma once

#include <chrono>
#include <ctime>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "grouplab/harness.hpp"

namespace grouplab {

inline ordered_json tallies_json(const Tallies& t) {
  ordered_json j;
  j["confirmed"] = t.confirmed;
  j["vacuous"] = t.vacuous;
  j["VIOLATION"] = t.violation;
  j["skipped"] = t.skipped;
  return j;
}

inline ordered_json record_json(const CheckRecord& r) {
  ordered_json j;
  j["group"] = r.group;
  j["params"] = r.params;
  j["hypothesis"] = r.hypothesis;
  j["conclusion"] = r.conclusion;
  j["status"] = to_string(r.status);
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline ordered_json report_json(const SuiteReport& r, const std::string& timestamp = utc_timestamp()) {
  ordered_json j;
  j["suite"] = r.suite;
  j["config"] = r.config;
  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) records.push_back(record_json(rec));
  j["records"] = std::move(records);
  j["tallies"] = tallies_json(r.tallies);
  j["errors"] = r.errors;
  j["notes"] = r.notes;
  j["timestamp"] = timestamp;
  return j;
}

// Removes every "timestamp" member, recursively.
inline void strip_timestamps(ordered_json& j) {
  if (j.is_object()) {
    j.erase("timestamp");
    for (auto& [k, v] : j.items()) strip_timestamps(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timestamps(v);
  }
}

inline void write_json(const ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

// CLI exit status for a verify run: 1 if any record is a VIOLATION, else 3 if
// some group could not be processed, else 0.
inline int verify_exit_code(const std::vector<SuiteReport>& reports) {
  bool capped = false;
  for (const auto& r : reports) {
    if (r.tallies.violation > 0) return 1;
    capped = capped || !r.errors.empty();
  }
  return capped ? 3 : 0;
}

inline void emit_report(const SuiteReport& r, const std::string& path) { write_json(report_json(r), path); }

}  // namespace grouplab
