#pragma once

#include <map>
#include <string>
#include <vector>

#include "twocat/jsonio.hpp"

namespace twocat {

struct CheckRecord {
  std::string id;
  std::string inputs_hash;
  bool pass = true;
  std::map<std::string, long long> counts;
  std::string witness;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool all_pass() const;
  // deterministic unless with_timings is set
  json to_json(bool with_timings = false) const;
  std::string to_text() const;
};

// FNV-1a over the canonical dump; stable across runs and platforms.
std::string content_hash(const json& j);

}  // namespace twocat
