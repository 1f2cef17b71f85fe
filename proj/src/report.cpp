#include "twocat/report.hpp"

#include <cstdint>
#include <sstream>

namespace twocat {

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

json VerificationReport::to_json(bool with_timings) const {
  json j;
  j["suite"] = suite;
  j["pass"] = all_pass();
  json cs = json::array();
  for (const auto& c : checks) {
    json cj;
    cj["id"] = c.id;
    cj["inputs"] = c.inputs_hash;
    cj["pass"] = c.pass;
    if (!c.counts.empty()) {
      json k = json::object();
      for (const auto& [key, v] : c.counts) k[key] = v;
      cj["counts"] = k;
    }
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (with_timings) cj["wall_ms"] = c.wall_ms;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << (all_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id;
    for (const auto& [key, v] : c.counts) out << " " << key << "=" << v;
    if (!c.witness.empty()) out << "  (" << c.witness << ")";
    out << "\n";
  }
  return out.str();
}

std::string content_hash(const json& j) {
  const std::string s = j.dump();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace twocat
