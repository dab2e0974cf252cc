#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unifac::report {

/// Machine-readable run report. Byte-stable for fixed config and seed:
/// timings are omitted unless explicitly requested.
struct Case {
  std::string target;
  std::string payload;  // witness JSON or value
  bool validated = false;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // echoed flags, in order
  std::vector<Case> cases;
  uint64_t total = 0;
  uint64_t failures = 0;
  uint64_t seed = 0;
  std::optional<uint64_t> elapsed_ms;  // filled only with --timings

  std::string to_json() const;
};

std::string witness_json(const std::string& target,
                         const std::vector<std::pair<std::string, std::string>>& letters);

}  // namespace unifac::report
