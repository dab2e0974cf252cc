#include "unifac/report.hpp"

#include <json.hpp>

namespace unifac::report {

using json = nlohmann::ordered_json;

std::string Report::to_json() const {
  json j;
  j["command"] = command;
  j["params"] = json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["cases"] = json::array();
  for (const auto& c : cases) {
    json jc;
    jc["target"] = c.target;
    if (!c.payload.empty()) jc["result"] = json::parse(c.payload, nullptr, false).is_discarded()
                                               ? json(c.payload)
                                               : json::parse(c.payload);
    jc["validated"] = c.validated;
    j["cases"].push_back(jc);
  }
  j["summary"] = {{"total", total}, {"failures", failures}};
  j["seed"] = seed;
  if (elapsed_ms)
    j["elapsed_ms"] = *elapsed_ms;
  else
    j["elapsed_ms"] = nullptr;
  return j.dump(2) + "\n";
}

std::string witness_json(const std::string& target,
                         const std::vector<std::pair<std::string, std::string>>& letters) {
  json j;
  j["target"] = target;
  j["letters"] = json::array();
  for (const auto& [letter, tag] : letters)
    j["letters"].push_back({{"letter", letter}, {"tag", tag}});
  return j.dump();
}

}  // namespace unifac::report
