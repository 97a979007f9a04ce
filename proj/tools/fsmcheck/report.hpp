#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fsmcheck {

struct CheckEntry {
  std::string suite;
  std::string name;
  std::string anchor;  // the property being checked
  nlohmann::json params = nlohmann::json::object();
  double residual = 0.0;
  double threshold = 0.0;
  bool lower_bound = false;  // pass iff residual > threshold
  bool pass = false;
  double wall_ms = 0.0;
};

class CheckReport {
 public:
  // Runs body, times it and records the entry. Exceptions become failures.
  void run(const std::string& suite, const std::string& name, const std::string& anchor, double threshold,
           const std::function<double(nlohmann::json&)>& body, bool lower_bound = false);
  void add(CheckEntry e) { entries_.push_back(std::move(e)); }

  bool passed() const;
  const std::vector<CheckEntry>& entries() const { return entries_; }
  // Keys sorted; timing lives only under "wall_ms".
  nlohmann::json to_json(const nlohmann::json& config) const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace fsmcheck
