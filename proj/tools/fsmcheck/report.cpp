#include "report.hpp"

#include <cmath>

namespace fsmcheck {

void CheckReport::run(const std::string& suite, const std::string& name, const std::string& anchor,
                      double threshold, const std::function<double(nlohmann::json&)>& body, bool lower_bound) {
  CheckEntry e;
  e.suite = suite;
  e.name = name;
  e.anchor = anchor;
  e.threshold = threshold;
  e.lower_bound = lower_bound;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.residual = body(e.params);
    e.pass = std::isfinite(e.residual) && (lower_bound ? e.residual > threshold : e.residual < threshold);
  } catch (const std::exception& ex) {
    e.residual = std::nan("");
    e.pass = false;
    e.params["error"] = ex.what();
  }
  e.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  entries_.push_back(std::move(e));
}

bool CheckReport::passed() const {
  for (const auto& e : entries_)
    if (!e.pass) return false;
  return true;
}

nlohmann::json CheckReport::to_json(const nlohmann::json& config) const {
  nlohmann::json checks = nlohmann::json::array();
  int failed = 0;
  double total_ms = 0.0;
  for (const auto& e : entries_) {
    nlohmann::json j;
    j["suite"] = e.suite;
    j["name"] = e.name;
    j["anchor"] = e.anchor;
    j["params"] = e.params;
    j["residual"] = std::isfinite(e.residual) ? nlohmann::json(e.residual) : nlohmann::json(nullptr);
    j["threshold"] = e.threshold;
    j["comparison"] = e.lower_bound ? "above" : "below";
    j["pass"] = e.pass;
    j["wall_ms"] = e.wall_ms;
    checks.push_back(std::move(j));
    failed += !e.pass;
    total_ms += e.wall_ms;
  }
  nlohmann::json out;
  out["schema"] = 1;
  out["config"] = config;
  out["checks"] = std::move(checks);
  out["summary"] = {{"total", entries_.size()},
                    {"passed", static_cast<int>(entries_.size()) - failed},
                    {"failed", failed},
                    {"pass", failed == 0},
                    {"wall_ms", total_ms}};
  return out;
}

}  // namespace fsmcheck
