#include "qlandau/report.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "qlandau/version.hpp"

namespace qlandau {

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::add_checks(const CheckList& checks) {
  checks_.insert(checks_.end(), checks.begin(), checks.end());
}

void Report::add_payload(const std::string& key, nlohmann::ordered_json value) {
  payload_[key] = std::move(value);
}

bool Report::passed() const { return all_pass(checks_); }

std::string current_timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string Report::to_json(bool with_timestamp) const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "qlandau";
  j["version"] = kVersion;
  j["timestamp"] = with_timestamp ? current_timestamp_utc() : "";
  j["command"] = command_;
  j["config"] = config_.is_null() ? nlohmann::ordered_json::object() : config_;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    if (!c.details.empty()) cj["details"] = c.details;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  for (const auto& [k, v] : payload_.items()) j[k] = v;
  nlohmann::ordered_json summary;
  summary["total"] = checks_.size();
  std::size_t passed_count = 0;
  for (const auto& c : checks_)
    if (c.pass) ++passed_count;
  summary["passed"] = passed_count;
  summary["failed"] = checks_.size() - passed_count;
  j["summary"] = std::move(summary);
  j["status"] = passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

void Report::write(const std::string& path) const {
  const std::string text = to_json(true);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace qlandau
