#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace qlandau {

struct CheckRecord {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string details;  // optional
};

using CheckList = std::vector<CheckRecord>;

inline bool all_pass(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

/// Machine-readable run report. Key order is fixed so identical runs give
/// byte-identical output modulo the timestamp field.
class Report {
 public:
  explicit Report(std::string command);

  void set_config(nlohmann::ordered_json config) { config_ = std::move(config); }
  void add_checks(const CheckList& checks);
  void add_payload(const std::string& key, nlohmann::ordered_json value);

  bool passed() const;
  std::string to_json(bool with_timestamp = true) const;

  /// Writes to the path, or stdout for "-" / empty. Throws std::runtime_error
  /// on I/O failure.
  void write(const std::string& path) const;

 private:
  std::string command_;
  nlohmann::ordered_json config_;
  std::vector<CheckRecord> checks_;
  nlohmann::ordered_json payload_ = nlohmann::ordered_json::object();
};

std::string current_timestamp_utc();

}  // namespace qlandau
