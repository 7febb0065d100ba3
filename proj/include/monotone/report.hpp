#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace monotone {

/// Outcome of a verification: one entry per checked instance.
/// Serializes as {"check": ..., "instances": [{"params": ..., "pass": ...}], "pass": ...}.
class Report {
 public:
  struct Instance {
    nlohmann::json params;
    bool pass;
  };

  explicit Report(std::string check) : check_(std::move(check)) {}

  void add(nlohmann::json params, bool pass) { instances_.push_back({std::move(params), pass}); }

  const std::string& check() const noexcept { return check_; }
  const std::vector<Instance>& instances() const noexcept { return instances_; }
  bool pass() const;
  std::size_t failures() const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string check_;
  std::vector<Instance> instances_;
};

}  // namespace monotone
