#include "monotone/report.hpp"

#include <algorithm>

namespace monotone {

bool Report::pass() const {
  return std::all_of(instances_.begin(), instances_.end(), [](const Instance& i) { return i.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances_.begin(), instances_.end(), [](const Instance& i) { return !i.pass; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& inst : instances_) instances.push_back({{"params", inst.params}, {"pass", inst.pass}});
  return {{"check", check_}, {"instances", std::move(instances)}, {"pass", pass()}};
}

std::string Report::to_text() const {
  std::string out = check_ + ": " + (pass() ? "PASS" : "FAIL") + " (" + std::to_string(instances_.size() - failures()) +
                    "/" + std::to_string(instances_.size()) + " instances)\n";
  for (const auto& inst : instances_) {
    out += std::string("  ") + (inst.pass ? "pass " : "FAIL ") + inst.params.dump() + "\n";
  }
  return out;
}

}  // namespace monotone
