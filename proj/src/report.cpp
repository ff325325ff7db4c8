#include "eiscoh/report.hpp"

#include <algorithm>

namespace eiscoh {

void verification_report::pass(std::string name, std::string detail) {
  checks_.push_back({std::move(name), true, std::move(detail), std::nullopt});
}

void verification_report::fail(std::string name, std::string detail,
                               std::string counterexample) {
  checks_.push_back(
      {std::move(name), false, std::move(detail), std::move(counterexample)});
}

void verification_report::record(std::string name, std::string detail,
                                 std::optional<std::string> counterexample) {
  const bool ok = !counterexample.has_value();
  checks_.push_back(
      {std::move(name), ok, std::move(detail), std::move(counterexample)});
}

void verification_report::append(const verification_report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool verification_report::all_passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const check_result& c) { return c.passed; });
}

const check_result* verification_report::first_failure() const noexcept {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [](const check_result& c) { return !c.passed; });
  return it == checks_.end() ? nullptr : &*it;
}

std::string verification_report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
    if (c.counterexample) out += "  counterexample: " + *c.counterexample + '\n';
  }
  return out;
}

nlohmann::ordered_json verification_report::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["detail"] = c.detail;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["passed"] = all_passed();
  out["checks"] = std::move(arr);
  return out;
}

} // namespace eiscoh
