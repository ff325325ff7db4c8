#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace eiscoh {

struct check_result {
  std::string name;
  bool passed;
  std::string detail;
  std::optional<std::string> counterexample;
};

class verification_report {
public:
  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string detail, std::string counterexample);
  // Records a pass, or a fail carrying the counterexample when one is given.
  void record(std::string name, std::string detail,
              std::optional<std::string> counterexample);
  void append(const verification_report& other);

  bool all_passed() const noexcept;
  bool empty() const noexcept { return checks_.empty(); }
  const std::vector<check_result>& checks() const noexcept { return checks_; }
  const check_result* first_failure() const noexcept;

  // One "PASS name: detail" / "FAIL name: detail" line per check, failures
  // followed by an indented counterexample line.
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

private:
  std::vector<check_result> checks_;
};

} // namespace eiscoh
