#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace eiscoh {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kMaxTableEntry = 64;

struct cli_result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one command; args exclude the program name.  Exit codes: 0 success,
// 1 verification failure, 2 usage or input error.
cli_result run_cli(const std::vector<std::string>& args);

// Regression table for all dominant lambda of genus g with entries <= lmax
// and |lambda| even.
nlohmann::ordered_json table_json(int g, int lmax);
std::string table_text(int g, int lmax);

} // namespace eiscoh
