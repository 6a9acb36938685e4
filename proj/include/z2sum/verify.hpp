#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "z2sum/oracle.hpp"
#include "z2sum/z2set.hpp"

namespace z2sum {

struct VerifyParams {
  std::optional<int> n;
  std::optional<int> m;
  bool exhaustive = false;
  std::optional<std::uint64_t> random;  // trial count for randomized sections
  std::uint64_t seed = 1;
  int jobs = 0;
  SearchMode mode = SearchMode::Full;
  bool force = false;
  std::filesystem::path out_dir = "counterexamples";
};

struct VerifyFailure {
  std::vector<std::string> inputs;  // z2set files holding the offending sets
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t cases = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;  // informational lines (equality cases and such)

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& verify_suite_names();

/// Runs one named suite. Failing cases are written as z2set files under
/// params.out_dir and listed in the report.
VerifyReport verify_suite(const std::string& name, const VerifyParams& params);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace z2sum
