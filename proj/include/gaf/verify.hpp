#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gaf {

// Zero means "use the suite's own default".
struct SuiteConfig {
  std::uint64_t seed = 7;
  std::size_t frames = 0;
  std::size_t max_size = 0;
  int max_grade = 0;
  // Organizing-choice search bound used by representation-based checks.
  std::size_t choice_cap = 64;
  unsigned jobs = 1;
};

struct PropertyTally {
  std::size_t checks = 0;
  std::size_t violations = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::map<std::string, PropertyTally> properties;
  // Violations, capped at a handful per suite.
  std::vector<std::string> witnesses;
  // Existence results and other findings worth printing.
  std::vector<std::string> found;

  std::size_t checks() const;
  std::size_t violations() const;
  bool pass() const { return violations() == 0; }
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws PreconditionError for unknown names.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config = {});

}  // namespace gaf
