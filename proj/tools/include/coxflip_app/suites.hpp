#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxflip_app/json_io.hpp"

namespace coxflip::app {

struct CheckRecord {
  std::string name;
  json expected;
  json computed;
  bool pass = false;
};

struct VerifySuiteResult {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool pass() const;
  json to_json() const;
};

/// Optional restriction of a suite to one family member.
struct SuiteTarget {
  Family family;
  int n;
};

const std::vector<std::string>& suite_names();

/// Runs "relations", "orbits", "center", "kernel", "tables" or "e8-w0".
/// Throws ValidationError for an unknown suite.
VerifySuiteResult run_suite(const std::string& name, std::optional<SuiteTarget> target = {});

} // namespace coxflip::app
