#pragma once

#include "relhom/report.hpp"
#include "relhom/text.hpp"

namespace relhom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUnknown = 3;

struct ScenarioResult {
  int exit_code = kExitOk;
  std::vector<Json> records;
  std::string table;
  /// The rendering selected by the config format.
  std::string output;
};

/// Execute a validated config. Invalid input (missing fields, parse or
/// ring errors) yields exit code 2 with a diagnostic record.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

}  // namespace relhom
