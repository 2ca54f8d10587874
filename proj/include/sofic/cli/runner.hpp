#pragma once

#include "sofic/core/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sofic {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kConfigSchema = 1;
inline constexpr int kReportSchema = 1;

/// Config rejected; `pointer` is the JSON pointer of the offending field.
struct SchemaError : std::runtime_error {
  std::string pointer;
  SchemaError(std::string ptr, const std::string& msg) : std::runtime_error(ptr + ": " + msg), pointer(std::move(ptr)) {}
};

struct ScenarioInfo {
  std::string name;
  std::string kind;
  std::string anchor;  // the statement the scenario exercises
  std::string description;
  Json config;
};

const std::vector<ScenarioInfo>& scenario_catalog();
const ScenarioInfo* find_scenario(const std::string& name);
Json catalog_json();

const std::vector<std::string>& scenario_kinds();

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> cap;
};

/// {tool, version, report_schema, config, verdict, checks[], summary, runtime_ms}.
/// Checks are sorted by name; each record carries name, status, defect,
/// worst_witness, runtime_ms and the full check tree under "report".
/// Throws SchemaError for invalid configs and CapExceeded past the cap.
Json run_scenario(const Json& config, const RunOverrides& overrides = {});

/// Report with every runtime_ms field removed.
Json strip_runtime(Json report);

std::string format_run_text(const Json& report);

}  // namespace sofic
