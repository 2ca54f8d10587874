#pragma once

#include "sofic/core/rational.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace sofic {

using Json = nlohmann::json;

/// Thrown when a structured object would have to be enumerated past the cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation's documented precondition does not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Json distance_json(const Rational& r) { return rational_to_json(r); }
inline Json distance_json(double x) { return x; }

/// One check's outcome. Violations beyond `kMaxListed` are counted, not stored.
struct CheckReport {
  static constexpr std::size_t kMaxListed = 16;

  std::string check;
  bool pass = true;
  Json defect;          // worst measured value, null when not applicable
  Json worst_witness;   // argument realizing `defect`, null when none
  std::vector<Json> violations;
  std::size_t violation_count = 0;
  bool approximate = false;
  Json details = Json::object();
  std::vector<CheckReport> children;

  explicit CheckReport(std::string name = {}) : check(std::move(name)) {}

  void fail(Json witness);
  /// Appends a child and folds its verdict into this one.
  void absorb(CheckReport child);

  Json to_json() const;
  std::string status() const { return pass ? "pass" : "fail"; }
};

/// Renders a report tree as an indented plain-text table.
std::string format_text(const CheckReport& report);

}  // namespace sofic
