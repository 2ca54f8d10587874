#include "sofic/core/report.hpp"

#include <sstream>

namespace sofic {

void CheckReport::fail(Json witness) {
  pass = false;
  ++violation_count;
  if (violations.size() < kMaxListed) violations.push_back(std::move(witness));
}

void CheckReport::absorb(CheckReport child) {
  pass = pass && child.pass;
  approximate = approximate || child.approximate;
  children.push_back(std::move(child));
}

Json CheckReport::to_json() const {
  Json j = {{"check", check},
            {"status", status()},
            {"defect", defect},
            {"worst_witness", worst_witness},
            {"violation_count", violation_count},
            {"violations", violations}};
  if (approximate) j["approximate"] = true;
  if (!details.empty()) j["details"] = details;
  if (!children.empty()) {
    Json kids = Json::array();
    for (const auto& c : children) kids.push_back(c.to_json());
    j["checks"] = std::move(kids);
  }
  return j;
}

namespace {

void render(const CheckReport& r, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << (r.pass ? "PASS " : "FAIL ") << r.check;
  if (!r.defect.is_null()) {
    if (r.defect.is_object() && r.defect.contains("num")) {
      out << "  defect=" << r.defect["num"].dump() << "/" << r.defect["den"].dump();
    } else {
      out << "  defect=" << r.defect.dump();
    }
  }
  if (r.violation_count > 0) out << "  violations=" << r.violation_count;
  if (r.approximate) out << "  (approximate)";
  out << "\n";
  for (const auto& c : r.children) render(c, depth + 1, out);
}

}  // namespace

std::string format_text(const CheckReport& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace sofic
