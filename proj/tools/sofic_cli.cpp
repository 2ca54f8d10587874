#include "sofic/cli/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kSchema = 2, kCap = 3 };

struct RunFlags {
  std::string config_path;
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> cap;
  std::string out;
  std::string format = "json";
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("scenario", f.scenario, "bundled scenario name");
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_option("--seed", f.seed, "seed for sampled checks (overrides the config)");
  cmd->add_option("--cap", f.cap, "enumeration cap in points (overrides the config)");
  cmd->add_option("--out", f.out, "write the JSON report here");
  cmd->add_option("--format", f.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
}

sofic::Json load_config(const RunFlags& f, const std::string& kind) {
  if (!f.config_path.empty() && !f.scenario.empty()) throw sofic::SchemaError("", "give either a scenario name or --config, not both");
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw sofic::SchemaError("", "cannot read " + f.config_path);
    try {
      return sofic::Json::parse(in);
    } catch (const sofic::Json::parse_error& e) {
      throw sofic::SchemaError("", std::string("invalid JSON: ") + e.what());
    }
  }
  if (f.scenario.empty()) throw sofic::SchemaError("", "a scenario name or --config is required");
  const auto* info = sofic::find_scenario(f.scenario);
  if (!info) throw sofic::SchemaError("", "unknown scenario '" + f.scenario + "' (see 'sofic list')");
  if (!kind.empty() && info->kind != kind) throw sofic::SchemaError("/kind", "scenario '" + f.scenario + "' has kind " + info->kind);
  return info->config;
}

int run(const RunFlags& f, const std::string& kind) {
  sofic::Json report;
  try {
    const auto config = load_config(f, kind);
    if (!kind.empty() && config.is_object() && config.contains("kind") && config.at("kind") != kind) {
      throw sofic::SchemaError("/kind", "config kind does not match the '" + kind + "' command");
    }
    report = sofic::run_scenario(config, {f.seed, f.cap});
  } catch (const sofic::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const sofic::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  }
  if (!f.out.empty()) {
    std::ofstream out(f.out);
    out << report.dump(2) << "\n";
    if (!out) {
      std::cerr << "cannot write " << f.out << "\n";
      return kSchema;
    }
  }
  if (f.format == "text") std::cout << sofic::format_run_text(report);
  else if (f.out.empty()) std::cout << report.dump(2) << "\n";
  return report.at("verdict") == "pass" ? kPass : kCheckFailed;
}

void print_list() {
  std::size_t width = 0;
  for (const auto& s : sofic::scenario_catalog()) width = std::max(width, s.name.size());
  for (const auto& s : sofic::scenario_catalog()) {
    std::cout << s.name << std::string(width + 2 - s.name.size(), ' ') << "[" << s.kind << "] " << s.description << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for metric approximations of groups, wreath and halo products"};
  app.set_version_flag("--version", std::string(sofic::kToolVersion));
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "list bundled scenarios");
  list->add_flag("--json", list_json, "print the catalog as JSON");

  RunFlags flags;
  auto* run_cmd = app.add_subcommand("run", "run a bundled scenario or a config of any kind");
  add_run_flags(run_cmd, flags);
  std::vector<std::pair<CLI::App*, std::string>> kinds{{run_cmd, ""}};
  const std::vector<std::pair<std::string, std::string>> descriptions{
      {"verify-metric", "bi-invariant metric checks"},
      {"verify-compat", "product and wreath compatibility of a metric family"},
      {"verify-action", "LEF witnesses, orbit data and support refinement"},
      {"amalgamate", "amalgamate approximations of a halo product"},
      {"normal-form", "graph-product word reduction"},
      {"lef-embed", "partial embeddings into finite groups"}};
  for (const auto& [name, help] : descriptions) {
    auto* cmd = app.add_subcommand(name, help);
    add_run_flags(cmd, flags);
    kinds.push_back({cmd, name});
  }

  CLI11_PARSE(app, argc, argv);

  if (*list) {
    if (list_json) std::cout << sofic::catalog_json().dump(2) << "\n";
    else print_list();
    return kPass;
  }
  for (const auto& [cmd, kind] : kinds)
    if (*cmd) return run(flags, kind);
  return kPass;
}
