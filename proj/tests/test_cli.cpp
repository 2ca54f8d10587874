#include "sofic/cli/runner.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sofic;

namespace {

std::string pointer_of(const Json& config) {
  try {
    run_scenario(config);
  } catch (const SchemaError& e) {
    return e.pointer;
  }
  return "(accepted)";
}

Json config(const std::string& kind, Json params) { return {{"schema", 1}, {"kind", kind}, {"params", std::move(params)}}; }

}  // namespace

TEST(Catalog, NamesAreUniqueAndKindsKnown) {
  const auto& cat = scenario_catalog();
  EXPECT_GE(cat.size(), 10u);
  std::set<std::string> names;
  for (const auto& s : cat) {
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
    EXPECT_NE(std::find(scenario_kinds().begin(), scenario_kinds().end(), s.kind), scenario_kinds().end());
    EXPECT_EQ(s.config.at("kind"), s.kind);
    EXPECT_FALSE(s.anchor.empty());
  }
  EXPECT_EQ(catalog_json().size(), cat.size());
  EXPECT_EQ(find_scenario("no_such_scenario"), nullptr);
}

TEST(Catalog, EveryBundledScenarioPasses) {
  for (const auto& s : scenario_catalog()) {
    const auto report = run_scenario(s.config);
    EXPECT_EQ(report.at("verdict"), "pass") << s.name << "\n" << report.dump(1);
    EXPECT_FALSE(report.at("checks").empty()) << s.name;
  }
}

TEST(Runner, SchemaPointers) {
  EXPECT_EQ(pointer_of(config("amalgamate", {{"n", "eight"}})), "/params/n");
  EXPECT_EQ(pointer_of(config("amalgamate", {{"n", 8}, {"extra", 1}})), "/params/extra");
  EXPECT_EQ(pointer_of(config("amalgamate", {{"eps", "3/2"}})), "/params/eps");
  EXPECT_EQ(pointer_of(config("amalgamate", {{"halo", "graph"}})), "/params/halo");
  EXPECT_EQ(pointer_of(config("frobnicate", Json::object())), "/kind");
  EXPECT_EQ(pointer_of({{"schema", 2}, {"kind", "amalgamate"}}), "/schema");
  EXPECT_EQ(pointer_of({{"kind", "amalgamate"}}), "/schema");
  EXPECT_EQ(pointer_of({{"schema", 1}, {"kind", "amalgamate"}, {"colour", "red"}}), "/colour");
  EXPECT_EQ(pointer_of(Json::array()), "/");
  EXPECT_EQ(pointer_of(config("verify-action", {{"check", "refinement"}})), "/seed");
  EXPECT_EQ(pointer_of(config("normal-form", {{"complete_check", {{"max_order", 9}}}})), "/params/complete_check/max_order");
  EXPECT_EQ(pointer_of(config("normal-form", {{"input_words", {"0:1", "7:1"}}})), "/params/input_words/1");
  EXPECT_EQ(pointer_of(config("verify-compat", {{"map", "product"}, {"family", "linear"}, {"p", 4}})), "/params/p");
  EXPECT_EQ(pointer_of(config("verify-action", {{"check", "lift_consistency"}, {"scenarios", {"metric_hamming_sym4"}}})),
            "/params/scenarios/0");
}

TEST(Runner, OverridesAndEcho) {
  auto c = find_scenario("compat_hyperlinear_sampled")->config;
  const auto a = run_scenario(c, {std::uint64_t{5}, std::nullopt});
  EXPECT_EQ(a.at("config").at("seed"), 5u);
  EXPECT_EQ(a.at("config").at("cap"), 1u << 20);
  EXPECT_EQ(a.at("tool"), "sofic");
  EXPECT_EQ(a.at("report_schema"), kReportSchema);
}

TEST(Runner, DeterministicAfterStrippingRuntime) {
  for (const char* name : {"action_refinement_suite", "normal_form_p4_z3", "lamplighter_shift_amalgamation"}) {
    const auto& c = find_scenario(name)->config;
    const auto a = strip_runtime(run_scenario(c));
    const auto b = strip_runtime(run_scenario(c));
    EXPECT_EQ(a, b) << name;
    EXPECT_FALSE(a.contains("runtime_ms"));
    for (const auto& check : a.at("checks")) EXPECT_FALSE(check.contains("runtime_ms"));
  }
}

TEST(Runner, ChecksAreSortedByName) {
  const auto r = run_scenario(find_scenario("metric_transform_pow")->config);
  std::vector<std::string> names;
  for (const auto& c : r.at("checks")) names.push_back(c.at("name"));
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(names.size(), 5u);
}

TEST(Runner, CapAndPreconditions) {
  EXPECT_THROW(run_scenario(find_scenario("lampshuffler_amalgamation")->config, {std::nullopt, std::uint64_t{1000}}), CapExceeded);
  const auto r = run_scenario(config("lef-embed", {{"engine", "graph_product"}, {"range", 4}}));
  EXPECT_EQ(r.at("verdict"), "fail");
  EXPECT_EQ(r.at("checks").at(0).at("name"), "precondition");
}

TEST(Runner, FailuresAreReported) {
  const auto r = run_scenario(config("amalgamate", {{"window", 2}}));
  EXPECT_EQ(r.at("verdict"), "fail");
  const auto collapse = run_scenario(config("lef-embed", {{"engine", "semidirect"}, {"collapse", true}}));
  EXPECT_EQ(collapse.at("verdict"), "fail");
  const auto text = format_run_text(r);
  EXPECT_NE(text.find("FAIL"), std::string::npos);
  EXPECT_NE(text.find("shift_amalgamation"), std::string::npos);
}

TEST(Runner, NormalFormEchoesCanonicalWords) {
  const auto r = run_scenario(config("normal-form", {{"graph", {{"path", 3}}}, {"q", 3}, {"input_words", {"1:1 0:1 1:2"}}}));
  EXPECT_EQ(r.at("verdict"), "pass");
  const auto& forms = r.at("summary").at("canonical_forms");
  ASSERT_EQ(forms.size(), 1u);
  EXPECT_EQ(forms.at(0).at("word"), "1:1 0:1 1:2");
  EXPECT_FALSE(forms.at(0).at("canonical").get<std::string>().empty());
}
