#include <gtest/gtest.h>

#include <fstream>

#include "nilmassey/lemmas.hpp"
#include "nilmassey/random.hpp"
#include "nilmassey/scenario.hpp"

using namespace nilmassey;

namespace {

const Modulus m25(25), m49(49);

Json minimal_file() {
  return Json::parse(R"({
    "version": "1",
    "scenarios": [
      {"id": "a", "n": 3, "m": 25,
       "action": {"cyclic": {"d": 2, "c": 24, "gamma": "[x,y]"}},
       "cocycle": {"principal": "xy^2"}}
    ]})");
}

std::string parse_error_path(const Json& j) {
  try {
    parse_scenario_file(j);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(Json, SeriesRoundTrip) {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    Series s = random_group_elt(rng, 4, m49).series();
    Json j = to_json(s);
    EXPECT_EQ(series_from_json(j, 4, m49, ""), s);
    EXPECT_EQ(to_json(series_from_json(Json::parse(j.dump()), 4, m49, "")).dump(), j.dump());
  }
  Json bad = to_json(Series::one(3, m25));
  bad["coeffs"][0]["word"] = "XZ";
  EXPECT_THROW(series_from_json(bad, 3, m25, "/s"), ParseError);
}

TEST(Json, ActionRoundTrip) {
  auto spec = make_cyclic_action(3, 18, parse_group_word("[x,y][[x,y],y]^-2", 4, m49), 4, m49);
  Json j = to_json(spec);
  ActionSpec back = action_from_json(j, 4, m49, "");
  EXPECT_EQ(back.frak_f(), spec.frak_f());
  EXPECT_EQ(to_json(back).dump(), j.dump());

  Json shorthand{{"cyclic", Json{{"d", 3}, {"c", 18}, {"gamma", "[x,y][[x,y],y]^-2"}}}};
  EXPECT_EQ(to_json(action_from_json(shorthand, 4, m49, "")).dump(), j.dump());

  EXPECT_THROW(action_from_json(j, 5, m49, ""), ParseError);
  Json missing{{"cyclic", Json{{"d", 3}, {"gamma", "[x,y]"}}}};
  try {
    action_from_json(missing, 4, m49, "/scenarios/0/action");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "/scenarios/0/action/cyclic/c");
  }
}

TEST(Json, GroupWords) {
  const int n = 4;
  GroupElt x = GroupElt::gen_x(n, m25), y = GroupElt::gen_y(n, m25);
  EXPECT_EQ(parse_group_word("", n, m25), GroupElt::identity(n, m25));
  EXPECT_EQ(parse_group_word("xy", n, m25), x * y);
  EXPECT_EQ(parse_group_word("x^-3", n, m25), power(x.inverse(), 3));
  EXPECT_EQ(parse_group_word("x^-3", n, m25), power(x, 22));
  EXPECT_EQ(parse_group_word("[x,y]", n, m25), commutator(x, y));
  EXPECT_EQ(parse_group_word("[[x,y],x]^2 y", n, m25), power(commutator(commutator(x, y), x), 2) * y);
  EXPECT_EQ(parse_group_word("(xy)^2", n, m25), x * y * x * y);
  for (const char* bad : {"z", "[x,y", "x^", "(x", "[x]", "x)"})
    EXPECT_THROW(parse_group_word(bad, n, m25), ParseError) << bad;
}

TEST(Json, CochainShapes) {
  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 24});
  Cochain1 c{2, {0, 7}};
  EXPECT_EQ(cochain1_from_json(to_json(c), tg, 2, ""), c);
  EXPECT_THROW(cochain1_from_json(Json{{"weight", 2}, {"values", {0, 7, 1}}}, tg, 2, ""), ParseError);
  EXPECT_THROW(cochain1_from_json(Json{{"weight", 1}, {"values", {0, 7}}}, tg, 2, ""), ParseError);
}

TEST(ScenarioFile, ShapeErrors) {
  EXPECT_NO_THROW(parse_scenario_file(minimal_file()));

  Json dup = minimal_file();
  dup["scenarios"].push_back(dup["scenarios"][0]);
  EXPECT_EQ(parse_error_path(dup), "/scenarios/1/id");

  Json small_n = minimal_file();
  small_n["scenarios"][0]["n"] = 2;
  EXPECT_EQ(parse_error_path(small_n), "/scenarios/0/n");

  Json bad_m = minimal_file();
  bad_m["scenarios"][0]["m"] = 24;
  EXPECT_EQ(parse_error_path(bad_m), "/scenarios/0/m");

  Json no_version = minimal_file();
  no_version.erase("version");
  EXPECT_EQ(parse_error_path(no_version), "/version");
}

TEST(ScenarioFile, RunErrorsCarryPath) {
  Json j = minimal_file();
  j["scenarios"][0]["action"]["cyclic"].erase("c");
  auto results = run_scenarios(parse_scenario_file(j), 1);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].status, ScenarioStatus::invalid);
  EXPECT_TRUE(results[0].input_error);
  EXPECT_NE(results[0].errors.front().find("/scenarios/0/action/cyclic/c"), std::string::npos);
}

TEST(ScenarioFile, CorruptedTwistIsInvalid) {
  Json j = minimal_file();
  Json full = to_json(make_cyclic_action(2, 24, parse_group_word("[x,y]", 3, m25), 3, m25));
  full["frak_f"][1] = "[x,y]^2";
  j["scenarios"][0]["action"] = full;
  auto r = run_scenario(parse_scenario_file(j)[0]);
  EXPECT_EQ(r.status, ScenarioStatus::invalid);
  EXPECT_FALSE(r.input_error);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.errors.empty());
}

TEST(ScenarioFile, BundledFixture) {
  std::ifstream f(std::string(NILMASSEY_SOURCE_DIR) + "/scenarios/cyclic2.json");
  ASSERT_TRUE(f.good());
  auto results = run_scenarios(parse_scenario_file(Json::parse(f)));
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed()) << r.id;
    EXPECT_EQ(r.status, ScenarioStatus::verified) << r.id;
  }
  Json report = make_report(results, 0);
  EXPECT_EQ(report["summary"]["failures"], 0);
  EXPECT_EQ(report["summary"]["scenarios"], results.size());
  EXPECT_FALSE(report["results"][0].contains("elapsed_ms"));
}

TEST(RandomSuite, DeterministicAndFiltered) {
  for (Profile p : {Profile::standard, Profile::nontrivial_h2, Profile::graded}) {
    auto a = random_scenarios(p, 12, 9), b = random_scenarios(p, 12, 9);
    ASSERT_EQ(a.size(), 12u);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
    EXPECT_NE(to_json(random_scenarios(p, 1, 10)[0]).dump(), to_json(a[0]).dump());
    EXPECT_EQ(make_report(run_scenarios(a, 2), 9).dump(), make_report(run_scenarios(b, 4), 9).dump());
  }
  for (const auto& s : random_scenarios(Profile::nontrivial_h2, 40, 3)) {
    ASSERT_TRUE(s.action.contains("cyclic"));
    const uint32_t d = s.action["cyclic"]["d"];
    EXPECT_TRUE(d == 5 || d == 7);
    EXPECT_EQ(s.m, d * d);
    EXPECT_LT(s.n, static_cast<int>(d));
  }
  Json empty = make_report(run_scenarios(random_scenarios(Profile::standard, 0, 1)), 1);
  EXPECT_TRUE(empty["results"].empty());
  EXPECT_EQ(empty["summary"]["scenarios"], 0);
  EXPECT_EQ(empty["version"], kReportVersion);
}

TEST(LemmaSuite, SmallRunPasses) {
  auto rep = run_lemma_suite({3, 4, 5}, {25, 49}, 20, 5);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.lemmas.size(), 6u);
  for (const auto& l : rep.lemmas) {
    EXPECT_GT(l.trials, 0u) << l.name;
    EXPECT_EQ(l.failures, 0u) << l.name;
  }
  ASSERT_EQ(rep.skipped.size(), 1u);  // (5, 25)
}
