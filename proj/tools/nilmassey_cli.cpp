// nilmassey: command-line front end.
//
//   nilmassey check-lemmas --n 3..6 --m 25,49,121 --trials 500 --seed 7
//   nilmassey verify scenarios.json --out report.json
//   nilmassey random-suite --count 50 --seed 1 --profile nontrivial-h2
//   nilmassey make-action --d 2 --c 24 --gamma "[x,y]" --n 3 --m 25
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage or input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nilmassey/lemmas.hpp"
#include "nilmassey/scenario.hpp"

using namespace nilmassey;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n: expected N or A..B, got '" + s + "'");
  }
}

void write_json(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + out + " for writing");
  f << text;
}

int cmd_check_lemmas(const std::string& n_range, const std::vector<uint32_t>& ms, std::size_t trials, uint64_t seed,
                     const std::string& out) {
  auto [lo, hi] = parse_range(n_range);
  if (lo < 3) throw UsageError("--n: n must be at least 3");
  if (hi < lo || hi > kMaxDegree - 1) throw UsageError("--n: bad range " + n_range);
  if (ms.empty()) throw UsageError("--m: need at least one modulus");
  for (uint32_t m : ms) {
    if (m < 2) throw UsageError("--m: modulus must be at least 2");
    if (!Modulus(m).coprime_to_factorial(lo))
      throw UsageError("--m: gcd(" + std::to_string(m) + ", " + std::to_string(lo) + "!) != 1");
  }
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  LemmaSuiteReport rep = run_lemma_suite(ns, ms, trials, seed);
  Json lemmas = Json::array();
  for (const auto& l : rep.lemmas)
    lemmas.push_back(Json{{"name", l.name},
                          {"trials", l.trials},
                          {"failures", l.failures},
                          {"passed", l.failures == 0},
                          {"witnesses", l.witnesses}});
  write_json(Json{{"version", kReportVersion},
                  {"seed", seed},
                  {"n", n_range},
                  {"m", ms},
                  {"trials", trials},
                  {"lemmas", std::move(lemmas)},
                  {"skipped", rep.skipped},
                  {"passed", rep.ok()}},
             out);
  return rep.ok() ? kOk : kMathFailure;
}

int finish_suite(const std::vector<ScenarioResult>& results, uint64_t seed, bool timing, const std::string& out) {
  write_json(make_report(results, seed, timing), out);
  for (const auto& r : results)
    if (r.input_error) {
      std::cerr << "error: scenario " << r.id << ": " << r.errors.front() << "\n";
      return kUsage;
    }
  for (const auto& r : results)
    if (!r.passed()) return kMathFailure;
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& out, bool timing, unsigned threads) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::vector<Scenario> scenarios;
  try {
    scenarios = parse_scenario_file(j);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  return finish_suite(run_scenarios(scenarios, threads), 0, timing, out);
}

int cmd_random_suite(std::size_t count, uint64_t seed, const std::string& profile_name, const std::string& out,
                     bool timing, unsigned threads) {
  auto profile = parse_profile(profile_name);
  if (!profile) throw UsageError("--profile: unknown profile '" + profile_name + "'");
  return finish_suite(run_scenarios(random_scenarios(*profile, count, seed), threads), seed, timing, out);
}

int cmd_make_action(uint32_t d, int64_t c, const std::string& gamma, int n, uint32_t m, const std::string& out) {
  if (n < 3 || n > kMaxDegree - 1) throw UsageError("--n: n must lie in 3.." + std::to_string(kMaxDegree - 1));
  if (m < 2 || !Modulus(m).coprime_to_factorial(n))
    throw UsageError("--m: gcd(" + std::to_string(m) + ", " + std::to_string(n) + "!) != 1");
  Json shorthand{{"cyclic", Json{{"d", d}, {"c", c}, {"gamma", gamma}}}};
  ActionSpec spec = action_from_json(shorthand, n, Modulus(m), "");
  write_json(to_json(spec), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Massey products and nilpotent lifting obstructions over Z/m"};
  app.require_subcommand(1);

  std::string n_range = "3..6", out = "-", profile = "default", gamma = "[x,y]", scenario_file;
  std::vector<uint32_t> ms{25, 49, 121};
  std::size_t trials = 500, count = 50;
  uint64_t seed = 1;
  bool timing = false;
  unsigned threads = 0;
  uint32_t d = 2, m = 25;
  int64_t c = -1;
  int n = 3;

  auto* lemmas = app.add_subcommand("check-lemmas", "Randomized checks of the matrix and defining-system lemmas");
  lemmas->add_option("--n", n_range, "Degree or range A..B (n >= 3)")->capture_default_str();
  lemmas->add_option("--m", ms, "Moduli, comma separated")->delimiter(',')->capture_default_str();
  lemmas->add_option("--trials", trials, "Trials per (n, m) pair and lemma")->capture_default_str();
  lemmas->add_option("--seed", seed, "Random seed")->capture_default_str();
  lemmas->add_option("--out", out, "Report path, - for standard output")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the obstruction pipeline on a scenario file");
  verify->add_option("file", scenario_file, "Scenario JSON")->required();
  verify->add_option("--out", out, "Report path, - for standard output")->capture_default_str();
  verify->add_flag("--timing", timing, "Include per-scenario timings (makes output nondeterministic)");
  verify->add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();

  auto* suite = app.add_subcommand("random-suite", "Generate and verify random scenarios");
  suite->add_option("--count", count, "Number of scenarios")->capture_default_str();
  suite->add_option("--seed", seed, "Random seed")->capture_default_str();
  suite->add_option("--profile", profile, "default | nontrivial-h2 | graded")->capture_default_str();
  suite->add_option("--out", out, "Report path, - for standard output")->capture_default_str();
  suite->add_flag("--timing", timing, "Include per-scenario timings (makes output nondeterministic)");
  suite->add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();

  auto* make = app.add_subcommand("make-action", "Expand the cyclic shorthand into a full action");
  make->add_option("--d", d, "Order of the cyclic group")->capture_default_str();
  make->add_option("--c", c, "Character value on the generator")->capture_default_str();
  make->add_option("--gamma", gamma, "Element of [pi]_2 as a word, e.g. [x,y][[x,y],x]")->capture_default_str();
  make->add_option("--n", n, "Degree")->capture_default_str();
  make->add_option("--m", m, "Modulus")->capture_default_str();
  make->add_option("--out", out, "Output path, - for standard output")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (lemmas->parsed()) return cmd_check_lemmas(n_range, ms, trials, seed, out);
    if (verify->parsed()) return cmd_verify(scenario_file, out, timing, threads);
    if (suite->parsed()) return cmd_random_suite(count, seed, profile, out, timing, threads);
    if (make->parsed()) return cmd_make_action(d, c, gamma, n, m, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nilmassey::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
