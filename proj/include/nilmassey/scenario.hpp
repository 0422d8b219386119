#pragma once

// Scenarios: an action plus a recipe for a nonabelian cocycle, run through
// the obstruction pipeline. Also the seeded random scenario generators.
//
// Scenario file:
//   {"version": "1", "scenarios": [{"id", "n", "m", "action", "cocycle"}, ...]}
// Cocycle recipes (all evaluated at level n + 1 unless stated):
//   {"x_power": [t(g)...]}          g -> x^t(g), t a weight-1 cocycle
//   {"principal": beta}             g -> beta^-1 g(beta)
//   {"twist": [recipe, beta]}       g -> beta^-1 q(g) g(beta)
//   {"abelian": {"a": [...], "b": [...]}}
//                                   g -> 1 + a(g) X + b(g) Y, level 2 only
//   {"lift_chain": recipe}          recipe at level 2, then lift_step upwards
//                                   for as long as the obstruction vanishes

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilmassey/json_io.hpp"

namespace nilmassey {

inline constexpr const char* kReportVersion = "1.0";

struct Scenario {
  std::string id;
  int n = 3;
  uint32_t m = 25;
  Json action;
  Json cocycle;
  uint64_t seed = 0;  // generator seed for random scenarios, 0 otherwise
  std::string path;   // JSON location in the scenario file, prefixed to errors
};

/// Checks field shapes and id uniqueness; throws ParseError with the JSON
/// path. The algebra is validated when the scenario runs.
std::vector<Scenario> parse_scenario_file(const Json& j);
Json to_json(const Scenario& s);

struct BuiltCocycle {
  NACocycle q;
  bool complete = false;  // q reached the requested level
};

/// Evaluates a recipe at the given level. A lift_chain that meets a
/// non-vanishing obstruction stops early and returns complete = false with
/// the highest level reached.
BuiltCocycle build_cocycle(const ActionSpec& spec, const Json& recipe, int level, const std::string& path);

enum class ScenarioStatus {
  verified,      // cocycle at level n+1: theorem and mu identity checked
  non_liftable,  // stuck at level n: mu identity checked, delta_n nonzero
  stuck,         // stuck below level n
  invalid,       // parse, validation or construction failure
};

const char* to_string(ScenarioStatus s);

struct ScenarioResult {
  std::string id;
  int n = 0;
  uint32_t m = 0;
  uint64_t seed = 0;
  ScenarioStatus status = ScenarioStatus::invalid;
  int reached_level = 0;
  std::optional<ObstructionReport> obstruction;
  std::optional<MuDeltaReport> mu_delta;
  std::vector<std::string> errors;
  bool input_error = false;  // malformed JSON as opposed to failed validation
  double elapsed_ms = 0;

  /// Every check that applies to the status passed.
  bool passed() const;
};

/// Never throws; failures land in errors with status invalid.
ScenarioResult run_scenario(const Scenario& s);

/// Runs independent scenarios on up to `threads` threads (0 = hardware
/// concurrency). Results keep the input order.
std::vector<ScenarioResult> run_scenarios(const std::vector<Scenario>& scenarios, unsigned threads = 0);

Json to_json(const ScenarioResult& r, bool timing = false);
/// {"version", "seed", "results", "summary"}
Json make_report(const std::vector<ScenarioResult>& results, uint64_t seed, bool timing = false);

enum class Profile {
  standard,       // Z/d, d in 2..5, m in {25, 49, 121, 125}, n in 3..5
  nontrivial_h2,  // Z/p, m = p^2, p in {5, 7}, n < p
  graded,         // (Z/p)^2, m = p, trivial chi, graded twist, n < p
};

std::optional<Profile> parse_profile(const std::string& name);
const char* to_string(Profile p);

/// Deterministic in (profile, count, seed).
std::vector<Scenario> random_scenarios(Profile profile, std::size_t count, uint64_t seed);

}  // namespace nilmassey
