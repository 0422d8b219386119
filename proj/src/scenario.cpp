#include "nilmassey/scenario.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <thread>

#include "nilmassey/random.hpp"

namespace nilmassey {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }

int64_t integer_field(const Json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  if (!it->is_number_integer()) throw ParseError(at(path, key), "expected an integer");
  return it->get<int64_t>();
}

std::vector<uint32_t> values_of(const Json& j, std::size_t len, const Modulus& mod, const std::string& path) {
  if (!j.is_array() || j.size() != len)
    throw ParseError(path, "expected an array of " + std::to_string(len) + " integers");
  std::vector<uint32_t> out;
  for (std::size_t i = 0; i < len; ++i) {
    if (!j[i].is_number_integer()) throw ParseError(path + "/" + std::to_string(i), "expected an integer");
    int64_t m = mod.value();
    out.push_back(static_cast<uint32_t>(((j[i].get<int64_t>() % m) + m) % m));
  }
  return out;
}

Cochain1 weight1(const ActionSpec& spec, const Json& j, const std::string& path) {
  return Cochain1{1, values_of(j, spec.order(), spec.modulus(), path)};
}

const Json& single_key(const Json& recipe, const std::string& path, std::string& key) {
  if (!recipe.is_object() || recipe.size() != 1) throw ParseError(path, "a recipe is an object with one key");
  key = recipe.begin().key();
  return recipe.begin().value();
}

}  // namespace

std::vector<Scenario> parse_scenario_file(const Json& j) {
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (!j.contains("version") || !j["version"].is_string()) throw ParseError("/version", "expected a string");
  if (!j.contains("scenarios") || !j["scenarios"].is_array()) throw ParseError("/scenarios", "expected an array");
  std::vector<Scenario> out;
  std::set<std::string> ids;
  const Json& list = j["scenarios"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string p = "/scenarios/" + std::to_string(i);
    const Json& s = list[i];
    if (!s.is_object()) throw ParseError(p, "expected an object");
    Scenario sc;
    sc.path = p;
    if (!s.contains("id") || !s["id"].is_string()) throw ParseError(at(p, "id"), "expected a string");
    sc.id = s["id"].get<std::string>();
    if (!ids.insert(sc.id).second) throw ParseError(at(p, "id"), "duplicate id " + sc.id);
    int64_t n = integer_field(s, "n", p), m = integer_field(s, "m", p);
    if (n < 3 || n > kMaxDegree - 1) throw ParseError(at(p, "n"), "n must lie in 3.." + std::to_string(kMaxDegree - 1));
    if (m < 2 || m > (int64_t{1} << 20)) throw ParseError(at(p, "m"), "m out of range");
    if (!Modulus(static_cast<uint32_t>(m)).coprime_to_factorial(static_cast<int>(n)))
      throw ParseError(at(p, "m"), "m must be coprime to n!");
    sc.n = static_cast<int>(n);
    sc.m = static_cast<uint32_t>(m);
    if (!s.contains("action")) throw ParseError(at(p, "action"), "missing field");
    if (!s.contains("cocycle")) throw ParseError(at(p, "cocycle"), "missing field");
    sc.action = s["action"];
    sc.cocycle = s["cocycle"];
    if (s.contains("seed")) sc.seed = static_cast<uint64_t>(integer_field(s, "seed", p));
    out.push_back(std::move(sc));
  }
  return out;
}

Json to_json(const Scenario& s) {
  Json j{{"id", s.id}, {"n", s.n}, {"m", s.m}, {"action", s.action}, {"cocycle", s.cocycle}};
  if (s.seed) j["seed"] = s.seed;
  return j;
}

BuiltCocycle build_cocycle(const ActionSpec& spec, const Json& recipe, int level, const std::string& path) {
  std::string key;
  const Json& arg = single_key(recipe, path, key);
  const std::string p = at(path, key);
  const int n = spec.n();
  const Modulus& mod = spec.modulus();
  if (level < 2 || level > n + 1) throw ParseError(path, "level out of range");

  if (key == "x_power") return {x_power_cocycle(spec, weight1(spec, arg, p), level), true};
  if (key == "principal") return {truncate(principal_cocycle(spec, group_elt_from_json(arg, n, mod, p)), level), true};
  if (key == "twist") {
    if (!arg.is_array() || arg.size() != 2) throw ParseError(p, "expected [recipe, beta]");
    BuiltCocycle inner = build_cocycle(spec, arg[0], level, p + "/0");
    GroupElt beta = group_elt_from_json(arg[1], n, mod, p + "/1");
    inner.q = na_twist(spec, inner.q, beta);
    return inner;
  }
  if (key == "abelian") {
    if (level != 2) throw ParseError(p, "an abelian recipe defines a level-2 cocycle; wrap it in lift_chain");
    if (!arg.is_object() || !arg.contains("a") || !arg.contains("b")) throw ParseError(p, "expected {\"a\", \"b\"}");
    return {abelian_cocycle(spec, weight1(spec, arg["a"], at(p, "a")), weight1(spec, arg["b"], at(p, "b"))), true};
  }
  if (key == "lift_chain") {
    BuiltCocycle base = build_cocycle(spec, arg, 2, p);
    if (!base.complete) return base;
    NACocycle q = base.q;
    while (q.level < level) {
      auto next = lift_step(spec, q);
      if (!next) return {std::move(q), false};
      q = std::move(*next);
    }
    return {std::move(q), true};
  }
  throw ParseError(p, "unknown recipe");
}

const char* to_string(ScenarioStatus s) {
  switch (s) {
    case ScenarioStatus::verified: return "verified";
    case ScenarioStatus::non_liftable: return "non_liftable";
    case ScenarioStatus::stuck: return "stuck";
    case ScenarioStatus::invalid: return "invalid";
  }
  return "invalid";
}

bool ScenarioResult::passed() const {
  const bool mu_ok = mu_delta && mu_delta->classes_equal && mu_delta->pointwise_holds;
  switch (status) {
    case ScenarioStatus::verified:
      return obstruction && obstruction->theorem_holds && obstruction->cochain_identity_holds &&
             obstruction->extension_identity_holds && obstruction->contains_zero && mu_ok;
    case ScenarioStatus::non_liftable: return mu_ok;
    case ScenarioStatus::stuck: return true;
    case ScenarioStatus::invalid: return false;
  }
  return false;
}

ScenarioResult run_scenario(const Scenario& s) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioResult r;
  r.id = s.id;
  r.n = s.n;
  r.m = s.m;
  r.seed = s.seed;
  try {
    Modulus mod(s.m);
    ActionSpec spec = action_from_json(s.action, s.n, mod, s.path + "/action");
    ValidationReport rep = validate_action(spec);
    if (!rep.ok()) {
      for (const auto& v : rep.violations()) r.errors.push_back("action: " + v.check + " at " + v.witness);
    } else {
      BuiltCocycle built = build_cocycle(spec, s.cocycle, s.n + 1, s.path + "/cocycle");
      ValidationReport qrep = validate_na_cocycle(spec, built.q);
      r.reached_level = built.q.level;
      if (!qrep.ok()) {
        for (const auto& v : qrep.violations()) r.errors.push_back("cocycle: " + v.check + " at " + v.witness);
      } else if (built.complete) {
        r.status = ScenarioStatus::verified;
        r.obstruction = verify_main_theorem(spec, built.q, s.id);
        r.mu_delta = mu_delta_report(spec, truncate(built.q, s.n));
      } else if (built.q.level == s.n) {
        r.status = ScenarioStatus::non_liftable;
        r.mu_delta = mu_delta_report(spec, built.q);
      } else {
        r.status = ScenarioStatus::stuck;
      }
    }
  } catch (const ParseError& e) {
    r.status = ScenarioStatus::invalid;
    r.input_error = true;
    r.obstruction.reset();
    r.mu_delta.reset();
    r.errors.push_back(e.what());
  } catch (const std::exception& e) {
    r.status = ScenarioStatus::invalid;
    r.obstruction.reset();
    r.mu_delta.reset();
    r.errors.push_back(e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<ScenarioResult> run_scenarios(const std::vector<Scenario>& scenarios, unsigned threads) {
  std::vector<ScenarioResult> out(scenarios.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, scenarios.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) out[i] = run_scenario(scenarios[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

Json to_json(const ScenarioResult& r, bool timing) {
  Json j{{"id", r.id}, {"n", r.n}, {"m", r.m}, {"seed", r.seed}, {"status", to_string(r.status)},
         {"level", r.reached_level}, {"passed", r.passed()}};
  if (r.obstruction) {
    const ObstructionReport& o = *r.obstruction;
    j["delta_class_zero"] = o.delta_class_zero;
    j["massey_class"] = o.massey_class;
    j["rhs_class"] = o.rhs_class;
    j["theorem_holds"] = o.theorem_holds;
    j["cochain_identity_holds"] = o.cochain_identity_holds;
    j["extension_identity_holds"] = o.extension_identity_holds;
    j["contains_zero"] = o.contains_zero;
    j["lift"] = o.lift ? to_json(*o.lift) : Json(nullptr);
  }
  if (r.mu_delta) {
    const MuDeltaReport& m = *r.mu_delta;
    j["mu_delta"] = Json{{"delta_class_zero", m.delta_class_zero},
                         {"lhs_class", m.lhs_class},
                         {"rhs_class", m.rhs_class},
                         {"classes_equal", m.classes_equal},
                         {"pointwise_holds", m.pointwise_holds}};
  }
  Json witnesses = r.errors;
  if (r.obstruction)
    for (const auto& w : r.obstruction->witnesses) witnesses.push_back(w);
  if (r.mu_delta)
    for (const auto& w : r.mu_delta->witnesses) witnesses.push_back(w);
  j["witnesses"] = std::move(witnesses);
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json make_report(const std::vector<ScenarioResult>& results, uint64_t seed, bool timing) {
  Json list = Json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t failures = 0, nontrivial_massey = 0, nontrivial_delta = 0;
  for (const auto& r : results) {
    list.push_back(to_json(r, timing));
    ++counts[static_cast<int>(r.status)];
    if (!r.passed()) ++failures;
    if (r.obstruction && r.obstruction->massey_class != "0") ++nontrivial_massey;
    if (r.status == ScenarioStatus::non_liftable || r.status == ScenarioStatus::stuck) ++nontrivial_delta;
  }
  Json summary{{"scenarios", results.size()},
               {"verified", counts[0]},
               {"non_liftable", counts[1]},
               {"stuck", counts[2]},
               {"invalid", counts[3]},
               {"nontrivial_massey_classes", nontrivial_massey},
               {"nonzero_obstructions", nontrivial_delta},
               {"failures", failures}};
  return Json{{"version", kReportVersion}, {"seed", seed}, {"results", std::move(list)}, {"summary", std::move(summary)}};
}

std::optional<Profile> parse_profile(const std::string& name) {
  if (name == "default") return Profile::standard;
  if (name == "nontrivial-h2") return Profile::nontrivial_h2;
  if (name == "graded") return Profile::graded;
  return std::nullopt;
}

const char* to_string(Profile p) {
  switch (p) {
    case Profile::standard: return "default";
    case Profile::nontrivial_h2: return "nontrivial-h2";
    case Profile::graded: return "graded";
  }
  return "default";
}

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Left-normed brackets [..[[x,y],z1],..,zk] with random exponents.
std::string random_commutator_word(Rng& rng, int n) {
  std::string out;
  const int factors = uniform(rng, 1, 2);
  for (int f = 0; f < factors; ++f) {
    std::string w = "[x,y]";
    const int extra = uniform(rng, 0, n - 2);
    for (int k = 0; k < extra; ++k) w = "[" + w + "," + (uniform(rng, 0, 1) ? "y" : "x") + "]";
    const int e = uniform(rng, -3, 3);
    if (e != 0 && e != 1) w += "^" + std::to_string(e);
    out += w;
  }
  return out;
}

std::string random_word(Rng& rng) {
  std::string out;
  const int len = uniform(rng, 2, 5);
  const int first = uniform(rng, 0, 1);
  for (int i = 0; i < len; ++i) {
    out += (i + first) % 2 ? "y" : "x";
    int e = uniform(rng, -4, 4);
    if (e == 0) e = 1;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<uint32_t> characters_of_order_dividing(uint32_t d, const Modulus& mod) {
  std::vector<uint32_t> out;
  for (uint32_t c = 1; c < mod.value(); ++c)
    if (mod.is_unit(c) && mod.pow(c, d) == 1) out.push_back(c);
  return out;
}

// t(sigma^j) = t1 (1 + c + ... + c^(j-1)) with t1 (1 + c + ... + c^(d-1)) = 0.
std::vector<uint32_t> random_cyclic_cocycle(Rng& rng, uint32_t d, uint32_t c, const Modulus& mod) {
  uint32_t norm = 0;
  for (uint32_t j = 0; j < d; ++j) norm = mod.add(norm, mod.pow(c, j));
  std::vector<uint32_t> t1s;
  for (uint32_t t = 0; t < mod.value(); ++t)
    if (mod.mul(t, norm) == 0) t1s.push_back(t);
  const uint32_t t1 = pick(rng, t1s);
  std::vector<uint32_t> t(d, 0);
  uint32_t partial = 0;
  for (uint32_t j = 0; j < d; ++j) {
    t[j] = mod.mul(t1, partial);
    partial = mod.add(partial, mod.pow(c, j));
  }
  return t;
}

Json random_recipe(Rng& rng, uint32_t d, uint32_t c, const Modulus& mod, bool prefer_chain) {
  auto cocycle = [&] { return Json(random_cyclic_cocycle(rng, d, c, mod)); };
  const int kind = prefer_chain ? uniform(rng, 3, 5) : uniform(rng, 0, 5);
  switch (kind) {
    case 0: return Json{{"x_power", cocycle()}};
    case 1: return Json{{"principal", random_word(rng)}};
    case 2: return Json{{"twist", Json::array({Json{{"x_power", cocycle()}}, random_word(rng)})}};
    case 3: return Json{{"lift_chain", Json{{"abelian", Json{{"a", cocycle()}, {"b", cocycle()}}}}}};
    case 4: {
      Json chain{{"lift_chain", Json{{"abelian", Json{{"a", cocycle()}, {"b", cocycle()}}}}}};
      return Json{{"twist", Json::array({chain, random_word(rng)})}};
    }
    default: {
      Json base{{"twist", Json::array({Json{{"x_power", cocycle()}}, random_word(rng)})}};
      return Json{{"lift_chain", base}};
    }
  }
}

Json cyclic_action(uint32_t d, uint32_t c, const std::string& gamma) {
  return Json{{"cyclic", Json{{"d", d}, {"c", c}, {"gamma", gamma}}}};
}

Scenario standard_scenario(Rng& rng) {
  static const std::vector<uint32_t> moduli{25, 49, 121, 125};
  const uint32_t m = pick(rng, moduli);
  Modulus mod(m);
  std::vector<int> ns;
  for (int n = 3; n <= 5; ++n)
    if (mod.coprime_to_factorial(n)) ns.push_back(n);
  Scenario s;
  s.n = pick(rng, ns);
  s.m = m;
  const uint32_t d = static_cast<uint32_t>(uniform(rng, 2, 5));
  const uint32_t c = pick(rng, characters_of_order_dividing(d, mod));
  const std::string gamma = uniform(rng, 0, 5) == 0 ? "" : random_commutator_word(rng, s.n);
  s.action = cyclic_action(d, c, gamma);
  s.cocycle = random_recipe(rng, d, c, mod, false);
  return s;
}

Scenario nontrivial_h2_scenario(Rng& rng) {
  const uint32_t p = uniform(rng, 0, 1) ? 7 : 5;
  Modulus mod(p * p);
  Scenario s;
  s.n = uniform(rng, 3, static_cast<int>(p) - 1);
  s.m = p * p;
  const uint32_t c = uniform(rng, 0, 1) ? 1 : 1 + p * static_cast<uint32_t>(uniform(rng, 1, static_cast<int>(p) - 1));
  s.action = cyclic_action(p, c, random_commutator_word(rng, s.n));
  s.cocycle = random_recipe(rng, p, c, mod, true);
  return s;
}

Scenario graded_scenario(Rng& rng) {
  const uint32_t p = uniform(rng, 0, 1) ? 7 : 5;
  Scenario s;
  s.n = uniform(rng, 3, static_cast<int>(p) - 1);
  s.m = p;
  auto hom = [&](uint32_t u, uint32_t v) {
    Json vals = Json::array();
    for (uint32_t a = 0; a < p; ++a)
      for (uint32_t b = 0; b < p; ++b) vals.push_back((u * a + v * b) % p);
    return vals;
  };
  auto coord = [&] { return static_cast<uint32_t>(uniform(rng, 0, static_cast<int>(p) - 1)); };
  const uint32_t hu = coord(), hv = coord();
  s.action = Json{{"graded", Json{{"group", Json{{"cyclic", Json::array({p, p})}}}, {"h", hom(hu, hv)}}}};
  // b is a nonzero homomorphism; a is usually proportional to it, since
  // independent a and b are obstructed already at level 2.
  uint32_t bu = coord(), bv = coord();
  if (bu == 0 && bv == 0) bv = 1;
  uint32_t au, av;
  if (uniform(rng, 0, 3) == 0) {
    au = coord();
    av = coord();
  } else {
    const uint32_t lambda = coord();
    au = lambda * bu % p;
    av = lambda * bv % p;
  }
  s.cocycle = Json{{"lift_chain", Json{{"abelian", Json{{"a", hom(au, av)}, {"b", hom(bu, bv)}}}}}};
  return s;
}

}  // namespace

std::vector<Scenario> random_scenarios(Profile profile, std::size_t count, uint64_t seed) {
  std::vector<Scenario> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(i),
                      static_cast<uint32_t>(profile)};
    std::array<uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    const uint64_t scenario_seed = (uint64_t{words[0]} << 32 | words[1]) | 1;
    Rng rng(scenario_seed);
    Scenario s;
    switch (profile) {
      case Profile::standard: s = standard_scenario(rng); break;
      case Profile::nontrivial_h2: s = nontrivial_h2_scenario(rng); break;
      case Profile::graded: s = graded_scenario(rng); break;
    }
    char id[64];
    std::snprintf(id, sizeof id, "%s-%04zu", to_string(profile), i);
    s.id = id;
    s.seed = scenario_seed;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace nilmassey
