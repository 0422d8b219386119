#include "nilmassey/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

#include "nilmassey/cochain.hpp"
#include "nilmassey/na_cocycle.hpp"
#include "nilmassey/random.hpp"
#include "nilmassey/unipotent.hpp"

namespace nilmassey {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

enum LemmaId { kPowerLaw, kVNormal, kBCentral, kPhiCommutators, kBracketFormula, kDefiningSystem, kLemmaCount };

const char* const kLemmaNames[kLemmaCount] = {"power_law",       "v_normal",        "b_central",
                                              "phi_commutators", "bracket_formula", "defining_system"};

struct Tally {
  std::size_t trials = 0, failures = 0;
  std::vector<std::string> witnesses;

  void record(bool ok, const std::string& witness) {
    ++trials;
    if (ok) return;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
  }
};

UniMatrix random_unimatrix(Rng& rng, int n, const Modulus& mod) {
  UniMatrix u(n, mod);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) u.set_entry(i, j, random_residue(rng, mod));
  return u;
}

// Free first row and last column, zero elsewhere above the diagonal.
UniMatrix random_v(Rng& rng, int n, const Modulus& mod) {
  UniMatrix u(n, mod);
  for (int j = 2; j <= n + 1; ++j) u.set_entry(1, j, random_residue(rng, mod));
  for (int i = 2; i <= n; ++i) u.set_entry(i, n + 1, random_residue(rng, mod));
  return u;
}

// Square-and-multiply on the integer exponent, independent of mat_power.
UniMatrix int_power(const UniMatrix& a, uint64_t e) {
  UniMatrix result(a.n(), a.modulus()), base = a;
  for (; e; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

bool power_law_holds(const UniMatrix& a, uint64_t N, std::string& detail) {
  const Modulus& mod = a.modulus();
  UniMatrix an = int_power(a, N);
  const uint32_t nr = static_cast<uint32_t>(N % mod.value());
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; i + j <= a.size(); ++j)
      if (an.entry(i, i + j) != mod.mul(mod.pow(nr, static_cast<uint64_t>(j)), a.entry(i, i + j))) {
        detail = "entry (" + std::to_string(i) + "," + std::to_string(i + j) + ")";
        return false;
      }
  return true;
}

std::vector<uint32_t> characters_of_order_dividing(uint32_t d, const Modulus& mod) {
  std::vector<uint32_t> out;
  for (uint32_t c = 1; c < mod.value(); ++c)
    if (mod.is_unit(c) && mod.pow(c, d) == 1) out.push_back(c);
  return out;
}

std::vector<ActionSpec> action_pool(Rng& rng, int n, const Modulus& mod) {
  std::vector<ActionSpec> pool;
  for (uint32_t d = 2; d <= 5; ++d) {
    auto chars = characters_of_order_dividing(d, mod);
    for (int rep = 0; rep < 2; ++rep) {
      uint32_t c = chars[std::uniform_int_distribution<std::size_t>(0, chars.size() - 1)(rng)];
      pool.push_back(make_cyclic_action(d, c, random_lcs_elt(rng, n, mod, 2), n, mod));
    }
  }
  return pool;
}

// A cocycle at level n: a principal cocycle, or x^t twisted by a random beta.
NACocycle random_cocycle(Rng& rng, const ActionSpec& spec) {
  const int n = spec.n();
  const Modulus& mod = spec.modulus();
  GroupElt beta = random_group_elt(rng, n, mod);
  if (rng() % 2) return truncate(principal_cocycle(spec, beta), n);
  const TwistedGroup& tg = spec.twisted();
  const uint32_t d = spec.order(), c = tg.chi(1);
  uint32_t norm = 0;
  for (uint32_t j = 0; j < d; ++j) norm = mod.add(norm, mod.pow(c, j));
  // t1 * norm = 0 exactly when t1 is a multiple of m / gcd(norm, m).
  const uint32_t step = mod.value() / std::gcd(norm, mod.value());
  const uint32_t t1 = mod.mul(step, random_residue(rng, mod));
  Cochain1 t{1, std::vector<uint32_t>(d, 0)};
  uint32_t partial = 0;
  for (uint32_t j = 0; j < d; ++j) {
    t.values[j] = mod.mul(t1, partial);
    partial = mod.add(partial, mod.pow(c, j));
  }
  return na_twist(spec, x_power_cocycle(spec, t, n), beta);
}

bool defining_identity_holds(const ActionSpec& spec, const NACocycle& p, std::string& detail) {
  const int n = spec.n();
  const TwistedGroup& tg = spec.twisted();
  const Modulus& mod = spec.modulus();
  std::vector<UniCoset> theta;
  for (const auto& v : p.values) theta.push_back(phi(v, n));
  auto a = [&](int i, int j) {
    Cochain1 c{j - i, {}};
    for (const auto& t : theta) c.values.push_back(t.entry(i, j));
    return c;
  };
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      if (i == 1 && j == n + 1) continue;
      Cochain2 lhs = d1(tg, a(i, j));
      Cochain2 sum = zero_cochain2(tg, j - i);
      for (int r = i + 1; r < j; ++r) sum = add(tg, sum, cup(tg, a(i, r), a(r, j)));
      if (lhs != scale(tg, mod.neg(1), sum)) {
        detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
    }
  return true;
}

std::vector<Tally> run_pair(int n, uint32_t m, std::size_t trials, uint64_t seed) {
  std::vector<Tally> t(kLemmaCount);
  const Modulus mod(m);
  Rng rng(seed);
  const UniMatrix A = build_A(n, mod), B = build_B(n, mod);
  const UniCoset Bc(B);
  std::vector<ActionSpec> pool = action_pool(rng, n, mod);
  const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " trial=";
  for (std::size_t k = 0; k < trials; ++k) {
    const std::string w = where + std::to_string(k);
    std::string detail;

    const uint64_t N = std::uniform_int_distribution<uint64_t>(1, 1'000'000'000)(rng);
    bool ok = power_law_holds(A, N, detail) && power_law_holds(B, N, detail);
    t[kPowerLaw].record(ok, w + " N=" + std::to_string(N) + " " + detail);

    UniMatrix M = random_unimatrix(rng, n, mod), C = random_v(rng, n, mod);
    t[kVNormal].record(in_V(UniCoset(M * C * mat_inv(M))), w);
    t[kBCentral].record(Bc * UniCoset(C) == UniCoset(C) * Bc, w);

    t[kPhiCommutators].record(in_V(phi(random_lcs_elt(rng, n, mod, 2), n)), w);

    const uint32_t value = mod.sub(C.entry(2, n + 1), C.entry(1, n));
    const bool formula = mat_commutator(B, C) == UniMatrix::elementary(n, mod, 1, n + 1, value);
    t[kBracketFormula].record(formula && bracket_entry(C) == value, w);

    const ActionSpec& spec = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    NACocycle p = random_cocycle(rng, spec);
    ok = defining_identity_holds(spec, p, detail);
    t[kDefiningSystem].record(ok, w + " d=" + std::to_string(spec.order()) + " " + detail);
  }
  return t;
}

}  // namespace

bool LemmaSuiteReport::ok() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.failures == 0; });
}

LemmaSuiteReport run_lemma_suite(const std::vector<int>& ns, const std::vector<uint32_t>& ms, std::size_t trials,
                                 uint64_t seed) {
  struct Job {
    int n;
    uint32_t m;
    uint64_t seed;
  };
  LemmaSuiteReport report;
  std::vector<Job> jobs;
  for (int n : ns)
    for (uint32_t m : ms) {
      if (!Modulus(m).coprime_to_factorial(n)) {
        report.skipped.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m));
        continue;
      }
      std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(n), m};
      uint32_t words[2];
      seq.generate(words, words + 2);
      jobs.push_back({n, m, uint64_t{words[0]} << 32 | words[1]});
    }

  std::vector<std::vector<Tally>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      results[i] = run_pair(jobs[i].n, jobs[i].m, trials, jobs[i].seed);
  };
  {
    const unsigned threads = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                                static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }

  for (int l = 0; l < kLemmaCount; ++l) {
    LemmaResult r{kLemmaNames[l], 0, 0, {}};
    for (const auto& res : results) {
      r.trials += res[l].trials;
      r.failures += res[l].failures;
      for (const auto& w : res[l].witnesses)
        if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(w);
    }
    report.lemmas.push_back(std::move(r));
  }
  return report;
}

}  // namespace nilmassey
