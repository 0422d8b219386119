#include "nilmassey/obstruction.hpp"

#include <functional>
#include <string>

#include "nilmassey/lie.hpp"
#include "nilmassey/random.hpp"

namespace nilmassey {
namespace {

std::string pair_witness(uint32_t g, uint32_t h) { return "g=" + std::to_string(g) + " h=" + std::to_string(h); }

void require_pipeline_degree(const ActionSpec& spec) {
  if (spec.n() < 3) throw InvalidArgument("n must be at least 3");
}

void require_valid(const ActionSpec& spec, const NACocycle& q) {
  auto rep = validate_action(spec);
  if (!rep.ok()) throw ValidationError("action: " + rep.summary());
  rep = validate_na_cocycle(spec, q);
  if (!rep.ok()) throw ValidationError("cocycle: " + rep.summary());
}

std::vector<UniCoset> phi_of(const ActionSpec& spec, const NACocycle& p) {
  std::vector<UniCoset> theta;
  for (const auto& v : p.values) theta.push_back(phi(v, spec.n()));
  return theta;
}

}  // namespace

LieCochain2 delta_k(const ActionSpec& spec, const NACocycle& p) {
  return delta_k(spec, p, [](const GroupElt& u) { return canonical_section(u); });
}

LieCochain2 delta_k(const ActionSpec& spec, const NACocycle& p, const Section& r) {
  const int k = p.level;
  if (k < 1 || k > spec.n()) throw InvalidArgument("delta_k needs 1 <= level <= n");
  const uint32_t d = spec.order();
  const FiniteGroup& grp = spec.group();
  std::vector<GroupElt> lifted, lifted_inv;
  for (const auto& v : p.values) {
    lifted.push_back(r(v));
    lifted_inv.push_back(lifted.back().inverse());
  }
  LieCochain2 out{k, {}};
  out.values.reserve(static_cast<std::size_t>(d) * d);
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h) {
      GroupElt prod = lifted[g] * spec.apply(g, lifted[h]) * lifted_inv[grp.mul(g, h)];
      if (lcs_degree(prod) < k)
        throw InternalCheckFailed("delta_k value not in [pi]_k at " + pair_witness(g, h));
      Series v = prod.series().homogeneous(k);
      if (!is_lie(v)) throw InternalCheckFailed("delta_k value not Lie at " + pair_witness(g, h));
      out.values.push_back(std::move(v));
    }
  return out;
}

Section perturbed_section(uint64_t seed, int k, const Modulus& mod) {
  return [seed, k, mod](const GroupElt& u) {
    uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (uint32_t v : u.series().data()) h = (h ^ v) * 0x100000001b3ull;
    Rng rng(h);
    Series p = random_lie_homogeneous(rng, k, mod, k);
    return canonical_section(u) * GroupElt(Series::one(k, mod) + p);
  };
}

std::optional<NACocycle> lift_step(const ActionSpec& spec, const NACocycle& p) {
  LieCochain2 delta = delta_k(spec, p);
  auto b = solve_coboundary(spec.twisted(), delta);
  if (!b) return std::nullopt;
  NACocycle q{p.level + 1, {}};
  const Series one = Series::one(p.level, spec.modulus());
  for (uint32_t g = 0; g < spec.order(); ++g)
    q.values.push_back(canonical_section(p.values[g]) * GroupElt(one - b->values[g]));
  auto rep = validate_na_cocycle(spec, q);
  if (!rep.ok()) throw InternalCheckFailed("lift failed validation: " + rep.summary());
  return q;
}

uint32_t mu_matrix_path(const Series& gamma) {
  const int n = gamma.degree();
  return phi_prime(GroupElt(Series::one(n, gamma.modulus()) + gamma), n).entry(1, n + 1);
}

uint32_t mu_word_path(const Series& gamma) {
  const int n = gamma.degree();
  return gamma.coeff(Word::parse("Y" + std::string(static_cast<std::size_t>(n - 2), 'X') + "Y"));
}

Cochain2 mu_pushforward(const LieCochain2& c) {
  Cochain2 out{c.degree, {}};
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const Series& v = c.values[i];
    if (!is_lie(v) || v.min_degree() < c.degree) throw NotLie("value " + std::to_string(i) + " is not a degree-n Lie element");
    uint32_t a = mu_matrix_path(v), b = mu_word_path(v);
    if (a != b) throw InternalCheckFailed("mu paths disagree at value " + std::to_string(i));
    out.values.push_back(a);
  }
  return out;
}

bool contains_zero_check(const ActionSpec& spec, const NACocycle& q_prime) {
  require_pipeline_degree(spec);
  const TwistedGroup& tg = spec.twisted();
  NACocycle p = truncate(q_prime, spec.n());
  DefiningSystem ds = from_theta(tg, phi_of(spec, p));
  DefiningSystem modified = modify_for_zero(tg, ds, f_cochain(spec));
  return is_coboundary(tg, massey_value(tg, modified)).has_value();
}

ObstructionReport verify_main_theorem(const ActionSpec& spec, const NACocycle& q_prime, std::string id) {
  require_pipeline_degree(spec);
  const int n = spec.n();
  if (q_prime.level != n + 1) throw InvalidArgument("q' must be a cocycle at level n + 1");
  require_valid(spec, q_prime);
  const TwistedGroup& tg = spec.twisted();
  const Modulus& mod = spec.modulus();
  const FiniteGroup& grp = spec.group();
  const uint32_t d = spec.order();

  ObstructionReport rep;
  rep.id = std::move(id);
  rep.level = n;

  NACocycle p = truncate(q_prime, n);
  rep.delta_class_zero = solve_coboundary(tg, delta_k(spec, p)).has_value();
  rep.lift = lift_step(spec, p);

  DefiningSystem ds = from_theta(tg, phi_of(spec, p));
  Cochain2 mv = massey_value(tg, ds);
  Cochain1 f = f_cochain(spec);
  Cochain1 py = projection_y(p);
  Cochain2 rhs = scale(tg, mod.neg(1), cup(tg, f, py));
  rep.massey_class = class_token(tg, mv);
  rep.rhs_class = class_token(tg, rhs);
  rep.theorem_holds = classes_equal(tg, mv, rhs);
  if (!rep.theorem_holds) rep.witnesses.push_back("Massey class " + rep.massey_class + " != " + rep.rhs_class);

  // Pointwise identities for the section s = phi' o q'.
  std::vector<UniMatrix> s, s_inv;
  for (const auto& v : q_prime.values) {
    s.push_back(phi_prime(v, n));
    s_inv.push_back(mat_inv(s.back()));
  }
  std::vector<uint32_t> bracket(d);
  for (uint32_t g = 0; g < d; ++g) bracket[g] = bracket_entry(phi_prime(spec.frak_f()[g], n));
  Cochain1 corner{n, {}};
  for (const auto& m : s) corner.values.push_back(m.entry(1, n + 1));
  Cochain2 dcorner = d1(tg, corner);
  Cochain1 qy = projection_y(q_prime);
  rep.cochain_identity_holds = true;
  rep.extension_identity_holds = true;
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h) {
      UniMatrix ext = s[g] * chi_act(tg.chi(g), s[h]) * s_inv[grp.mul(g, h)];
      const uint32_t st = ext.entry(1, n + 1);
      if (!(UniMatrix::elementary(n, mod, 1, n + 1, st) == ext)) {
        rep.cochain_identity_holds = false;
        rep.witnesses.push_back("extension value not central at " + pair_witness(g, h));
        continue;
      }
      const uint32_t closed = mod.mul(bracket[g], mod.neg(mod.mul(tg.chi(g), qy.values[h])));
      if (st != closed) {
        rep.cochain_identity_holds = false;
        rep.witnesses.push_back("s~ closed form fails at " + pair_witness(g, h));
      }
      if (st != mod.add(mv.values[g * d + h], dcorner.values[g * d + h])) {
        rep.extension_identity_holds = false;
        rep.witnesses.push_back("s~ != Massey value + D(corner) at " + pair_witness(g, h));
      }
    }

  rep.contains_zero = contains_zero_check(spec, q_prime);
  return rep;
}

MuDeltaReport mu_delta_report(const ActionSpec& spec, const NACocycle& p) {
  require_pipeline_degree(spec);
  const int n = spec.n();
  if (p.level != n) throw InvalidArgument("p must be a cocycle at level n");
  require_valid(spec, p);
  const TwistedGroup& tg = spec.twisted();
  const uint32_t d = spec.order();

  MuDeltaReport rep;
  LieCochain2 delta = delta_k(spec, p);
  rep.delta_class_zero = solve_coboundary(tg, delta).has_value();
  Cochain2 lhs = mu_pushforward(delta);
  Cochain2 mv = massey_value(tg, from_theta(tg, phi_of(spec, p)));
  Cochain2 rhs = add(tg, cup(tg, f_cochain(spec), projection_y(p)), mv);
  rep.lhs_class = class_token(tg, lhs);
  rep.rhs_class = class_token(tg, rhs);
  rep.classes_equal = classes_equal(tg, lhs, rhs);
  if (!rep.classes_equal) rep.witnesses.push_back("class " + rep.lhs_class + " != " + rep.rhs_class);

  Cochain1 corner{n, {}};
  for (const auto& v : p.values) corner.values.push_back(phi_prime(canonical_section(v), n).entry(1, n + 1));
  Cochain2 expect = add(tg, rhs, d1(tg, corner));
  rep.pointwise_holds = true;
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h)
      if (lhs.values[g * d + h] != expect.values[g * d + h]) {
        rep.pointwise_holds = false;
        rep.witnesses.push_back("pointwise identity fails at " + pair_witness(g, h));
      }
  return rep;
}

bool verify_mu_delta(const ActionSpec& spec, const NACocycle& p) { return mu_delta_report(spec, p).classes_equal; }

}  // namespace nilmassey
