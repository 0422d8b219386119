#include "nilmassey/action.hpp"

#include <string>

#include "nilmassey/unipotent.hpp"

namespace nilmassey {

ActionSpec::ActionSpec(int n, TwistedGroup tg, std::vector<GroupElt> frak_f)
    : n_(n), tg_(std::move(tg)), frak_f_(std::move(frak_f)) {
  if (frak_f_.size() != tg_.order()) throw DimensionMismatch("frak_f needs one value per group element");
  for (const auto& f : frak_f_) {
    if (f.degree() != n_) throw DegreeMismatch("frak_f values must have degree n");
    if (!(f.modulus() == tg_.modulus())) throw ModulusMismatch();
  }
  auto cache = std::make_shared<Cache>();
  const Modulus& mod = tg_.modulus();
  const GroupElt gx = GroupElt::gen_x(n_, mod), gy = GroupElt::gen_y(n_, mod);
  for (uint32_t g = 0; g < tg_.order(); ++g) {
    GroupElt ix = power(gx, tg_.chi(g));
    GroupElt iy = frak_f_[g].inverse() * power(gy, tg_.chi(g)) * frak_f_[g];
    std::vector<Substitution> by_degree;
    for (int d = 0; d <= n_; ++d) by_degree.emplace_back(truncate_to_level(ix, d + 1), truncate_to_level(iy, d + 1));
    cache->img_x.push_back(std::move(ix));
    cache->img_y.push_back(std::move(iy));
    cache->subst.push_back(std::move(by_degree));
  }
  cache_ = std::move(cache);
}

ActionSpec ActionSpec::untwisted(int n, TwistedGroup tg) {
  std::vector<GroupElt> f(tg.order(), GroupElt::identity(n, tg.modulus()));
  return ActionSpec(n, std::move(tg), std::move(f));
}

Series ActionSpec::apply(uint32_t g, const Series& w) const {
  if (w.degree() > n_) throw DegreeMismatch("series degree exceeds action degree");
  return cache_->subst[g][static_cast<std::size_t>(w.degree())].apply(w);
}

namespace {

std::string pair_witness(uint32_t g, uint32_t h) { return "g=" + std::to_string(g) + " h=" + std::to_string(h); }

}  // namespace

ValidationReport validate_action(const ActionSpec& spec) {
  ValidationReport r = validate_character(spec.group(), spec.twisted().chi(), spec.modulus());
  const uint32_t d = spec.order();
  const FiniteGroup& grp = spec.group();
  const auto& f = spec.frak_f();
  if (!f[grp.identity()].is_identity()) r.fail("f(e) != 1", "g=" + std::to_string(grp.identity()));
  for (uint32_t g = 0; g < d; ++g) {
    if (lcs_degree(f[g]) < 2) r.fail("f not in [pi]_2", "g=" + std::to_string(g));
    if (!is_grouplike(f[g])) r.fail("f value not grouplike", "g=" + std::to_string(g));
  }
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h) {
      const uint32_t gh = grp.mul(g, h);
      if (!(f[gh] == f[g] * spec.apply(g, f[h]))) r.fail("cocycle law f(gh) = f(g) g(f(h))", pair_witness(g, h));
      if (!(spec.apply(g, spec.img_x(h)) == spec.img_x(gh))) r.fail("action law on x", pair_witness(g, h));
      if (!(spec.apply(g, spec.img_y(h)) == spec.img_y(gh))) r.fail("action law on y", pair_witness(g, h));
    }
  return r;
}

ActionSpec make_cyclic_action(uint32_t d, uint32_t c, const GroupElt& gamma, int n, const Modulus& mod) {
  if (d == 0) throw InvalidArgument("group order must be positive");
  if (!mod.is_unit(c % mod.value())) throw BadCharacter("character value is not a unit");
  c %= mod.value();
  if (mod.pow(c, d) != 1) throw BadCharacter("c^d != 1 mod m");
  if (gamma.degree() != n || !(gamma.modulus() == mod)) throw DegreeMismatch("gamma must have degree n over Z/m");
  if (lcs_degree(gamma) < 2) throw InvalidArgument("gamma must lie in [pi]_2");

  std::vector<uint32_t> chi(d);
  chi[0] = 1;
  for (uint32_t j = 1; j < d; ++j) chi[j] = mod.mul(chi[j - 1], c);
  TwistedGroup tg(FiniteGroup::cyclic(d), mod, chi);

  // sigma_v: x -> x^c, y -> v^-1 y^c v. Each pass fixes one more degree.
  const GroupElt gx = GroupElt::gen_x(n, mod), gy = GroupElt::gen_y(n, mod);
  const GroupElt xc = power(gx, c), yc = power(gy, c);
  const GroupElt gamma_inv = gamma.inverse();
  GroupElt v = GroupElt::identity(n, mod);
  bool stable = false;
  for (int iter = 0; iter <= n + 1; ++iter) {
    Substitution sigma(xc, v.inverse() * yc * v);
    GroupElt next = gamma_inv * sigma.apply(gamma);
    if (next == v) {
      stable = true;
      break;
    }
    v = std::move(next);
  }
  if (!stable) throw InternalCheckFailed("fixed-point iteration for f(sigma) did not stabilise");

  std::vector<GroupElt> f(d, GroupElt::identity(n, mod));
  if (d > 1) {
    f[1] = v;
    Substitution sigma(xc, v.inverse() * yc * v);
    for (uint32_t j = 1; j + 1 < d; ++j) f[j + 1] = v * sigma.apply(f[j]);
    if (!(v * sigma.apply(f[d - 1])).is_identity())
      throw InternalCheckFailed("f(sigma^d) != 1 for the cyclic action");
  }
  return ActionSpec(n, std::move(tg), std::move(f));
}

Series graded_twist_element(int n, const Modulus& mod) {
  if (n < 3) throw InvalidArgument("n must be at least 3");
  const Series xi = series_log(GroupElt::gen_x(n, mod).series());
  Series l = series_log(GroupElt::gen_y(n, mod).series());
  for (int i = 0; i < n - 2; ++i) l = bracket(xi, l);
  return l;
}

ActionSpec make_graded_action(TwistedGroup tg, const Cochain1& h, int n) {
  if (h.weight != n - 1) throw InvalidArgument("h must have weight n - 1");
  if (!is_cocycle(tg, h)) throw NotACocycle("h is not a cocycle");
  const Modulus& mod = tg.modulus();
  const Series l = graded_twist_element(n, mod);
  std::vector<GroupElt> f;
  for (uint32_t g = 0; g < tg.order(); ++g) f.push_back(group_exp_unchecked(h.values[g] * Series(l)));
  return ActionSpec(n, std::move(tg), std::move(f));
}

Cochain1 f_cochain(const ActionSpec& spec, bool require_cocycle) {
  const int n = spec.n();
  const Modulus& mod = spec.modulus();
  Cochain1 out{n - 1, std::vector<uint32_t>(spec.order())};
  for (uint32_t g = 0; g < spec.order(); ++g) {
    UniMatrix c = phi_prime(spec.frak_f()[g], n);
    out.values[g] = mod.sub(c.entry(2, n + 1), c.entry(1, n));
  }
  if (require_cocycle && !is_cocycle(spec.twisted(), out)) throw NotACocycle("f is not a cocycle");
  return out;
}

}  // namespace nilmassey
