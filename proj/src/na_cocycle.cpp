#include "nilmassey/na_cocycle.hpp"

#include <string>

namespace nilmassey {

ValidationReport validate_na_cocycle(const ActionSpec& spec, const NACocycle& q) {
  ValidationReport r;
  if (q.values.size() != spec.order()) {
    r.fail("cocycle has wrong number of values", "size=" + std::to_string(q.values.size()));
    return r;
  }
  if (q.level < 1 || q.level > spec.n() + 1) {
    r.fail("cocycle level out of range", "level=" + std::to_string(q.level));
    return r;
  }
  for (uint32_t g = 0; g < spec.order(); ++g)
    if (q.values[g].level() != q.level) {
      r.fail("cocycle value at wrong level", "g=" + std::to_string(g));
      return r;
    }
  const FiniteGroup& grp = spec.group();
  if (!q.values[grp.identity()].is_identity()) r.fail("q(e) != 1", "g=" + std::to_string(grp.identity()));
  for (uint32_t g = 0; g < spec.order(); ++g)
    for (uint32_t h = 0; h < spec.order(); ++h)
      if (!(q.values[grp.mul(g, h)] == q.values[g] * spec.apply(g, q.values[h])))
        r.fail("cocycle law q(gh) = q(g) g(q(h))", "g=" + std::to_string(g) + " h=" + std::to_string(h));
  return r;
}

NACocycle na_twist(const ActionSpec& spec, const NACocycle& q, const GroupElt& beta) {
  GroupElt b = truncate_to_level(beta, q.level);
  GroupElt b_inv = b.inverse();
  NACocycle out{q.level, {}};
  for (uint32_t g = 0; g < spec.order(); ++g) out.values.push_back(b_inv * q.values[g] * spec.apply(g, b));
  return out;
}

NACocycle principal_cocycle(const ActionSpec& spec, const GroupElt& beta) {
  GroupElt b_inv = beta.inverse();
  NACocycle out{beta.level(), {}};
  for (uint32_t g = 0; g < spec.order(); ++g) out.values.push_back(b_inv * spec.apply(g, beta));
  return out;
}

NACocycle x_power_cocycle(const ActionSpec& spec, const Cochain1& t, int level) {
  if (t.weight != 1 || !is_cocycle(spec.twisted(), t)) throw NotACocycle("t must be a weight-1 cocycle");
  GroupElt gx = GroupElt::gen_x(level - 1, spec.modulus());
  NACocycle out{level, {}};
  for (uint32_t g = 0; g < spec.order(); ++g) out.values.push_back(power(gx, t.values[g]));
  return out;
}

NACocycle abelian_cocycle(const ActionSpec& spec, const Cochain1& a, const Cochain1& b) {
  const TwistedGroup& tg = spec.twisted();
  if (a.weight != 1 || b.weight != 1 || !is_cocycle(tg, a) || !is_cocycle(tg, b))
    throw NotACocycle("abelian cocycle needs weight-1 cocycles");
  const Modulus& mod = spec.modulus();
  NACocycle out{2, {}};
  for (uint32_t g = 0; g < spec.order(); ++g) {
    Series s = Series::one(1, mod);
    s.set(Word::parse("X"), a.values[g]);
    s.set(Word::parse("Y"), b.values[g]);
    out.values.emplace_back(std::move(s));
  }
  return out;
}

NACocycle truncate(const NACocycle& q, int level) {
  NACocycle out{level, {}};
  for (const auto& v : q.values) out.values.push_back(truncate_to_level(v, level));
  return out;
}

Cochain1 projection_x(const NACocycle& q) {
  Cochain1 out{1, {}};
  for (const auto& v : q.values) out.values.push_back(abelianize(v).first);
  return out;
}

Cochain1 projection_y(const NACocycle& q) {
  Cochain1 out{1, {}};
  for (const auto& v : q.values) out.values.push_back(abelianize(v).second);
  return out;
}

}  // namespace nilmassey
