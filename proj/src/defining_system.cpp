#include "nilmassey/defining_system.hpp"

#include <string>

namespace nilmassey {

DefiningSystem::DefiningSystem(int n, const TwistedGroup& tg) : n_(n) {
  if (n < 2) throw InvalidArgument("defining systems need n >= 2");
  z_.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      if (valid_index(n, i, j)) z_[static_cast<std::size_t>((i - 1) * (n + 1) + (j - 1))] = zero_cochain1(tg, j - i);
}

std::size_t DefiningSystem::slot(int i, int j) const {
  if (!valid_index(n_, i, j))
    throw InvalidArgument("no defining-system entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return static_cast<std::size_t>((i - 1) * (n_ + 1) + (j - 1));
}

namespace {

std::string entry_witness(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace

ValidationReport validate_defining_system(const TwistedGroup& tg, const DefiningSystem& ds) {
  ValidationReport r;
  const int n = ds.n();
  const uint32_t d = tg.order();
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      if (!DefiningSystem::valid_index(n, i, j)) continue;
      const Cochain1& z = ds.entry(i, j);
      if (z.weight != j - i) r.fail("entry has wrong weight", entry_witness(i, j));
      if (z.values.size() != d) r.fail("entry has wrong size", entry_witness(i, j));
    }
  if (!r.ok()) return r;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      if (!DefiningSystem::valid_index(n, i, j)) continue;
      Cochain2 lhs = d1(tg, ds.entry(i, j));
      Cochain2 rhs = zero_cochain2(tg, j - i);
      for (int r2 = i + 1; r2 < j; ++r2) rhs = add(tg, rhs, cup(tg, ds.entry(i, r2), ds.entry(r2, j)));
      for (uint32_t g = 0; g < d; ++g)
        for (uint32_t h = 0; h < d; ++h)
          if (lhs.values[g * d + h] != rhs.values[g * d + h])
            r.fail(j == i + 1 ? "Z_{i,i+1} not a cocycle" : "D Z_{i,j} != sum Z_{i,r} u Z_{r,j}",
                   entry_witness(i, j) + " g=" + std::to_string(g) + " h=" + std::to_string(h));
    }
  return r;
}

Cochain2 massey_value(const TwistedGroup& tg, const DefiningSystem& ds) {
  auto rep = validate_defining_system(tg, ds);
  if (!rep.ok()) throw ValidationError("invalid defining system: " + rep.summary());
  const int n = ds.n();
  Cochain2 out = zero_cochain2(tg, n);
  for (int r = 2; r <= n; ++r) out = add(tg, out, cup(tg, ds.entry(1, r), ds.entry(r, n + 1)));
  if (!is_cocycle(tg, out)) throw InternalCheckFailed("Massey value is not a 2-cocycle");
  return out;
}

ValidationReport validate_theta(const TwistedGroup& tg, const std::vector<UniCoset>& theta) {
  ValidationReport r;
  const uint32_t d = tg.order();
  if (theta.size() != d) {
    r.fail("theta has wrong number of values", "size=" + std::to_string(theta.size()));
    return r;
  }
  const FiniteGroup& grp = tg.group();
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h)
      if (!(theta[grp.mul(g, h)] == theta[g] * chi_act(tg.chi(g), theta[h])))
        r.fail("theta(gh) != theta(g) g(theta(h))", "g=" + std::to_string(g) + " h=" + std::to_string(h));
  return r;
}

DefiningSystem from_theta(const TwistedGroup& tg, const std::vector<UniCoset>& theta) {
  auto rep = validate_theta(tg, theta);
  if (!rep.ok()) throw NotACocycle("theta is not a twisted cocycle: " + rep.summary());
  const int n = theta.front().n();
  const Modulus& mod = tg.modulus();
  DefiningSystem ds(n, tg);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      if (!DefiningSystem::valid_index(n, i, j)) continue;
      Cochain1& z = ds.entry(i, j);
      for (uint32_t g = 0; g < tg.order(); ++g) z.values[g] = mod.neg(theta[g].entry(i, j));
    }
  return ds;
}

DefiningSystem modify_for_zero(const TwistedGroup& tg, const DefiningSystem& ds, const Cochain1& f) {
  const int n = ds.n();
  if (f.weight != n - 1) throw NotACocycle("f must have weight n - 1");
  if (!is_cocycle(tg, f)) throw NotACocycle("f is not a cocycle");
  DefiningSystem out = ds;
  out.entry(1, n) = add(tg, ds.entry(1, n), f);
  return out;
}

}  // namespace nilmassey
