#include "nilmassey/random.hpp"

#include <numeric>

namespace nilmassey {

uint32_t random_residue(Rng& rng, const Modulus& mod) {
  return std::uniform_int_distribution<uint32_t>(0, mod.value() - 1)(rng);
}

uint32_t random_unit(Rng& rng, const Modulus& mod) {
  for (;;) {
    uint32_t v = random_residue(rng, mod);
    if (mod.is_unit(v)) return v;
  }
}

GroupElt random_group_elt(Rng& rng, int n, const Modulus& mod, int length) {
  const GroupElt gx = GroupElt::gen_x(n, mod), gy = GroupElt::gen_y(n, mod);
  GroupElt g = GroupElt::identity(n, mod);
  for (int i = 0; i < length; ++i) g = g * power(rng() & 1 ? gx : gy, random_residue(rng, mod));
  return g;
}

Series random_lie_homogeneous(Rng& rng, int n, const Modulus& mod, int k) {
  Series out(n, mod);
  if (k < 1 || k > n) return out;
  const Series xs = Series::letter_x(n, mod), ys = Series::letter_y(n, mod);
  // Sum of a few random left-normed brackets of letters.
  for (int term = 0; term < 4; ++term) {
    Series b = rng() & 1 ? xs : ys;
    for (int i = 1; i < k; ++i) b = bracket(b, rng() & 1 ? xs : ys);
    out += random_residue(rng, mod) * b;
  }
  return out;
}

GroupElt random_lcs_elt(Rng& rng, int n, const Modulus& mod, int k) {
  GroupElt g = GroupElt::identity(n, mod);
  if (k > n) return g;
  for (int t = 0; t < 2; ++t) {
    GroupElt c = random_group_elt(rng, n, mod, 3);
    for (int i = 1; i < k; ++i) c = commutator(c, random_group_elt(rng, n, mod, 3));
    g = g * c;
  }
  // Brackets of xi = log(1+X), eta = log(1+Y) of length >= k.
  const Series xi = series_log(GroupElt::gen_x(n, mod).series());
  const Series eta = series_log(GroupElt::gen_y(n, mod).series());
  Series l(n, mod);
  for (int d = k; d <= n; ++d) {
    Series b = rng() & 1 ? xi : eta;
    for (int i = 1; i < d; ++i) b = bracket(b, rng() & 1 ? xi : eta);
    l += random_residue(rng, mod) * b;
  }
  return g * group_exp_unchecked(l);
}

}  // namespace nilmassey
