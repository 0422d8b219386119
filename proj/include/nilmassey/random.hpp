#pragma once

// Random elements for property checks and scenario generation. All draws come
// from a caller-owned std::mt19937_64, so results are reproducible by seed.

#include <random>

#include "nilmassey/group_elt.hpp"

namespace nilmassey {

using Rng = std::mt19937_64;

uint32_t random_residue(Rng& rng, const Modulus& mod);
uint32_t random_unit(Rng& rng, const Modulus& mod);

/// Product of `length` random generator powers x^a, y^b.
GroupElt random_group_elt(Rng& rng, int n, const Modulus& mod, int length = 6);

/// Random element of [pi]_k (k >= 2): a product of iterated commutators of
/// random elements, multiplied by exp of a random Lie element of degree >= k.
GroupElt random_lcs_elt(Rng& rng, int n, const Modulus& mod, int k);

/// Random homogeneous Lie element of degree k, as a series of degree n.
Series random_lie_homogeneous(Rng& rng, int n, const Modulus& mod, int k);

}  // namespace nilmassey
