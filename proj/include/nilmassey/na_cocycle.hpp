#pragma once

// Nonabelian 1-cocycles G -> pi / [pi]_l for an action: q(gh) = q(g) g(q(h)).

#include "nilmassey/action.hpp"

namespace nilmassey {

struct NACocycle {
  int level = 1;                // values are series of degree level - 1
  std::vector<GroupElt> values;  // indexed by g

  bool operator==(const NACocycle&) const = default;
};

/// Shape, q(e) = 1 and the twisted cocycle law over all pairs.
ValidationReport validate_na_cocycle(const ActionSpec& spec, const NACocycle& q);

/// g -> beta^-1 q(g) g(beta). beta is truncated to the level of q.
NACocycle na_twist(const ActionSpec& spec, const NACocycle& q, const GroupElt& beta);

/// g -> beta^-1 g(beta) at the level of beta (= beta.level()).
NACocycle principal_cocycle(const ActionSpec& spec, const GroupElt& beta);

/// g -> x^t(g). Throws NotACocycle unless t is a weight-1 cocycle.
NACocycle x_power_cocycle(const ActionSpec& spec, const Cochain1& t, int level);

/// g -> 1 + a(g) X + b(g) Y at level 2, for weight-1 cocycles a, b.
NACocycle abelian_cocycle(const ActionSpec& spec, const Cochain1& a, const Cochain1& b);

NACocycle truncate(const NACocycle& q, int level);

/// Weight-1 cochains g -> coefficient of X (resp. Y) in q(g).
Cochain1 projection_x(const NACocycle& q);
Cochain1 projection_y(const NACocycle& q);

}  // namespace nilmassey
