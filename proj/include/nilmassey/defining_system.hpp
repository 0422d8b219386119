#pragma once

// Defining systems for order-n Massey products: cochains Z_{i,j} of weight
// j - i for 1 <= i < j <= n+1, (i,j) != (1,n+1), with
//   D Z_{i,j} = sum_{r=i+1}^{j-1} Z_{i,r} u Z_{r,j}.

#include <vector>

#include "nilmassey/cochain.hpp"
#include "nilmassey/unipotent.hpp"
#include "nilmassey/validation.hpp"

namespace nilmassey {

class DefiningSystem {
 public:
  /// All entries zero. Requires n >= 2.
  DefiningSystem(int n, const TwistedGroup& tg);

  int n() const { return n_; }
  static bool valid_index(int n, int i, int j) { return 1 <= i && i < j && j <= n + 1 && !(i == 1 && j == n + 1); }

  /// Throws InvalidArgument for indices outside the system.
  const Cochain1& entry(int i, int j) const { return z_[slot(i, j)]; }
  Cochain1& entry(int i, int j) { return z_[slot(i, j)]; }

 private:
  std::size_t slot(int i, int j) const;
  int n_;
  std::vector<Cochain1> z_;
};

/// Weights and sizes, Z_{i,i+1} cocycles, and the differential identity.
/// Witnesses name (i, j, g, h).
ValidationReport validate_defining_system(const TwistedGroup& tg, const DefiningSystem& ds);

/// sum_{r=2}^{n} Z_{1,r} u Z_{r,n+1}, weight n. Throws ValidationError for an
/// invalid system and InternalCheckFailed if the result is not a cocycle.
Cochain2 massey_value(const TwistedGroup& tg, const DefiningSystem& ds);

/// theta(gh) = theta(g) chi(g)theta(h) in the quotient of U_{n+1}.
ValidationReport validate_theta(const TwistedGroup& tg, const std::vector<UniCoset>& theta);

/// Z_{i,j} = -a_{i,j} o theta. Throws NotACocycle if theta fails validate_theta.
DefiningSystem from_theta(const TwistedGroup& tg, const std::vector<UniCoset>& theta);

/// Z_{1,n} replaced by Z_{1,n} + f; the value changes by f u Z_{n,n+1}.
/// Throws NotACocycle unless f is a cocycle of weight n - 1.
DefiningSystem modify_for_zero(const TwistedGroup& tg, const DefiningSystem& ds, const Cochain1& f);

}  // namespace nilmassey
