#pragma once

// Ring endomorphisms of the truncated series ring given on the letters.

#include <vector>

#include "nilmassey/group_elt.hpp"

namespace nilmassey {

/// The continuous ring endomorphism with X -> img_x - 1, Y -> img_y - 1.
/// On grouplike elements it is the group homomorphism x -> img_x, y -> img_y.
class Substitution {
 public:
  Substitution(const GroupElt& img_x, const GroupElt& img_y);

  int degree() const { return n_; }

  /// Requires t.degree() <= degree(); the result has t's degree.
  Series apply(const Series& t) const;
  GroupElt apply(const GroupElt& g) const { return GroupElt(apply(g.series())); }

 private:
  int n_;
  std::vector<Series> px_, py_;  // images of X and Y resized to each degree
};

/// Suffix-tree flags: nonzero[i] is set iff some word ending in word i has a
/// nonzero coefficient. Indexed like the series.
std::vector<bool> nonzero_suffixes(const Series& t);

}  // namespace nilmassey
