#pragma once

// Finite-group actions on the free nilpotent group of the form
//   g(x) = x^chi(g),   g(y) = f(g)^-1 y^chi(g) f(g),
// with f : G -> [pi]_2 a cocycle for the action it defines.

#include <memory>
#include <vector>

#include "nilmassey/cochain.hpp"
#include "nilmassey/group_elt.hpp"
#include "nilmassey/substitution.hpp"
#include "nilmassey/validation.hpp"

namespace nilmassey {

class ActionSpec {
 public:
  /// frak_f holds one element of degree n per group element. Throws
  /// DimensionMismatch / DegreeMismatch / ModulusMismatch on shape errors;
  /// the algebraic laws are checked by validate_action.
  ActionSpec(int n, TwistedGroup tg, std::vector<GroupElt> frak_f);

  /// chi as given, f identically 1.
  static ActionSpec untwisted(int n, TwistedGroup tg);

  int n() const { return n_; }
  const TwistedGroup& twisted() const { return tg_; }
  const FiniteGroup& group() const { return tg_.group(); }
  const Modulus& modulus() const { return tg_.modulus(); }
  uint32_t order() const { return tg_.order(); }
  uint32_t chi(uint32_t g) const { return tg_.chi(g); }
  const std::vector<GroupElt>& frak_f() const { return frak_f_; }

  /// Images of the generators at degree n.
  const GroupElt& img_x(uint32_t g) const { return cache_->img_x[g]; }
  const GroupElt& img_y(uint32_t g) const { return cache_->img_y[g]; }

  /// Action of g on a series of degree <= n.
  Series apply(uint32_t g, const Series& w) const;
  GroupElt apply(uint32_t g, const GroupElt& w) const { return GroupElt(apply(g, w.series())); }

 private:
  struct Cache {
    std::vector<GroupElt> img_x, img_y;
    std::vector<std::vector<Substitution>> subst;  // [g][degree]
  };
  int n_;
  TwistedGroup tg_;
  std::vector<GroupElt> frak_f_;
  std::shared_ptr<const Cache> cache_;
};

inline Series apply_action(const ActionSpec& spec, uint32_t g, const Series& w) { return spec.apply(g, w); }
inline GroupElt apply_action(const ActionSpec& spec, uint32_t g, const GroupElt& w) { return spec.apply(g, w); }

/// Character law, f(e) = 1, f(g) grouplike and in [pi]_2, the cocycle law
/// f(gh) = f(g) g(f(h)), and g(h(w)) = (gh)(w) on both generators. Every
/// failure carries its (g, h) witness.
ValidationReport validate_action(const ActionSpec& spec);

/// G = Z/d, chi(sigma^j) = c^j and f(g) = gamma^-1 g(gamma), obtained as the
/// fixed point of v -> gamma^-1 sigma_v(gamma). Throws BadCharacter unless
/// c^d = 1 and c is a unit; InvalidArgument unless gamma is in [pi]_2.
ActionSpec make_cyclic_action(uint32_t d, uint32_t c, const GroupElt& gamma, int n, const Modulus& mod);

/// ad_xi^{n-2}(eta) with xi = log(1+X), eta = log(1+Y), as a series of degree n.
Series graded_twist_element(int n, const Modulus& mod);

/// f(g) = exp(h(g) l) with l = graded_twist_element(n). Every g acts on l by
/// chi(g)^{n-1}, so this is a valid action on any group whenever h is a
/// weight n-1 cocycle. Throws NotACocycle otherwise. Requires n >= 3.
ActionSpec make_graded_action(TwistedGroup tg, const Cochain1& h, int n);

/// g -> a_{2,n+1}(phi f(g)) - a_{1,n}(phi f(g)), weight n - 1. With
/// require_cocycle, throws NotACocycle if Df != 0.
Cochain1 f_cochain(const ActionSpec& spec, bool require_cocycle = true);

}  // namespace nilmassey
