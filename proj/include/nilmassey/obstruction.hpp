#pragma once

// The obstruction delta_k to lifting a cocycle G -> pi/[pi]_k one level up,
// degree-by-degree lifting, the pushforward along the Magnus coefficient
// mu(y, x, ..., x, y), and end-to-end checks relating these to Massey
// products of the defining system phi o p.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilmassey/defining_system.hpp"
#include "nilmassey/na_cocycle.hpp"

namespace nilmassey {

/// A set-theoretic section of pi/[pi]_{k+1} -> pi/[pi]_k.
using Section = std::function<GroupElt(const GroupElt&)>;

/// (g,h) -> r(p(g)) g(r(p(h))) r(p(gh))^-1 - 1, which is concentrated in
/// degree k; r defaults to canonical_section. Requires p.level = k <= n.
LieCochain2 delta_k(const ActionSpec& spec, const NACocycle& p);
LieCochain2 delta_k(const ActionSpec& spec, const NACocycle& p, const Section& r);

/// canonical_section followed by multiplication with 1 + P(u), where P(u) is
/// a pseudo-random degree-k Lie element that depends only on u and the seed.
Section perturbed_section(uint64_t seed, int k, const Modulus& mod);

/// A cocycle at level k+1 truncating to p, or nullopt when delta_k(p) is not
/// a coboundary.
std::optional<NACocycle> lift_step(const ActionSpec& spec, const NACocycle& p);

/// a_{1,n+1}(phi'(1 + gamma)) and the coefficient of Y X^{n-2} Y, for a
/// homogeneous degree-n Lie element gamma (series of degree n).
uint32_t mu_matrix_path(const Series& gamma);
uint32_t mu_word_path(const Series& gamma);

/// Applies mu value by value. Throws NotLie if a value fails the Lie test and
/// InternalCheckFailed if the two paths disagree.
Cochain2 mu_pushforward(const LieCochain2& c);

struct ObstructionReport {
  std::string id;
  int level = 0;
  bool delta_class_zero = false;
  std::optional<NACocycle> lift;
  std::string massey_class;
  std::string rhs_class;
  bool theorem_holds = false;
  bool cochain_identity_holds = false;   // s~(g,h) = a_{1,n+1}[B, phi' f(g)] * (-chi(g) q'_y(h))
  bool extension_identity_holds = false;  // s~ = Massey value + D(a_{1,n+1} o phi' o q')
  bool contains_zero = false;
  std::vector<std::string> witnesses;
};

/// q' is a cocycle at level n+1; p is its truncation to level n. Compares the
/// Massey value of from_theta(phi o p) with -f u p_y, checks the pointwise
/// identities, and runs contains_zero_check. Throws ValidationError if spec
/// or q' fail validation and InvalidArgument for n < 3.
ObstructionReport verify_main_theorem(const ActionSpec& spec, const NACocycle& q_prime, std::string id = "");

struct MuDeltaReport {
  bool classes_equal = false;
  bool pointwise_holds = false;  // mu delta = f u p_y + Massey value + D(a_{1,n+1} o phi' o r o p)
  bool delta_class_zero = false;
  std::string lhs_class;
  std::string rhs_class;
  std::vector<std::string> witnesses;
};

/// mu_* delta_n(p) against f u p_y + Massey value, for p at level n.
MuDeltaReport mu_delta_report(const ActionSpec& spec, const NACocycle& p);
bool verify_mu_delta(const ActionSpec& spec, const NACocycle& p);

/// Whether the system with Z_{1,n} replaced by Z_{1,n} + f has zero class.
bool contains_zero_check(const ActionSpec& spec, const NACocycle& q_prime);

}  // namespace nilmassey
