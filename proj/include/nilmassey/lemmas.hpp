#pragma once

// Randomized checks of the matrix lemmas behind the evaluation map phi:
//   power_law        a_{i,i+j}(A^N) = N^j a_{i,i+j}(A), same for B
//   v_normal         M C M^-1 in V for M in U_{n+1}, C in V (mod centre)
//   b_central        B commutes with V modulo the centre
//   phi_commutators  phi([pi]_2) lies in V
//   bracket_formula  [B, C] = 1 + (a_{2,n+1}(C) - a_{1,n}(C)) E_{1,n+1}, C in V
//   defining_system  D(a_{i,j} o theta) = -sum_r (a_{i,r} o theta) u (a_{r,j} o theta)
//                    for theta = phi o p, p a cocycle for a random action

#include <cstdint>
#include <string>
#include <vector>

namespace nilmassey {

struct LemmaResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // capped
};

struct LemmaSuiteReport {
  std::vector<LemmaResult> lemmas;
  std::vector<std::string> skipped;  // (n, m) pairs with gcd(m, n!) != 1

  bool ok() const;
};

/// trials per (n, m) pair and lemma. Pairs with gcd(m, n!) != 1 are skipped
/// and listed. Deterministic in the arguments; pairs run in parallel.
LemmaSuiteReport run_lemma_suite(const std::vector<int>& ns, const std::vector<uint32_t>& ms, std::size_t trials,
                                 uint64_t seed);

}  // namespace nilmassey
