#pragma once

// Finite groups given by multiplication tables, and characters into (Z/m)^*.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "nilmassey/coeffs.hpp"
#include "nilmassey/validation.hpp"

namespace nilmassey {

class LinearSolver;

class FiniteGroup {
 public:
  using Table = std::vector<std::vector<uint32_t>>;

  /// Checks closure, associativity, identity and inverses; throws
  /// ValidationError naming the first failing triple otherwise.
  explicit FiniteGroup(Table table);

  /// Z/d with element j standing for sigma^j.
  static FiniteGroup cyclic(uint32_t d);
  /// Direct product; element (a, b) has index a * |h| + b.
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

  uint32_t order() const { return static_cast<uint32_t>(table_.size()); }
  uint32_t mul(uint32_t g, uint32_t h) const { return table_[g][h]; }
  uint32_t identity() const { return identity_; }
  uint32_t inv(uint32_t g) const { return inverse_[g]; }
  const Table& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  Table table_;
  uint32_t identity_ = 0;
  std::vector<uint32_t> inverse_;
};

/// chi(e) = 1, every value a unit, chi(gh) = chi(g) chi(h).
ValidationReport validate_character(const FiniteGroup& g, const std::vector<uint32_t>& chi, const Modulus& mod);

/// Group, modulus and character together; the coefficient data every cochain
/// computation needs. Caches powers chi(g)^k.
class TwistedGroup {
 public:
  /// Throws BadCharacter if the character fails validation.
  TwistedGroup(FiniteGroup group, Modulus mod, std::vector<uint32_t> chi);

  const FiniteGroup& group() const { return group_; }
  const Modulus& modulus() const { return mod_; }
  const std::vector<uint32_t>& chi() const { return chi_; }
  uint32_t order() const { return group_.order(); }
  uint32_t chi(uint32_t g) const { return chi_[g]; }
  /// chi(g)^k for k >= 0.
  uint32_t chi_pow(uint32_t g, int k) const;

  /// Factorized matrix of the differential C^1 -> C^2 at twist weight k.
  /// Built on first use and shared between copies.
  const LinearSolver& coboundary_solver(int weight) const;

 private:
  struct SolverCache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const LinearSolver>> by_weight;
  };

  FiniteGroup group_;
  Modulus mod_;
  std::vector<uint32_t> chi_;
  std::vector<std::vector<uint32_t>> pow_;  // pow_[k][g]
  std::shared_ptr<SolverCache> solvers_ = std::make_shared<SolverCache>();
};

}  // namespace nilmassey
