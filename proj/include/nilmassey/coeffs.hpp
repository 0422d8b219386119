#pragma once

// Exact arithmetic in Z/m.

#include <cstdint>
#include <memory>
#include <vector>

#include "nilmassey/errors.hpp"

namespace nilmassey {

struct PrimePower {
  uint32_t prime;
  uint32_t exponent;
  uint32_t value;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A modulus m >= 2 together with its prime factorization. Copies share the
/// factorization, so passing by value is cheap.
class Modulus {
 public:
  static constexpr uint64_t kMax = (1ull << 31) - 1;

  /// Throws InvalidArgument unless 2 <= m <= kMax.
  explicit Modulus(uint64_t m);

  uint32_t value() const { return m_; }
  const std::vector<PrimePower>& factorization() const { return *factors_; }
  bool is_prime_power() const { return factors_->size() == 1; }

  /// gcd(m, n!) == 1, i.e. every prime factor exceeds n.
  bool coprime_to_factorial(int n) const;
  /// Throws InvalidArgument unless coprime_to_factorial(n).
  void require_coprime_to_factorial(int n) const;

  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(m_);
    return static_cast<uint32_t>(r < 0 ? r + m_ : r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return static_cast<uint32_t>(s >= m_ ? s - m_ : s);
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + (m_ - b); }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : m_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % m_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  bool is_unit(uint32_t a) const;
  /// Throws NotAUnit if gcd(a, m) != 1.
  uint32_t inv(uint32_t a) const;
  /// Residue of 1/k for a positive integer k coprime to m.
  uint32_t inv_int(uint64_t k) const { return inv(reduce(static_cast<int64_t>(k % m_))); }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.m_ == b.m_; }

 private:
  uint32_t m_;
  std::shared_ptr<const std::vector<PrimePower>> factors_;
};

/// A canonical representative in [0, m).
class Residue {
 public:
  Residue(int64_t v, Modulus mod) : value_(mod.reduce(v)), mod_(std::move(mod)) {}

  uint32_t value() const { return value_; }
  const Modulus& modulus() const { return mod_; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  uint32_t value_;
  Modulus mod_;
};

enum class ArithOp { add, sub, mul };

/// Throws ModulusMismatch if the moduli differ.
Residue residue_arith(const Residue& a, const Residue& b, ArithOp op);
/// Throws NotAUnit if a is not invertible.
Residue residue_inv(const Residue& a);

Residue operator+(const Residue& a, const Residue& b);
Residue operator-(const Residue& a, const Residue& b);
Residue operator*(const Residue& a, const Residue& b);

/// Projection of v onto Z/p^a for each prime power factor of the modulus.
std::vector<uint32_t> crt_split(uint32_t v, const Modulus& mod);
/// Inverse of crt_split. Throws DimensionMismatch on a wrong number of parts.
uint32_t crt_join(const std::vector<uint32_t>& parts, const Modulus& mod);

/// p-adic valuation of a residue modulo q = p^a; returns a for zero.
uint32_t valuation(uint32_t v, uint32_t p, uint32_t a);

}  // namespace nilmassey
