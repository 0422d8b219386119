#pragma once

// Truncated noncommutative power series in X, Y over Z/m.
//
// Storage is dense: a series of degree n holds all 2^(n+1) - 1 words of length
// at most n. Words of length L occupy the block [2^L - 1, 2^(L+1) - 1), and
// inside a block a word is addressed by its letters read as binary digits
// (X = 0, Y = 1, first letter most significant).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilmassey/coeffs.hpp"

namespace nilmassey {

inline constexpr int kMaxDegree = 12;

struct Word {
  int length = 0;
  uint64_t bits = 0;

  /// Parses a string over {X, Y}. Throws InvalidArgument on other letters.
  static Word parse(std::string_view s);
  std::string str() const;
  /// Position inside a dense series.
  std::size_t index() const { return ((std::size_t{1} << length) - 1) + bits; }
  int letter(int i) const { return static_cast<int>((bits >> (length - 1 - i)) & 1u); }

  friend bool operator==(const Word&, const Word&) = default;
};

inline std::size_t block_offset(int length) { return (std::size_t{1} << length) - 1; }
inline std::size_t block_size(int length) { return std::size_t{1} << length; }

class Series {
 public:
  /// The zero series of degree n. Throws InvalidArgument unless 0 <= n <= kMaxDegree.
  Series(int n, Modulus mod);

  static Series one(int n, const Modulus& mod);
  static Series letter_x(int n, const Modulus& mod);
  static Series letter_y(int n, const Modulus& mod);
  static Series monomial(const Word& w, uint32_t c, int n, const Modulus& mod);

  int degree() const { return n_; }
  const Modulus& modulus() const { return mod_; }
  uint32_t m() const { return mod_.value(); }

  uint32_t coeff(const Word& w) const;
  void set(const Word& w, uint32_t v);
  uint32_t constant() const { return c_[0]; }

  std::span<uint32_t> block(int length) {
    return {c_.data() + block_offset(length), block_size(length)};
  }
  std::span<const uint32_t> block(int length) const {
    return {c_.data() + block_offset(length), block_size(length)};
  }
  std::span<uint32_t> data() { return c_; }
  std::span<const uint32_t> data() const { return c_; }

  bool is_zero() const;
  /// Smallest length carrying a nonzero coefficient, or degree()+1 if zero.
  int min_degree() const;

  /// Copy with degree n'; coefficients above n' are dropped, new ones are zero.
  Series resized(int n) const;
  /// Keeps the degree, zeroes all words longer than k.
  Series truncated(int k) const;
  /// The homogeneous component of length k (same degree as *this).
  Series homogeneous(int k) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& scale(uint32_t c);

  friend bool operator==(const Series& a, const Series& b) {
    return a.n_ == b.n_ && a.mod_ == b.mod_ && a.c_ == b.c_;
  }

 private:
  int n_;
  Modulus mod_;
  std::vector<uint32_t> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(uint32_t c, Series a);

/// Product truncated at degree of the operands. Throws DegreeMismatch or
/// ModulusMismatch if they differ.
Series operator*(const Series& a, const Series& b);

/// out += a * b, dropping every word longer than out.degree(). Operand
/// degrees may differ from each other and from out.
void mul_acc(Series& out, const Series& a, const Series& b);

/// ab - ba.
Series bracket(const Series& a, const Series& b);

}  // namespace nilmassey
