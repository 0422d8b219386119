#pragma once

// Upper unitriangular (n+1) x (n+1) matrices over Z/m, the quotient by the
// corner entry, the matrices A and B, the subgroup V, and the evaluation
// maps phi' (into U_{n+1}) and phi (into the quotient).
//
// Entry accessors are 1-based to match the usual a_{i,j} notation.

#include <vector>

#include "nilmassey/group_elt.hpp"

namespace nilmassey {

class UniMatrix {
 public:
  /// The identity of U_{n+1}. Requires n >= 1.
  UniMatrix(int n, Modulus mod);
  /// Throws InvalidArgument unless the entries are upper unitriangular.
  static UniMatrix from_entries(int n, const Modulus& mod, std::vector<uint32_t> row_major);
  /// 1 + c E_{i,j} for i < j.
  static UniMatrix elementary(int n, const Modulus& mod, int i, int j, uint32_t c);

  int n() const { return n_; }
  int size() const { return n_ + 1; }
  const Modulus& modulus() const { return mod_; }

  uint32_t entry(int i, int j) const { return a_[idx(i, j)]; }
  /// Only strictly upper entries may be set.
  void set_entry(int i, int j, uint32_t v);
  const std::vector<uint32_t>& entries() const { return a_; }

  bool is_identity() const;

  friend UniMatrix operator*(const UniMatrix& a, const UniMatrix& b);
  friend bool operator==(const UniMatrix& a, const UniMatrix& b) {
    return a.n_ == b.n_ && a.mod_ == b.mod_ && a.a_ == b.a_;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j - 1);
  }
  int n_;
  Modulus mod_;
  std::vector<uint32_t> a_;
};

UniMatrix mat_inv(const UniMatrix& m);
/// exp(c log M). Requires gcd(m, n!) = 1.
UniMatrix mat_power(const UniMatrix& m, uint32_t c);
/// a b a^-1 b^-1
UniMatrix mat_commutator(const UniMatrix& a, const UniMatrix& b);

/// Entry (i,j) scaled by c^(j-i). Throws NotAUnit unless c is a unit.
UniMatrix chi_act(uint32_t c, const UniMatrix& m);

/// A = exp(sum_{i=2}^{n-1} E_{i,i+1}), i.e. a_{ij} = 1/(j-i)! for 1<i<j<n+1.
/// Requires n >= 3 and gcd(m, n!) = 1.
UniMatrix build_A(int n, const Modulus& mod);
/// B = 1 + E_{1,2} + E_{n,n+1}. Requires n >= 3.
UniMatrix build_B(int n, const Modulus& mod);

/// Element of U_{n+1} modulo the centre {1 + c E_{1,n+1}}; the stored
/// representative has a zero corner entry.
class UniCoset {
 public:
  explicit UniCoset(UniMatrix rep);
  static UniCoset identity(int n, const Modulus& mod) { return UniCoset(UniMatrix(n, mod)); }

  const UniMatrix& rep() const { return rep_; }
  int n() const { return rep_.n(); }
  uint32_t entry(int i, int j) const { return rep_.entry(i, j); }

  UniCoset inverse() const { return UniCoset(mat_inv(rep_)); }
  friend UniCoset operator*(const UniCoset& a, const UniCoset& b) { return UniCoset(a.rep_ * b.rep_); }
  friend bool operator==(const UniCoset& a, const UniCoset& b) { return a.rep_ == b.rep_; }

 private:
  UniMatrix rep_;
};

UniCoset chi_act(uint32_t c, const UniCoset& m);

/// a_{ij} = 0 whenever 1 < i < j < n+1.
bool in_V(const UniCoset& c);
bool in_V(const UniMatrix& c);

/// Evaluates X -> A - 1, Y -> B - 1 on the series of g. Words longer than n
/// map to zero, so g may have any degree >= n.
UniMatrix phi_prime(const GroupElt& g, int n);
/// Same with the (n+1) x (n+1) size read from g: n = g.degree().
UniMatrix phi_prime(const GroupElt& g);
/// Image in the quotient. Also accepts g of degree n - 1, since degree-n words
/// only reach the corner entry.
UniCoset phi(const GroupElt& g, int n);

/// a_{2,n+1}(C) - a_{1,n}(C). Throws NotInV if C is not in V (mod centre);
/// throws InternalCheckFailed if [B, C] != 1 + value E_{1,n+1}.
uint32_t bracket_entry(const UniMatrix& c);

}  // namespace nilmassey
