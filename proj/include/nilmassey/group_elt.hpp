#pragma once

// Elements of the free nilpotent group pi / [pi]_{n+1} over Z/m, modelled as
// series of degree n through the Magnus embedding x -> 1 + X, y -> 1 + Y. A
// series of degree d represents an element at level d + 1.
//
// The logarithm of such an element is a Lie series in xi = log(1 + X) and
// eta = log(1 + Y), not in X and Y. The ring automorphism
// X -> e^X - 1, Y -> e^Y - 1 ("exponential coordinates") turns it into an
// ordinary Lie series, which is how grouplike tests and sections work.

#include <utility>

#include "nilmassey/lie.hpp"
#include "nilmassey/series.hpp"

namespace nilmassey {

/// exp of a series with zero constant term. Requires gcd(m, n!) = 1.
Series series_exp(const Series& s);
/// log of a series with constant term 1. Throws NotGrouplike otherwise.
Series series_log(const Series& s);

class GroupElt {
 public:
  /// Throws NotGrouplike unless the constant term is 1. The full grouplike
  /// test is is_grouplike().
  explicit GroupElt(Series s);

  static GroupElt identity(int n, const Modulus& mod) { return GroupElt(Series::one(n, mod)); }
  static GroupElt gen_x(int n, const Modulus& mod);
  static GroupElt gen_y(int n, const Modulus& mod);

  const Series& series() const { return s_; }
  int degree() const { return s_.degree(); }
  int level() const { return s_.degree() + 1; }
  const Modulus& modulus() const { return s_.modulus(); }

  GroupElt inverse() const;
  bool is_identity() const;

  friend GroupElt operator*(const GroupElt& a, const GroupElt& b) {
    return GroupElt(a.s_ * b.s_, 0);
  }
  friend bool operator==(const GroupElt& a, const GroupElt& b) { return a.s_ == b.s_; }

 private:
  GroupElt(Series s, int) : s_(std::move(s)) {}
  Series s_;
};

GroupElt group_exp(const LieSeries& l);
LieSeries group_log(const GroupElt& g);
/// exp of a series assumed Lie (no Dynkin check).
GroupElt group_exp_unchecked(const Series& s);

/// X -> e^X - 1, Y -> e^Y - 1 and its inverse X -> log(1+X), Y -> log(1+Y).
Series to_exponential_coordinates(const Series& s);
Series from_exponential_coordinates(const Series& s);

/// True iff log(g) is a Lie series in xi, eta.
bool is_grouplike(const GroupElt& g);

/// a b a^-1 b^-1
GroupElt commutator(const GroupElt& a, const GroupElt& b);
/// exp(c log g)
GroupElt power(const GroupElt& g, uint32_t c);

/// Largest k with g in [pi]_k; level() for the identity.
int lcs_degree(const GroupElt& g);

/// Image at level l, i.e. as a series of degree l - 1. Requires 1 <= l <= level.
GroupElt truncate_to_level(const GroupElt& g, int l);

/// Lift to the next level: in exponential coordinates, extend the logarithm
/// by a zero top-degree part.
GroupElt canonical_section(const GroupElt& g);

uint32_t magnus_coefficient(const Word& w, const GroupElt& g);

/// (coefficient of X, coefficient of Y).
std::pair<uint32_t, uint32_t> abelianize(const GroupElt& g);

}  // namespace nilmassey
