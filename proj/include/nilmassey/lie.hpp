#pragma once

// Lie elements inside the truncated series ring, recognised with the Dynkin
// map  w1 w2 ... wk  ->  [...[[w1, w2], w3], ..., wk].

#include "nilmassey/series.hpp"

namespace nilmassey {

/// Applies the left-normed bracketing map to every word (linear extension).
Series dynkin(const Series& s);

/// True iff the constant term vanishes and each homogeneous part l_k
/// satisfies dynkin(l_k) = k * l_k. Requires every k <= degree to be a unit.
bool is_lie(const Series& s);

/// Sum over k of dynkin(s_k) / k: the identity on Lie elements and a
/// projection onto them otherwise. Constant term is dropped.
Series lie_project(const Series& s);

/// The logarithm of a group element: a series whose image in exponential
/// coordinates (see group_elt.hpp) passes is_lie. Homogeneous parts of the
/// lowest degree are plain Lie polynomials in X, Y.
class LieSeries {
 public:
  /// Throws NotLie unless s is a Lie series in xi = log(1+X), eta = log(1+Y).
  explicit LieSeries(Series s);
  /// Skips the Dynkin check; the caller vouches for the Lie property.
  static LieSeries unchecked(Series s) { return LieSeries(std::move(s), 0); }

  const Series& series() const { return s_; }
  int degree() const { return s_.degree(); }

 private:
  LieSeries(Series s, int) : s_(std::move(s)) {}
  Series s_;
};

}  // namespace nilmassey
