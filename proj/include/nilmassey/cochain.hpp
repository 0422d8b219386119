#pragma once

// Inhomogeneous cochains of a finite group G with values in Z/m(chi^k):
// differentials, cup products, coboundary tests and class comparison. Lie
// valued 2-cochains (values in a graded piece [pi]_k / [pi]_{k+1}) are handled
// one word coordinate at a time, each with weight k.

#include <optional>
#include <string>
#include <vector>

#include "nilmassey/finite_group.hpp"
#include "nilmassey/series.hpp"

namespace nilmassey {

struct Cochain1 {
  int weight = 0;
  std::vector<uint32_t> values;  // indexed by g

  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

struct Cochain2 {
  int weight = 0;
  std::vector<uint32_t> values;  // index g * |G| + h

  uint32_t at(uint32_t g, uint32_t h, uint32_t order) const { return values[g * order + h]; }
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

struct Cochain3 {
  int weight = 0;
  std::vector<uint32_t> values;  // index (g * |G| + h) * |G| + l

  bool is_zero() const;
};

Cochain1 zero_cochain1(const TwistedGroup& tg, int weight);
Cochain2 zero_cochain2(const TwistedGroup& tg, int weight);

bool is_zero(const Cochain1& a);
bool is_zero(const Cochain2& c);

/// Pointwise arithmetic; throws InvalidArgument on a weight mismatch.
Cochain1 add(const TwistedGroup& tg, const Cochain1& a, const Cochain1& b);
Cochain1 sub(const TwistedGroup& tg, const Cochain1& a, const Cochain1& b);
Cochain1 scale(const TwistedGroup& tg, uint32_t c, const Cochain1& a);
Cochain2 add(const TwistedGroup& tg, const Cochain2& a, const Cochain2& b);
Cochain2 sub(const TwistedGroup& tg, const Cochain2& a, const Cochain2& b);
Cochain2 scale(const TwistedGroup& tg, uint32_t c, const Cochain2& a);

/// (Da)(g,h) = chi^k(g) a(h) - a(gh) + a(g)
Cochain2 d1(const TwistedGroup& tg, const Cochain1& a);
/// (Dc)(g,h,l) = chi^w(g) c(h,l) - c(gh,l) + c(g,hl) - c(g,h)
Cochain3 d2(const TwistedGroup& tg, const Cochain2& c);

bool is_cocycle(const TwistedGroup& tg, const Cochain1& a);
bool is_cocycle(const TwistedGroup& tg, const Cochain2& c);

/// (a u b)(g,h) = a(g) chi(g)^{k'} b(h), weight k + k'.
Cochain2 cup(const TwistedGroup& tg, const Cochain1& a, const Cochain1& b);

/// Some b with Db = c, or nullopt. Throws NotACocycle unless d2(c) = 0.
std::optional<Cochain1> is_coboundary(const TwistedGroup& tg, const Cochain2& c);
/// [a] = [b] in H^2. Both must be cocycles of the same weight.
bool classes_equal(const TwistedGroup& tg, const Cochain2& a, const Cochain2& b);
/// "0" for the zero class, otherwise a hash of the cokernel coordinates.
/// Equal tokens within one TwistedGroup and weight mean equal classes.
std::string class_token(const TwistedGroup& tg, const Cochain2& c);

/// 1- and 2-cochains valued in homogeneous degree-k series (stored as series
/// of degree k).
struct LieCochain1 {
  int degree = 0;
  std::vector<Series> values;
};

struct LieCochain2 {
  int degree = 0;
  std::vector<Series> values;  // index g * |G| + h
};

/// The scalar cochain of one word coordinate, with weight = degree.
Cochain2 coordinate(const LieCochain2& c, const Word& w);
LieCochain2 d1(const TwistedGroup& tg, const LieCochain1& a);
bool is_cocycle(const TwistedGroup& tg, const LieCochain2& c);
bool is_zero(const LieCochain2& c);
/// Solves Db = c one coordinate at a time and projects every value onto Lie
/// elements, so a Lie-valued c yields a Lie-valued b. Throws NotACocycle.
std::optional<LieCochain1> solve_coboundary(const TwistedGroup& tg, const LieCochain2& c);
LieCochain2 sub(const LieCochain2& a, const LieCochain2& b);

}  // namespace nilmassey
