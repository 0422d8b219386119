#include "nilmassey/group_elt.hpp"

#include "nilmassey/substitution.hpp"

namespace nilmassey {

Series series_exp(const Series& s) {
  if (s.constant() != 0) throw InvalidArgument("exp needs a series without constant term");
  const Modulus& mod = s.modulus();
  mod.require_coprime_to_factorial(s.degree());
  Series result = Series::one(s.degree(), mod);
  Series term = result;
  for (int k = 1; k <= s.degree(); ++k) {
    term = term * s;
    term.scale(mod.inv_int(static_cast<uint64_t>(k)));
    result += term;
  }
  return result;
}

Series series_log(const Series& s) {
  if (s.constant() != 1) throw NotGrouplike("log needs constant term 1");
  const Modulus& mod = s.modulus();
  mod.require_coprime_to_factorial(s.degree());
  Series u = s;
  u.data()[0] = 0;
  Series result(s.degree(), mod);
  Series term = u;
  for (int k = 1; k <= s.degree(); ++k) {
    uint32_t c = mod.inv_int(static_cast<uint64_t>(k));
    if (k % 2 == 0) c = mod.neg(c);
    result += c * term;
    if (k < s.degree()) term = term * u;
  }
  return result;
}

GroupElt::GroupElt(Series s) : s_(std::move(s)) {
  if (s_.constant() != 1) throw NotGrouplike("constant term must be 1");
}

GroupElt GroupElt::gen_x(int n, const Modulus& mod) {
  return GroupElt(Series::one(n, mod) + Series::letter_x(n, mod), 0);
}

GroupElt GroupElt::gen_y(int n, const Modulus& mod) {
  return GroupElt(Series::one(n, mod) + Series::letter_y(n, mod), 0);
}

GroupElt GroupElt::inverse() const {
  // (1 + u)^-1 = 1 - u + u^2 - ..., evaluated as r <- 1 - u r.
  Series u = s_;
  u.data()[0] = 0;
  const Series one = Series::one(degree(), modulus());
  Series r = one;
  for (int k = 1; k <= degree(); ++k) r = one - u * r;
  return GroupElt(std::move(r), 0);
}

bool GroupElt::is_identity() const { return s_ == Series::one(degree(), modulus()); }

GroupElt group_exp(const LieSeries& l) { return GroupElt(series_exp(l.series())); }

LieSeries group_log(const GroupElt& g) { return LieSeries::unchecked(series_log(g.series())); }

GroupElt group_exp_unchecked(const Series& s) { return GroupElt(series_exp(s)); }

Series to_exponential_coordinates(const Series& s) {
  const int n = s.degree();
  const Modulus& mod = s.modulus();
  Substitution psi(GroupElt(series_exp(Series::letter_x(n, mod))), GroupElt(series_exp(Series::letter_y(n, mod))));
  return psi.apply(s);
}

Series from_exponential_coordinates(const Series& s) {
  const int n = s.degree();
  const Modulus& mod = s.modulus();
  Series lx = series_log(GroupElt::gen_x(n, mod).series());
  Series ly = series_log(GroupElt::gen_y(n, mod).series());
  lx.data()[0] = 1;
  ly.data()[0] = 1;
  Substitution inv(GroupElt{lx}, GroupElt{ly});
  return inv.apply(s);
}

bool is_grouplike(const GroupElt& g) {
  return is_lie(series_log(to_exponential_coordinates(g.series())));
}

GroupElt commutator(const GroupElt& a, const GroupElt& b) {
  return a * b * a.inverse() * b.inverse();
}

GroupElt power(const GroupElt& g, uint32_t c) {
  Series l = series_log(g.series());
  l.scale(c);
  return GroupElt(series_exp(l));
}

int lcs_degree(const GroupElt& g) {
  Series u = g.series();
  u.data()[0] = 0;
  return u.min_degree();
}

GroupElt truncate_to_level(const GroupElt& g, int l) {
  if (l < 1 || l > g.level()) throw InvalidArgument("truncation level out of range");
  return GroupElt(g.series().resized(l - 1));
}

GroupElt canonical_section(const GroupElt& g) {
  Series l = series_log(to_exponential_coordinates(g.series())).resized(g.degree() + 1);
  return GroupElt(from_exponential_coordinates(series_exp(l)));
}

uint32_t magnus_coefficient(const Word& w, const GroupElt& g) { return g.series().coeff(w); }

std::pair<uint32_t, uint32_t> abelianize(const GroupElt& g) {
  if (g.degree() < 1) return {0, 0};
  auto b = g.series().block(1);
  return {b[0], b[1]};
}

}  // namespace nilmassey
