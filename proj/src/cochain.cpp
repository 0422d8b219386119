#include "nilmassey/cochain.hpp"

#include <algorithm>
#include <cstdio>

#include "nilmassey/lie.hpp"
#include "nilmassey/linear_solve.hpp"

namespace nilmassey {

const LinearSolver& TwistedGroup::coboundary_solver(int weight) const {
  std::lock_guard<std::mutex> lock(solvers_->mu);
  auto& slot = solvers_->by_weight[weight];
  if (!slot) {
    const uint32_t d = order();
    ModMatrix a(static_cast<std::size_t>(d) * d, d);
    for (uint32_t g = 0; g < d; ++g)
      for (uint32_t h = 0; h < d; ++h) {
        const std::size_t row = static_cast<std::size_t>(g) * d + h;
        a(row, h) = mod_.add(a(row, h), chi_pow(g, weight));
        a(row, group_.mul(g, h)) = mod_.sub(a(row, group_.mul(g, h)), 1);
        a(row, g) = mod_.add(a(row, g), 1);
      }
    slot = std::make_shared<const LinearSolver>(a, mod_);
  }
  return *slot;
}

bool Cochain3::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](uint32_t v) { return v == 0; });
}

Cochain1 zero_cochain1(const TwistedGroup& tg, int weight) { return {weight, std::vector<uint32_t>(tg.order(), 0)}; }

Cochain2 zero_cochain2(const TwistedGroup& tg, int weight) {
  return {weight, std::vector<uint32_t>(static_cast<std::size_t>(tg.order()) * tg.order(), 0)};
}

bool is_zero(const Cochain1& a) {
  return std::all_of(a.values.begin(), a.values.end(), [](uint32_t v) { return v == 0; });
}

bool is_zero(const Cochain2& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](uint32_t v) { return v == 0; });
}

namespace {

void require_same_weight(int a, int b) {
  if (a != b)
    throw InvalidArgument("cochain weights differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

template <class C>
C combine(const TwistedGroup& tg, const C& a, const C& b, bool subtract) {
  require_same_weight(a.weight, b.weight);
  if (a.values.size() != b.values.size()) throw DimensionMismatch("cochain sizes differ");
  C out = a;
  const Modulus& mod = tg.modulus();
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = subtract ? mod.sub(a.values[i], b.values[i]) : mod.add(a.values[i], b.values[i]);
  return out;
}

template <class C>
C scaled(const TwistedGroup& tg, uint32_t c, const C& a) {
  C out = a;
  for (auto& v : out.values) v = tg.modulus().mul(v, c);
  return out;
}

}  // namespace

Cochain1 add(const TwistedGroup& tg, const Cochain1& a, const Cochain1& b) { return combine(tg, a, b, false); }
Cochain1 sub(const TwistedGroup& tg, const Cochain1& a, const Cochain1& b) { return combine(tg, a, b, true); }
Cochain1 scale(const TwistedGroup& tg, uint32_t c, const Cochain1& a) { return scaled(tg, c, a); }
Cochain2 add(const TwistedGroup& tg, const Cochain2& a, const Cochain2& b) { return combine(tg, a, b, false); }
Cochain2 sub(const TwistedGroup& tg, const Cochain2& a, const Cochain2& b) { return combine(tg, a, b, true); }
Cochain2 scale(const TwistedGroup& tg, uint32_t c, const Cochain2& a) { return scaled(tg, c, a); }

Cochain2 d1(const TwistedGroup& tg, const Cochain1& a) {
  const uint32_t d = tg.order();
  if (a.values.size() != d) throw DimensionMismatch("1-cochain has wrong size");
  const Modulus& mod = tg.modulus();
  const FiniteGroup& grp = tg.group();
  Cochain2 out = zero_cochain2(tg, a.weight);
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h) {
      uint32_t v = mod.mul(tg.chi_pow(g, a.weight), a.values[h]);
      v = mod.sub(v, a.values[grp.mul(g, h)]);
      out.values[g * d + h] = mod.add(v, a.values[g]);
    }
  return out;
}

Cochain3 d2(const TwistedGroup& tg, const Cochain2& c) {
  const uint32_t d = tg.order();
  if (c.values.size() != static_cast<std::size_t>(d) * d) throw DimensionMismatch("2-cochain has wrong size");
  const Modulus& mod = tg.modulus();
  const FiniteGroup& grp = tg.group();
  Cochain3 out{c.weight, std::vector<uint32_t>(static_cast<std::size_t>(d) * d * d, 0)};
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h)
      for (uint32_t l = 0; l < d; ++l) {
        uint32_t v = mod.mul(tg.chi_pow(g, c.weight), c.values[h * d + l]);
        v = mod.sub(v, c.values[grp.mul(g, h) * d + l]);
        v = mod.add(v, c.values[g * d + grp.mul(h, l)]);
        v = mod.sub(v, c.values[g * d + h]);
        out.values[(static_cast<std::size_t>(g) * d + h) * d + l] = v;
      }
  return out;
}

bool is_cocycle(const TwistedGroup& tg, const Cochain1& a) { return is_zero(d1(tg, a)); }
bool is_cocycle(const TwistedGroup& tg, const Cochain2& c) { return d2(tg, c).is_zero(); }

Cochain2 cup(const TwistedGroup& tg, const Cochain1& a, const Cochain1& b) {
  const uint32_t d = tg.order();
  if (a.values.size() != d || b.values.size() != d) throw DimensionMismatch("1-cochain has wrong size");
  const Modulus& mod = tg.modulus();
  Cochain2 out = zero_cochain2(tg, a.weight + b.weight);
  for (uint32_t g = 0; g < d; ++g) {
    const uint32_t ag = mod.mul(a.values[g], tg.chi_pow(g, b.weight));
    for (uint32_t h = 0; h < d; ++h) out.values[g * d + h] = mod.mul(ag, b.values[h]);
  }
  return out;
}

std::optional<Cochain1> is_coboundary(const TwistedGroup& tg, const Cochain2& c) {
  if (!is_cocycle(tg, c)) throw NotACocycle("2-cochain is not a cocycle");
  auto x = tg.coboundary_solver(c.weight).solve(c.values);
  if (!x) return std::nullopt;
  return Cochain1{c.weight, std::move(*x)};
}

bool classes_equal(const TwistedGroup& tg, const Cochain2& a, const Cochain2& b) {
  return is_coboundary(tg, sub(tg, a, b)).has_value();
}

std::string class_token(const TwistedGroup& tg, const Cochain2& c) {
  if (!is_cocycle(tg, c)) throw NotACocycle("2-cochain is not a cocycle");
  auto coords = tg.coboundary_solver(c.weight).cokernel_coordinates(c.values);
  if (std::all_of(coords.begin(), coords.end(), [](uint32_t v) { return v == 0; })) return "0";
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (uint32_t v : coords)
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  char buf[20];
  std::snprintf(buf, sizeof buf, "w%d:%016llx", c.weight, static_cast<unsigned long long>(h));
  return buf;
}

Cochain2 coordinate(const LieCochain2& c, const Word& w) {
  Cochain2 out{c.degree, std::vector<uint32_t>(c.values.size())};
  for (std::size_t i = 0; i < c.values.size(); ++i) out.values[i] = c.values[i].coeff(w);
  return out;
}

LieCochain2 d1(const TwistedGroup& tg, const LieCochain1& a) {
  const uint32_t d = tg.order();
  LieCochain2 out{a.degree, {}};
  out.values.reserve(static_cast<std::size_t>(d) * d);
  for (uint32_t g = 0; g < d; ++g)
    for (uint32_t h = 0; h < d; ++h) {
      Series v = tg.chi_pow(g, a.degree) * a.values[h];
      v -= a.values[tg.group().mul(g, h)];
      v += a.values[g];
      out.values.push_back(std::move(v));
    }
  return out;
}

bool is_zero(const LieCochain2& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const Series& s) { return s.is_zero(); });
}

bool is_cocycle(const TwistedGroup& tg, const LieCochain2& c) {
  for (uint64_t b = 0; b < block_size(c.degree); ++b)
    if (!is_cocycle(tg, coordinate(c, Word{c.degree, b}))) return false;
  return true;
}

std::optional<LieCochain1> solve_coboundary(const TwistedGroup& tg, const LieCochain2& c) {
  const uint32_t d = tg.order();
  const int k = c.degree;
  LieCochain1 out{k, std::vector<Series>(d, Series(k, tg.modulus()))};
  const LinearSolver& solver = tg.coboundary_solver(k);
  for (uint64_t b = 0; b < block_size(k); ++b) {
    Word w{k, b};
    Cochain2 coord = coordinate(c, w);
    if (is_zero(coord)) continue;
    if (!is_cocycle(tg, coord)) throw NotACocycle("coordinate " + w.str() + " is not a cocycle");
    auto x = solver.solve(coord.values);
    if (!x) return std::nullopt;
    for (uint32_t g = 0; g < d; ++g) out.values[g].set(w, (*x)[g]);
  }
  for (auto& v : out.values) v = lie_project(v);
  return out;
}

LieCochain2 sub(const LieCochain2& a, const LieCochain2& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size()) throw DimensionMismatch("Lie cochains differ in shape");
  LieCochain2 out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

}  // namespace nilmassey
