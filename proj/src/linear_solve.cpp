#include "nilmassey/linear_solve.hpp"

#include <span>
#include <utility>

#include "nilmassey/simd/kernels.hpp"

namespace nilmassey {

ModMatrix ModMatrix::identity(std::size_t n) {
  ModMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LinearSolver::LinearSolver(const ModMatrix& a, Modulus mod)
    : rows_(a.rows()), cols_(a.cols()), mod_(std::move(mod)) {
  for (const auto& pp : mod_.factorization()) parts_.push_back(eliminate(a, pp));
}

LinearSolver::Echelon LinearSolver::eliminate(const ModMatrix& a, const PrimePower& pp) {
  Echelon e;
  e.pp = pp;
  const uint32_t q = pp.value;
  const std::size_t rows = a.rows(), cols = a.cols();
  e.w = ModMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) e.w(r, c) = a(r, c) % q;
  e.col_perm.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) e.col_perm[c] = static_cast<uint32_t>(c);

  ModMatrix& w = e.w;
  const Modulus qmod(q);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    uint32_t best = pp.exponent;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < rows && best > 0; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        uint32_t v = w(i, j);
        if (v == 0) continue;
        uint32_t val = valuation(v, pp.prime, pp.exponent);
        if (val < best) {
          best = val;
          bi = i;
          bj = j;
          if (val == 0) break;
        }
      }
    if (best == pp.exponent) break;  // remaining block is zero
    if (bi != k) {
      std::swap_ranges(w.row(k), w.row(k) + cols, w.row(bi));
      e.ops.push_back({static_cast<uint32_t>(k), static_cast<uint32_t>(k),
                       static_cast<uint32_t>(bi), true});
    }
    if (bj != k) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(w(r, k), w(r, bj));
      std::swap(e.col_perm[k], e.col_perm[bj]);
    }
    uint32_t scale = 1;
    for (uint32_t t = 0; t < best; ++t) scale *= pp.prime;
    uint32_t unit_inv = qmod.inv(w(k, k) / scale);
    e.pivot_val.push_back(best);
    e.pivot_unit_inv.push_back(unit_inv);
    for (std::size_t i = k + 1; i < rows; ++i) {
      uint32_t v = w(i, k);
      if (v == 0) continue;
      uint32_t f = qmod.mul(v / scale, unit_inv);
      simd::axpy_mod(std::span<uint32_t>(w.row(i) + k, cols - k),
                     std::span<const uint32_t>(w.row(k) + k, cols - k), qmod.neg(f), q);
      e.ops.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(k), f, false});
    }
    e.rank = k + 1;
  }
  return e;
}

std::vector<uint32_t> LinearSolver::transform(const Echelon& e, const std::vector<uint32_t>& b) {
  const uint32_t q = e.pp.value;
  const Modulus qmod(q);
  std::vector<uint32_t> y(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) y[i] = b[i] % q;
  for (const auto& op : e.ops) {
    if (op.swap)
      std::swap(y[op.target], y[op.factor]);
    else
      y[op.target] = qmod.sub(y[op.target], qmod.mul(op.factor, y[op.source]));
  }
  return y;
}

std::optional<std::vector<uint32_t>> LinearSolver::solve_one(const Echelon& e,
                                                             const std::vector<uint32_t>& b) {
  const uint32_t q = e.pp.value;
  const Modulus qmod(q);
  std::vector<uint32_t> y = transform(e, b);
  for (std::size_t i = e.rank; i < y.size(); ++i)
    if (y[i] != 0) return std::nullopt;
  const std::size_t cols = e.w.cols();
  std::vector<uint32_t> z(cols, 0);
  for (std::size_t kk = e.rank; kk-- > 0;) {
    uint32_t s = y[kk];
    for (std::size_t j = kk + 1; j < e.rank; ++j) s = qmod.sub(s, qmod.mul(e.w(kk, j), z[j]));
    if (valuation(s, e.pp.prime, e.pp.exponent) < e.pivot_val[kk]) return std::nullopt;
    uint32_t scale = 1;
    for (uint32_t t = 0; t < e.pivot_val[kk]; ++t) scale *= e.pp.prime;
    z[kk] = qmod.mul(s / scale, e.pivot_unit_inv[kk]);
  }
  std::vector<uint32_t> x(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) x[e.col_perm[c]] = z[c];
  return x;
}

std::optional<std::vector<uint32_t>> LinearSolver::solve(const std::vector<uint32_t>& b) const {
  if (b.size() != rows_) throw DimensionMismatch("right-hand side has wrong length");
  std::vector<std::vector<uint32_t>> per_part;
  for (const auto& e : parts_) {
    auto x = solve_one(e, b);
    if (!x) return std::nullopt;
    per_part.push_back(std::move(*x));
  }
  std::vector<uint32_t> x(cols_);
  std::vector<uint32_t> tmp(parts_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t k = 0; k < parts_.size(); ++k) tmp[k] = per_part[k][c];
    x[c] = crt_join(tmp, mod_);
  }
  return x;
}

std::vector<uint32_t> LinearSolver::cokernel_coordinates(const std::vector<uint32_t>& b) const {
  if (b.size() != rows_) throw DimensionMismatch("right-hand side has wrong length");
  std::vector<uint32_t> out;
  for (const auto& e : parts_) {
    std::vector<uint32_t> y = transform(e, b);
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (k < e.rank) {
        uint32_t scale = 1;
        for (uint32_t t = 0; t < e.pivot_val[k]; ++t) scale *= e.pp.prime;
        out.push_back(y[k] % scale);
      } else {
        out.push_back(y[k]);
      }
    }
  }
  return out;
}

std::vector<std::size_t> LinearSolver::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& e : parts_) r.push_back(e.rank);
  return r;
}

std::optional<std::vector<uint32_t>> solve_linear(const ModMatrix& a, const std::vector<uint32_t>& b,
                                                  const Modulus& mod) {
  if (!mod.is_prime_power())
    throw InvalidArgument("solve_linear needs a prime-power modulus; split with CRT first");
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side has wrong length");
  return LinearSolver(a, mod).solve(b);
}

std::optional<std::vector<uint32_t>> solve_mod(const ModMatrix& a, const std::vector<uint32_t>& b,
                                               const Modulus& mod) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side has wrong length");
  return LinearSolver(a, mod).solve(b);
}

}  // namespace nilmassey
