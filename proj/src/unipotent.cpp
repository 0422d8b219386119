#include "nilmassey/unipotent.hpp"

#include <span>

#include "nilmassey/simd/kernels.hpp"
#include "nilmassey/substitution.hpp"

namespace nilmassey {

UniMatrix::UniMatrix(int n, Modulus mod) : n_(n), mod_(std::move(mod)) {
  if (n < 1 || n > 64) throw InvalidArgument("matrix size out of range");
  a_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n + 1; ++i) a_[idx(i, i)] = 1;
}

UniMatrix UniMatrix::from_entries(int n, const Modulus& mod, std::vector<uint32_t> row_major) {
  UniMatrix m(n, mod);
  if (row_major.size() != m.a_.size()) throw DimensionMismatch("wrong number of matrix entries");
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) {
      uint32_t v = row_major[m.idx(i, j)];
      if (v >= mod.value()) throw InvalidArgument("matrix entry not reduced");
      if ((i == j && v != 1) || (i > j && v != 0))
        throw InvalidArgument("matrix is not upper unitriangular at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
  m.a_ = std::move(row_major);
  return m;
}

UniMatrix UniMatrix::elementary(int n, const Modulus& mod, int i, int j, uint32_t c) {
  UniMatrix m(n, mod);
  m.set_entry(i, j, c);
  return m;
}

void UniMatrix::set_entry(int i, int j, uint32_t v) {
  if (i < 1 || j > n_ + 1 || i >= j) throw InvalidArgument("only strictly upper entries can be set");
  a_[idx(i, j)] = v % mod_.value();
}

bool UniMatrix::is_identity() const { return *this == UniMatrix(n_, mod_); }

UniMatrix operator*(const UniMatrix& a, const UniMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ");
  if (!(a.mod_ == b.mod_)) throw ModulusMismatch();
  const int sz = a.n_ + 1;
  const uint32_t m = a.mod_.value();
  UniMatrix c = b;  // row i starts as row i of b (a_ii = 1)
  for (int i = 1; i <= sz; ++i) {
    std::span<uint32_t> dst(c.a_.data() + c.idx(i, 1), static_cast<std::size_t>(sz));
    for (int k = i + 1; k <= sz; ++k) {
      uint32_t v = a.a_[a.idx(i, k)];
      if (v == 0) continue;
      simd::axpy_mod(dst, std::span<const uint32_t>(b.a_.data() + b.idx(k, 1), static_cast<std::size_t>(sz)), v, m);
    }
  }
  return c;
}

namespace {

// Strictly upper part U = M - 1 as a plain square array.
using Square = std::vector<uint32_t>;

Square square_mul(const Square& x, const Square& y, int sz, uint32_t m) {
  Square z(x.size(), 0);
  for (int i = 0; i < sz; ++i)
    for (int k = 0; k < sz; ++k) {
      uint32_t v = x[static_cast<std::size_t>(i * sz + k)];
      if (v == 0) continue;
      simd::axpy_mod(std::span<uint32_t>(z.data() + i * sz, static_cast<std::size_t>(sz)),
                     std::span<const uint32_t>(y.data() + k * sz, static_cast<std::size_t>(sz)), v, m);
    }
  return z;
}

Square strict_part(const UniMatrix& a) {
  Square u = a.entries();
  for (int i = 0; i < a.size(); ++i) u[static_cast<std::size_t>(i * a.size() + i)] = 0;
  return u;
}

UniMatrix from_strict(const Square& u, int n, const Modulus& mod) {
  Square e = u;
  for (int i = 0; i <= n; ++i) e[static_cast<std::size_t>(i * (n + 1) + i)] = 1;
  return UniMatrix::from_entries(n, mod, std::move(e));
}

}  // namespace

UniMatrix mat_inv(const UniMatrix& a) {
  // (1 + U)^-1 = sum (-U)^k, U^(n+1) = 0.
  const int sz = a.size();
  const Modulus& mod = a.modulus();
  Square u = strict_part(a);
  for (auto& v : u) v = mod.neg(v);
  Square acc = u, term = u;
  for (int k = 2; k <= a.n(); ++k) {
    term = square_mul(term, u, sz, mod.value());
    simd::add_mod(acc, term, mod.value());
  }
  return from_strict(acc, a.n(), mod);
}

UniMatrix mat_power(const UniMatrix& a, uint32_t c) {
  const int sz = a.size();
  const int n = a.n();
  const Modulus& mod = a.modulus();
  mod.require_coprime_to_factorial(n);
  Square u = strict_part(a);
  Square lg(u.size(), 0), term = u;
  for (int k = 1; k <= n; ++k) {
    uint32_t coef = mod.inv_int(static_cast<uint64_t>(k));
    if (k % 2 == 0) coef = mod.neg(coef);
    simd::axpy_mod(lg, term, coef, mod.value());
    if (k < n) term = square_mul(term, u, sz, mod.value());
  }
  simd::scale_mod(lg, mod.reduce(c), mod.value());
  Square ex(u.size(), 0);
  term = lg;
  for (int k = 1; k <= n; ++k) {
    simd::add_mod(ex, term, mod.value());
    if (k < n) {
      term = square_mul(term, lg, sz, mod.value());
      simd::scale_mod(term, mod.inv_int(static_cast<uint64_t>(k + 1)), mod.value());
    }
  }
  return from_strict(ex, n, mod);
}

UniMatrix mat_commutator(const UniMatrix& a, const UniMatrix& b) {
  return a * b * mat_inv(a) * mat_inv(b);
}

UniMatrix chi_act(uint32_t c, const UniMatrix& a) {
  const Modulus& mod = a.modulus();
  if (!mod.is_unit(c % mod.value())) throw NotAUnit("character value is not a unit");
  UniMatrix out = a;
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j)
      if (a.entry(i, j) != 0) out.set_entry(i, j, mod.mul(a.entry(i, j), mod.pow(c, static_cast<uint64_t>(j - i))));
  return out;
}

UniMatrix build_A(int n, const Modulus& mod) {
  if (n < 3) throw InvalidArgument("n must be at least 3");
  mod.require_coprime_to_factorial(n);
  UniMatrix a(n, mod);
  uint32_t fact_inv = 1;
  for (int d = 1; d <= n - 2; ++d) {
    fact_inv = mod.mul(fact_inv, mod.inv_int(static_cast<uint64_t>(d)));
    for (int i = 2; i + d <= n; ++i) a.set_entry(i, i + d, fact_inv);
  }
  return a;
}

UniMatrix build_B(int n, const Modulus& mod) {
  if (n < 3) throw InvalidArgument("n must be at least 3");
  UniMatrix b(n, mod);
  b.set_entry(1, 2, 1);
  b.set_entry(n, n + 1, 1);
  return b;
}

UniCoset::UniCoset(UniMatrix rep) : rep_(std::move(rep)) {
  rep_.set_entry(1, rep_.n() + 1, 0);
}

UniCoset chi_act(uint32_t c, const UniCoset& m) { return UniCoset(chi_act(c, m.rep())); }

bool in_V(const UniMatrix& c) {
  const int n = c.n();
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (c.entry(i, j) != 0) return false;
  return true;
}

bool in_V(const UniCoset& c) { return in_V(c.rep()); }

namespace {

// Horner evaluation of a series on matrices: E(u) = c_u + E(Xu) Nx + E(Yu) Ny.
struct MatrixEvaluator {
  const Series& t;
  const Square& nx;
  const Square& ny;
  const std::vector<bool>& nz;
  int depth;
  int sz;
  uint32_t m;

  Square eval(int len, uint64_t bits) const {
    Square out(static_cast<std::size_t>(sz * sz), 0);
    const uint32_t c = t.data()[block_offset(len) + bits];
    if (c != 0)
      for (int i = 0; i < sz; ++i) out[static_cast<std::size_t>(i * sz + i)] = c;
    if (len == depth) return out;
    const uint64_t xb = bits, yb = bits | (uint64_t{1} << len);
    if (nz[block_offset(len + 1) + xb]) simd::add_mod(out, square_mul(eval(len + 1, xb), nx, sz, m), m);
    if (nz[block_offset(len + 1) + yb]) simd::add_mod(out, square_mul(eval(len + 1, yb), ny, sz, m), m);
    return out;
  }
};

UniMatrix evaluate(const GroupElt& g, int n) {
  const Modulus& mod = g.modulus();
  const Series t = g.degree() > n ? g.series().resized(n) : g.series();
  Square nx = strict_part(build_A(n, mod));
  Square ny = strict_part(build_B(n, mod));
  auto nz = nonzero_suffixes(t);
  MatrixEvaluator ev{t, nx, ny, nz, t.degree(), n + 1, mod.value()};
  return UniMatrix::from_entries(n, mod, ev.eval(0, 0));
}

}  // namespace

UniMatrix phi_prime(const GroupElt& g, int n) {
  if (g.degree() < n) throw DegreeMismatch("phi' needs an element of degree at least n");
  return evaluate(g, n);
}

UniMatrix phi_prime(const GroupElt& g) { return phi_prime(g, g.degree()); }

UniCoset phi(const GroupElt& g, int n) {
  if (g.degree() < n - 1) throw DegreeMismatch("phi needs an element of degree at least n - 1");
  return UniCoset(evaluate(g, n));
}

uint32_t bracket_entry(const UniMatrix& c) {
  if (!in_V(c)) throw NotInV("matrix does not lie in V");
  const int n = c.n();
  const Modulus& mod = c.modulus();
  const uint32_t v = mod.sub(c.entry(2, n + 1), c.entry(1, n));
  UniMatrix comm = mat_commutator(build_B(n, mod), c);
  if (!(comm == UniMatrix::elementary(n, mod, 1, n + 1, v)))
    throw InternalCheckFailed("[B, C] is not central with the expected corner entry");
  return v;
}

}  // namespace nilmassey
