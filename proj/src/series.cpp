#include "nilmassey/series.hpp"

#include <algorithm>

#include "nilmassey/simd/kernels.hpp"

namespace nilmassey {

Word Word::parse(std::string_view s) {
  if (s.size() > 63) throw InvalidArgument("word too long");
  Word w;
  w.length = static_cast<int>(s.size());
  for (char ch : s) {
    if (ch != 'X' && ch != 'Y') throw InvalidArgument("word letters must be X or Y: '" + std::string(s) + "'");
    w.bits = (w.bits << 1) | (ch == 'Y' ? 1u : 0u);
  }
  return w;
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(length), 'X');
  for (int i = 0; i < length; ++i)
    if (letter(i)) s[static_cast<std::size_t>(i)] = 'Y';
  return s;
}

Series::Series(int n, Modulus mod) : n_(n), mod_(std::move(mod)) {
  if (n < 0 || n > kMaxDegree)
    throw InvalidArgument("series degree must lie in 0.." + std::to_string(kMaxDegree));
  c_.assign(block_offset(n + 1), 0);
}

Series Series::one(int n, const Modulus& mod) {
  Series s(n, mod);
  s.c_[0] = 1;
  return s;
}

Series Series::letter_x(int n, const Modulus& mod) { return monomial(Word::parse("X"), 1, n, mod); }
Series Series::letter_y(int n, const Modulus& mod) { return monomial(Word::parse("Y"), 1, n, mod); }

Series Series::monomial(const Word& w, uint32_t c, int n, const Modulus& mod) {
  Series s(n, mod);
  if (w.length <= n) s.c_[w.index()] = mod.reduce(c);
  return s;
}

uint32_t Series::coeff(const Word& w) const {
  if (w.length > n_) return 0;
  return c_[w.index()];
}

void Series::set(const Word& w, uint32_t v) {
  if (w.length > n_) throw DegreeMismatch("word " + w.str() + " exceeds series degree");
  c_[w.index()] = v % mod_.value();
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

int Series::min_degree() const {
  for (int k = 0; k <= n_; ++k) {
    auto b = block(k);
    if (std::any_of(b.begin(), b.end(), [](uint32_t v) { return v != 0; })) return k;
  }
  return n_ + 1;
}

Series Series::resized(int n) const {
  Series s(n, mod_);
  std::size_t len = std::min(s.c_.size(), c_.size());
  std::copy_n(c_.begin(), len, s.c_.begin());
  return s;
}

Series Series::truncated(int k) const {
  Series s = *this;
  if (k < n_) std::fill(s.c_.begin() + static_cast<std::ptrdiff_t>(block_offset(std::max(k, -1) + 1)), s.c_.end(), 0);
  return s;
}

Series Series::homogeneous(int k) const {
  Series s(n_, mod_);
  if (k >= 0 && k <= n_) std::ranges::copy(block(k), s.block(k).begin());
  return s;
}

Series& Series::operator+=(const Series& o) {
  if (!(mod_ == o.mod_)) throw ModulusMismatch();
  if (n_ != o.n_) throw DegreeMismatch("series degrees differ");
  simd::add_mod(c_, o.c_, mod_.value());
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (!(mod_ == o.mod_)) throw ModulusMismatch();
  if (n_ != o.n_) throw DegreeMismatch("series degrees differ");
  simd::axpy_mod(c_, o.c_, mod_.value() - 1, mod_.value());
  return *this;
}

Series& Series::scale(uint32_t c) {
  simd::scale_mod(c_, c % mod_.value(), mod_.value());
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(Series a) { return a.scale(a.m() - 1); }
Series operator*(uint32_t c, Series a) { return a.scale(c); }

void mul_acc(Series& out, const Series& a, const Series& b) {
  if (!(out.modulus() == a.modulus()) || !(a.modulus() == b.modulus())) throw ModulusMismatch();
  const int n = out.degree();
  const uint32_t m = out.m();
  const int amax = std::min(a.degree(), n);
  for (int la = 0; la <= amax; ++la) {
    auto ablk = a.block(la);
    const int bmax = std::min(b.degree(), n - la);
    if (bmax < 0) break;
    for (std::size_t u = 0; u < ablk.size(); ++u) {
      const uint32_t cu = ablk[u];
      if (cu == 0) continue;
      for (int lb = 0; lb <= bmax; ++lb) {
        auto bblk = b.block(lb);
        auto dst = out.block(la + lb).subspan(u << lb, bblk.size());
        simd::axpy_mod(dst, bblk, cu, m);
      }
    }
  }
}

Series operator*(const Series& a, const Series& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch();
  if (a.degree() != b.degree()) throw DegreeMismatch("series degrees differ");
  Series out(a.degree(), a.modulus());
  mul_acc(out, a, b);
  return out;
}

Series bracket(const Series& a, const Series& b) { return a * b - b * a; }

}  // namespace nilmassey
