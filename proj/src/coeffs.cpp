#include "nilmassey/coeffs.hpp"

#include <numeric>
#include <string>

namespace nilmassey {
namespace {

std::vector<PrimePower> factorize(uint32_t m) {
  std::vector<PrimePower> out;
  uint32_t rest = m;
  for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= rest; ++p) {
    if (rest % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (rest > 1) out.push_back({rest, 1, rest});
  return out;
}

// Extended Euclid: returns g = gcd(a, b) and x with a*x = g (mod b).
int64_t ext_gcd(int64_t a, int64_t b, int64_t& x) {
  int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    int64_t q = a / b;
    int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  x = x0;
  return a;
}

}  // namespace

Modulus::Modulus(uint64_t m) {
  if (m < 2 || m > kMax) throw InvalidArgument("modulus out of range: " + std::to_string(m));
  m_ = static_cast<uint32_t>(m);
  factors_ = std::make_shared<const std::vector<PrimePower>>(factorize(m_));
}

bool Modulus::coprime_to_factorial(int n) const {
  for (const auto& pp : *factors_)
    if (pp.prime <= static_cast<uint32_t>(n < 0 ? 0 : n)) return false;
  return true;
}

void Modulus::require_coprime_to_factorial(int n) const {
  if (!coprime_to_factorial(n))
    throw InvalidArgument("modulus " + std::to_string(m_) + " is not coprime to " +
                          std::to_string(n) + "!");
}

uint32_t Modulus::pow(uint32_t a, uint64_t e) const {
  uint64_t result = 1 % m_, base = a % m_;
  while (e > 0) {
    if (e & 1) result = result * base % m_;
    base = base * base % m_;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

bool Modulus::is_unit(uint32_t a) const { return std::gcd(a % m_, m_) == 1; }

uint32_t Modulus::inv(uint32_t a) const {
  int64_t x = 0;
  int64_t g = ext_gcd(a % m_, m_, x);
  if (g != 1)
    throw NotAUnit(std::to_string(a) + " is not a unit modulo " + std::to_string(m_));
  return reduce(x);
}

Residue residue_arith(const Residue& a, const Residue& b, ArithOp op) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch();
  const Modulus& mod = a.modulus();
  switch (op) {
    case ArithOp::add:
      return Residue(mod.add(a.value(), b.value()), mod);
    case ArithOp::sub:
      return Residue(mod.sub(a.value(), b.value()), mod);
    case ArithOp::mul:
      return Residue(mod.mul(a.value(), b.value()), mod);
  }
  throw InvalidArgument("unknown arithmetic op");
}

Residue residue_inv(const Residue& a) { return Residue(a.modulus().inv(a.value()), a.modulus()); }

Residue operator+(const Residue& a, const Residue& b) { return residue_arith(a, b, ArithOp::add); }
Residue operator-(const Residue& a, const Residue& b) { return residue_arith(a, b, ArithOp::sub); }
Residue operator*(const Residue& a, const Residue& b) { return residue_arith(a, b, ArithOp::mul); }

std::vector<uint32_t> crt_split(uint32_t v, const Modulus& mod) {
  std::vector<uint32_t> parts;
  parts.reserve(mod.factorization().size());
  for (const auto& pp : mod.factorization()) parts.push_back(v % pp.value);
  return parts;
}

uint32_t crt_join(const std::vector<uint32_t>& parts, const Modulus& mod) {
  const auto& fs = mod.factorization();
  if (parts.size() != fs.size()) throw DimensionMismatch("crt_join: wrong number of parts");
  uint64_t result = 0;
  const uint64_t m = mod.value();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    uint64_t q = fs[i].value;
    uint64_t rest = m / q;
    int64_t x = 0;
    ext_gcd(static_cast<int64_t>(rest % q), static_cast<int64_t>(q), x);
    uint64_t inv = static_cast<uint64_t>(((x % static_cast<int64_t>(q)) + q) % q);
    uint64_t term = (parts[i] % q) * inv % q;
    result = (result + term * rest) % m;
  }
  return static_cast<uint32_t>(result);
}

uint32_t valuation(uint32_t v, uint32_t p, uint32_t a) {
  if (v == 0) return a;
  uint32_t k = 0;
  while (v % p == 0 && k < a) {
    v /= p;
    ++k;
  }
  return k;
}

}  // namespace nilmassey
