#include <gtest/gtest.h>

#include <random>

#include "nilmassey/coeffs.hpp"
#include "nilmassey/linear_solve.hpp"

using namespace nilmassey;

namespace {

uint32_t egcd_inverse(int64_t a, int64_t m) {
  int64_t r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return static_cast<uint32_t>(((t0 % m) + m) % m);
}

TEST(Residue, Arithmetic) {
  Modulus m25(25);
  EXPECT_EQ((Residue(7, m25) * Residue(9, m25)).value(), 63u % 25u);
  EXPECT_EQ((Residue(0, m25) + Residue(17, m25)).value(), 17u);
  EXPECT_EQ((Residue(11, m25) - Residue(11, m25)).value(), 0u);
  EXPECT_EQ(Residue(-3, m25).value(), 22u);
  EXPECT_THROW(Residue(1, m25) + Residue(1, Modulus(49)), ModulusMismatch);
}

TEST(Residue, Inverse) {
  Modulus m25(25);
  EXPECT_EQ(residue_inv(Residue(2, m25)).value(), egcd_inverse(2, 25));
  EXPECT_EQ(residue_inv(Residue(1, m25)).value(), 1u);
  EXPECT_THROW(residue_inv(Residue(5, m25)), NotAUnit);
  for (uint32_t m : {25u, 49u, 121u, 125u, 1001u}) {
    Modulus mod(m);
    for (uint32_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      EXPECT_EQ(mod.mul(a, mod.inv(a)), 1u);
      EXPECT_EQ(mod.inv(a), egcd_inverse(a, m));
    }
  }
}

TEST(Modulus, FactorizationAndCoprimality) {
  Modulus m(2 * 2 * 3 * 49);
  uint64_t prod = 1;
  for (const auto& pp : m.factorization()) prod *= pp.value;
  EXPECT_EQ(prod, m.value());
  EXPECT_TRUE(Modulus(25).coprime_to_factorial(4));
  EXPECT_FALSE(Modulus(25).coprime_to_factorial(5));
  EXPECT_FALSE(Modulus(24).coprime_to_factorial(3));
  EXPECT_THROW(Modulus(1), InvalidArgument);
}

TEST(Crt, RoundTrip) {
  for (uint32_t m : {25u, 35u, 1001u, 5 * 5 * 7 * 11u}) {
    Modulus mod(m);
    for (uint32_t v = 0; v < m; ++v) EXPECT_EQ(crt_join(crt_split(v, mod), mod), v);
  }
}

// Every system with m <= 25 and at most 2 unknowns, checked against search.
TEST(SolveLinear, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(11);
  for (uint32_t m : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 6u, 10u, 12u, 15u}) {
    Modulus mod(m);
    for (int rows = 1; rows <= 3; ++rows)
      for (int cols = 1; cols <= 2; ++cols)
        for (int trial = 0; trial < 60; ++trial) {
          ModMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
          std::vector<uint32_t> b(static_cast<std::size_t>(rows));
          std::uniform_int_distribution<uint32_t> d(0, m - 1);
          // Bias toward non-units to exercise valuations.
          for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) a(r, c) = trial % 3 == 0 ? d(rng) : (d(rng) * 5) % m;
            b[static_cast<std::size_t>(r)] = trial % 2 == 0 ? d(rng) : (d(rng) * 5) % m;
          }
          bool exists = false;
          for (uint32_t x0 = 0; x0 < m && !exists; ++x0)
            for (uint32_t x1 = 0; x1 < (cols == 2 ? m : 1u) && !exists; ++x1) {
              bool ok = true;
              for (int r = 0; r < rows && ok; ++r) {
                uint64_t s = static_cast<uint64_t>(a(r, 0)) * x0 + (cols == 2 ? static_cast<uint64_t>(a(r, 1)) * x1 : 0);
                ok = s % m == b[static_cast<std::size_t>(r)];
              }
              exists = ok;
            }
          auto x = solve_mod(a, b, mod);
          ASSERT_EQ(exists, x.has_value()) << "m=" << m;
          if (x) {
            for (int r = 0; r < rows; ++r) {
              uint64_t s = 0;
              for (int c = 0; c < cols; ++c) s += static_cast<uint64_t>(a(r, c)) * (*x)[static_cast<std::size_t>(c)];
              EXPECT_EQ(s % m, b[static_cast<std::size_t>(r)]);
            }
          }
          auto coords = LinearSolver(a, mod).cokernel_coordinates(b);
          bool zero = std::all_of(coords.begin(), coords.end(), [](uint32_t v) { return v == 0; });
          EXPECT_EQ(zero, exists);
        }
  }
}

TEST(SolveLinear, SmallExamples) {
  Modulus m25(25);
  ModMatrix a(1, 1);
  a(0, 0) = 5;
  auto x = solve_linear(a, {10}, m25);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] * 5 % 25, 10u);
  EXPECT_FALSE(solve_linear(a, {1}, m25));
  auto id = ModMatrix::identity(3);
  auto y = solve_linear(id, {3, 4, 24}, m25);
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, (std::vector<uint32_t>{3, 4, 24}));
  EXPECT_THROW(solve_linear(id, {1, 2}, m25), DimensionMismatch);
  EXPECT_THROW(solve_linear(id, {1, 2, 3}, Modulus(35)), InvalidArgument);
}

}  // namespace
