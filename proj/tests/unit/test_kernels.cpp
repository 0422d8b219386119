#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "nilmassey/simd/kernels.hpp"

namespace simd = nilmassey::simd;

namespace {

std::vector<uint32_t> random_vec(std::mt19937_64& rng, std::size_t len, uint32_t m) {
  std::uniform_int_distribution<uint32_t> d(0, m - 1);
  std::vector<uint32_t> v(len);
  for (auto& x : v) x = d(rng);
  return v;
}

class KernelEquivalence : public ::testing::TestWithParam<uint32_t> {};

TEST_P(KernelEquivalence, VectorMatchesScalar) {
  if (!simd::supported(simd::KernelKind::avx2)) GTEST_SKIP() << "no AVX2 on this machine";
  const auto& ref = simd::table(simd::KernelKind::scalar);
  const auto& vec = simd::table(simd::KernelKind::avx2);
  const uint32_t m = GetParam();
  std::mt19937_64 rng(m);
  for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
    for (int rep = 0; rep < 20; ++rep) {
      auto x = random_vec(rng, len, m);
      auto y = random_vec(rng, len, m);
      uint32_t c = std::uniform_int_distribution<uint32_t>(0, m - 1)(rng);
      auto y1 = y, y2 = y;
      ref.axpy_mod(y1.data(), x.data(), len, c, m);
      vec.axpy_mod(y2.data(), x.data(), len, c, m);
      ASSERT_EQ(y1, y2) << "axpy len=" << len;
      y1 = y;
      y2 = y;
      ref.add_mod(y1.data(), x.data(), len, m);
      vec.add_mod(y2.data(), x.data(), len, m);
      ASSERT_EQ(y1, y2) << "add len=" << len;
      y1 = y;
      y2 = y;
      ref.scale_mod(y1.data(), len, c, m);
      vec.scale_mod(y2.data(), len, c, m);
      ASSERT_EQ(y1, y2) << "scale len=" << len;
    }
  }
}

// Includes moduli above the vector limit, which must fall back transparently.
INSTANTIATE_TEST_SUITE_P(Moduli, KernelEquivalence,
                         ::testing::Values(2u, 5u, 25u, 49u, 121u, 125u, 169u, 32749u, 32768u,
                                           65521u, 2147483647u));

TEST(KernelEquivalence, ExtremeValues) {
  if (!simd::supported(simd::KernelKind::avx2)) GTEST_SKIP();
  const auto& ref = simd::table(simd::KernelKind::scalar);
  const auto& vec = simd::table(simd::KernelKind::avx2);
  for (uint32_t m : {3u, 32768u, 2147483647u}) {
    std::vector<uint32_t> x(19, m - 1), y1(19, m - 1), y2(19, m - 1);
    ref.axpy_mod(y1.data(), x.data(), x.size(), m - 1, m);
    vec.axpy_mod(y2.data(), x.data(), x.size(), m - 1, m);
    EXPECT_EQ(y1, y2);
  }
}

TEST(KernelDispatch, SelectScalar) {
  ASSERT_TRUE(simd::select(simd::KernelKind::scalar));
  EXPECT_EQ(simd::active().name, "scalar");
  if (simd::supported(simd::KernelKind::avx2)) {
    ASSERT_TRUE(simd::select(simd::KernelKind::avx2));
    EXPECT_EQ(simd::active().name, "avx2");
  }
}

}  // namespace
