#include <gtest/gtest.h>

#include "nilmassey/random.hpp"
#include "nilmassey/unipotent.hpp"

using namespace nilmassey;

namespace {

const Modulus m25(25), m49(49), m121(121);

UniMatrix random_unimatrix(Rng& rng, int n, const Modulus& mod) {
  UniMatrix u(n, mod);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) u.set_entry(i, j, random_residue(rng, mod));
  return u;
}

UniMatrix naive_product(const UniMatrix& a, const UniMatrix& b) {
  const int sz = a.size();
  std::vector<uint32_t> e(static_cast<std::size_t>(sz * sz));
  for (int i = 1; i <= sz; ++i)
    for (int j = 1; j <= sz; ++j) {
      uint64_t s = 0;
      for (int k = 1; k <= sz; ++k) s += static_cast<uint64_t>(a.entry(i, k)) * b.entry(k, j);
      e[static_cast<std::size_t>((i - 1) * sz + j - 1)] = static_cast<uint32_t>(s % a.modulus().value());
    }
  return UniMatrix::from_entries(a.n(), a.modulus(), e);
}

TEST(UniMatrix, ProductAndInverse) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    auto a = random_unimatrix(rng, n, m49), b = random_unimatrix(rng, n, m49);
    EXPECT_EQ(a * b, naive_product(a, b));
    EXPECT_TRUE((a * mat_inv(a)).is_identity());
  }
  EXPECT_THROW(UniMatrix::from_entries(3, m25, std::vector<uint32_t>(16, 0)), InvalidArgument);
}

TEST(UniMatrix, Powers) {
  const int n = 4;
  auto b = build_B(n, m25);
  auto b2 = UniMatrix(n, m25);
  b2.set_entry(1, 2, 2);
  b2.set_entry(n, n + 1, 2);
  EXPECT_EQ(mat_power(b, 2), b2);
  EXPECT_EQ(b * b, b2);
  auto a = build_A(n, m25);
  EXPECT_EQ((a * a).entry(2, 4), 2u);
  EXPECT_EQ(mat_power(a, 2).entry(2, 4), 2u);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_unimatrix(rng, 5, m49);
    UniMatrix acc(5, m49);
    for (uint32_t c = 0; c <= 8; ++c) {
      EXPECT_EQ(mat_power(u, c), acc);
      acc = acc * u;
    }
  }
}

TEST(UniMatrix, PowerEntryLaw) {
  for (int n = 3; n <= 6; ++n) {
    for (const Modulus& mod : {m49, m121}) {
      auto a = build_A(n, mod), b = build_B(n, mod);
      for (uint32_t N = 0; N <= 20; ++N) {
        auto an = mat_power(a, N), bn = mat_power(b, N);
        for (int i = 1; i <= n + 1; ++i)
          for (int j = 1; i + j <= n + 1; ++j) {
            uint32_t nj = mod.pow(N, static_cast<uint64_t>(j));
            EXPECT_EQ(an.entry(i, i + j), mod.mul(nj, a.entry(i, i + j)));
            EXPECT_EQ(bn.entry(i, i + j), mod.mul(nj, b.entry(i, i + j)));
          }
      }
    }
  }
}

TEST(UniMatrix, ChiAction) {
  Rng rng(5);
  const int n = 5;
  auto a = build_A(n, m49);
  auto u = random_unimatrix(rng, n, m49);
  EXPECT_EQ(chi_act(1, u), u);
  for (uint32_t c : {2u, 3u, 48u, 30u}) EXPECT_EQ(chi_act(c, a), mat_power(a, c));
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_unimatrix(rng, n, m49), q = random_unimatrix(rng, n, m49);
    uint32_t c = random_unit(rng, m49);
    EXPECT_EQ(chi_act(c, p * q), chi_act(c, p) * chi_act(c, q));
  }
  EXPECT_THROW(chi_act(7, u), NotAUnit);
}

TEST(UniMatrix, FixtureMatrices) {
  const uint32_t half = m25.inv(2);
  auto a = build_A(4, m25);
  std::vector<uint32_t> expect_a{1, 0, 0, 0, 0,  //
                                 0, 1, 1, half, 0,  //
                                 0, 0, 1, 1, 0,  //
                                 0, 0, 0, 1, 0,  //
                                 0, 0, 0, 0, 1};
  EXPECT_EQ(a.entries(), expect_a);
  std::vector<uint32_t> expect_b{1, 1, 0, 0, 0,  //
                                 0, 1, 0, 0, 0,  //
                                 0, 0, 1, 0, 0,  //
                                 0, 0, 0, 1, 1,  //
                                 0, 0, 0, 0, 1};
  EXPECT_EQ(build_B(4, m25).entries(), expect_b);
  EXPECT_EQ(build_A(3, m25), UniMatrix::elementary(3, m25, 2, 3, 1));
  EXPECT_EQ(build_B(3, m25), UniMatrix::elementary(3, m25, 1, 2, 1) * UniMatrix::elementary(3, m25, 3, 4, 1));
  EXPECT_THROW(build_A(2, m25), InvalidArgument);
  EXPECT_THROW(build_A(5, m25), InvalidArgument);
}

TEST(UniMatrix, SubgroupV) {
  const int n = 4;
  EXPECT_TRUE(in_V(UniCoset(build_B(n, m25))));
  EXPECT_FALSE(in_V(UniCoset(build_A(n, m25))));
  auto v = UniMatrix::elementary(n, m25, 1, 3, 24) * UniMatrix::elementary(n, m25, 2, n + 1, 1);
  EXPECT_TRUE(in_V(UniCoset(v)));
}

TEST(UniMatrix, CosetNormalForm) {
  Rng rng(7);
  auto u = random_unimatrix(rng, 4, m25);
  auto z = UniMatrix::elementary(4, m25, 1, 5, 13);
  EXPECT_EQ(UniCoset(u), UniCoset(u * z));
  EXPECT_EQ(UniCoset(u).entry(1, 5), 0u);
}

TEST(Phi, GeneratorsAndCommutator) {
  const int n = 3;
  auto gx = GroupElt::gen_x(n, m25), gy = GroupElt::gen_y(n, m25);
  EXPECT_EQ(phi_prime(gx), build_A(n, m25));
  EXPECT_EQ(phi_prime(gy), build_B(n, m25));
  auto a = build_A(n, m25), b = build_B(n, m25);
  auto ab = naive_product(naive_product(a, b), naive_product(mat_inv(a), mat_inv(b)));
  auto expect = UniMatrix(n, m25);
  expect.set_entry(1, 3, 24);
  expect.set_entry(2, 4, 1);
  expect.set_entry(1, 4, 1);
  EXPECT_EQ(ab, expect);
  EXPECT_EQ(phi_prime(commutator(gx, gy)), expect);
}

TEST(Phi, Multiplicative) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    auto a = random_group_elt(rng, n, m49), b = random_group_elt(rng, n, m49);
    EXPECT_EQ(phi_prime(a * b), phi_prime(a) * phi_prime(b));
  }
}

TEST(Phi, FactorsThroughLevelN) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 3;
    auto g = random_group_elt(rng, n, m49);
    // Changing only the degree-n part leaves phi unchanged.
    auto h = g * random_lcs_elt(rng, n, m49, n);
    EXPECT_EQ(phi(g, n), phi(h, n));
    EXPECT_EQ(phi(truncate_to_level(g, n), n), phi(g, n));
  }
}

TEST(Phi, CommutatorsLandInV) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    EXPECT_TRUE(in_V(phi(random_lcs_elt(rng, n, m49, 2), n)));
  }
}

TEST(Phi, CornerEntryIsMagnusCoefficient) {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    auto g = random_lcs_elt(rng, n, m49, n);
    std::string w = "Y" + std::string(static_cast<std::size_t>(n - 2), 'X') + "Y";
    EXPECT_EQ(phi_prime(g).entry(1, n + 1), magnus_coefficient(Word::parse(w), g));
  }
}

TEST(Phi, EquivarianceOnGenerators) {
  const int n = 4;
  for (uint32_t c : {2u, 7u, 24u}) {
    EXPECT_EQ(chi_act(c, phi_prime(GroupElt::gen_x(n, m25))), phi_prime(power(GroupElt::gen_x(n, m25), c)));
    EXPECT_EQ(chi_act(c, phi_prime(GroupElt::gen_y(n, m25))), phi_prime(power(GroupElt::gen_y(n, m25), c)));
  }
}

TEST(BracketEntry, Examples) {
  const int n = 3;
  auto c = UniMatrix::elementary(n, m25, 2, n + 1, 1);
  EXPECT_EQ(bracket_entry(c), 1u);
  EXPECT_EQ(mat_commutator(build_B(n, m25), c), UniMatrix::elementary(n, m25, 1, n + 1, 1));
  EXPECT_EQ(bracket_entry(UniMatrix(n, m25)), 0u);
  auto gx = GroupElt::gen_x(n, m25), gy = GroupElt::gen_y(n, m25);
  EXPECT_EQ(bracket_entry(phi_prime(commutator(gx, gy))), 2u);
  EXPECT_THROW(bracket_entry(build_A(4, Modulus(49))), NotInV);
}

TEST(BracketEntry, RandomElementsOfV) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    UniMatrix v(n, m121);
    for (int j = 2; j <= n + 1; ++j) v.set_entry(1, j, random_residue(rng, m121));
    for (int i = 2; i <= n; ++i) v.set_entry(i, n + 1, random_residue(rng, m121));
    uint32_t e = bracket_entry(v);
    EXPECT_EQ(e, m121.sub(v.entry(2, n + 1), v.entry(1, n)));
  }
}

}  // namespace
