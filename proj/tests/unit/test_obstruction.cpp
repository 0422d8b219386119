#include <gtest/gtest.h>

#include "nilmassey/obstruction.hpp"
#include "nilmassey/random.hpp"

using namespace nilmassey;

namespace {

const Modulus m25(25), m49(49);

GroupElt xy(int n, const Modulus& mod) { return commutator(GroupElt::gen_x(n, mod), GroupElt::gen_y(n, mod)); }

// Lifts from the cocycle's level up to `level`, or returns the highest level reached.
NACocycle lift_to(const ActionSpec& spec, NACocycle p, int level) {
  while (p.level < level) {
    auto q = lift_step(spec, p);
    if (!q) break;
    p = *q;
  }
  return p;
}

Cochain1 hom(uint32_t p, uint32_t u, uint32_t v, int weight) {
  Cochain1 c{weight, {}};
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b) c.values.push_back((u * a + v * b) % p);
  return c;
}

TwistedGroup trivial_square(uint32_t p) {
  return TwistedGroup(FiniteGroup::product(FiniteGroup::cyclic(p), FiniteGroup::cyclic(p)), Modulus(p),
                      std::vector<uint32_t>(p * p, 1));
}

}  // namespace

TEST(Obstruction, XPowerHasZeroDelta) {
  auto spec = make_cyclic_action(2, 24, xy(4, m25), 4, m25);
  for (int k = 2; k <= 4; ++k) {
    NACocycle p = x_power_cocycle(spec, Cochain1{1, {0, 7}}, k);
    EXPECT_TRUE(is_zero(delta_k(spec, p))) << "k=" << k;
    auto q = lift_step(spec, p);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(truncate(*q, k), p);
  }
}

TEST(Obstruction, PrincipalDeltaIsCoboundary) {
  Rng rng(41);
  for (int n : {3, 4, 5}) {
    auto spec = make_cyclic_action(3, 18, xy(n, m49), n, m49);
    for (int trial = 0; trial < 3; ++trial) {
      NACocycle p = truncate(principal_cocycle(spec, random_group_elt(rng, n, m49)), n);
      LieCochain2 delta = delta_k(spec, p);
      EXPECT_EQ(delta.degree, n);
      EXPECT_TRUE(is_cocycle(spec.twisted(), delta));
      EXPECT_TRUE(solve_coboundary(spec.twisted(), delta).has_value());
    }
  }
}

TEST(Obstruction, LiftStepContract) {
  Rng rng(42);
  const int n = 4;
  auto spec = make_cyclic_action(5, 6, xy(n, m25) * commutator(xy(n, m25), GroupElt::gen_x(n, m25)), n, m25);
  for (int trial = 0; trial < 3; ++trial) {
    NACocycle base = na_twist(spec, x_power_cocycle(spec, Cochain1{1, {0, 5, 10, 15, 20}}, 2),
                              random_group_elt(rng, n, m25));
    NACocycle p = base;
    for (int k = 2; k <= n; ++k) {
      EXPECT_TRUE(is_cocycle(spec.twisted(), delta_k(spec, p)));
      auto q = lift_step(spec, p);
      if (!q) break;
      EXPECT_EQ(q->level, k + 1);
      EXPECT_EQ(truncate(*q, k), p);
      EXPECT_TRUE(validate_na_cocycle(spec, *q).ok());
      p = *q;
    }
  }
}

TEST(Obstruction, MuPushforward) {
  const int n = 3;
  // [[y,x],y] has degree-3 part [[Y,X],Y] = 2YXY - XYY - YYX.
  GroupElt g = commutator(commutator(GroupElt::gen_y(n, m25), GroupElt::gen_x(n, m25)), GroupElt::gen_y(n, m25));
  Series gamma = g.series().homogeneous(3);
  EXPECT_EQ(mu_word_path(gamma), 2u);
  EXPECT_EQ(mu_matrix_path(gamma), 2u);

  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 24});
  LieCochain2 c{n, std::vector<Series>(4, Series(n, m25))};
  EXPECT_TRUE(is_zero(mu_pushforward(c)));
  c.values[3] = gamma;
  Cochain2 mu = mu_pushforward(c);
  EXPECT_EQ(mu.weight, n);
  EXPECT_EQ(mu.values, (std::vector<uint32_t>{0, 0, 0, 2}));

  // Y X Y alone is not a Lie element.
  c.values[3] = Series(n, m25);
  c.values[3].set(Word::parse("YXY"), 1);
  EXPECT_THROW(mu_pushforward(c), NotLie);
}

TEST(Obstruction, MuPathsAgree) {
  Rng rng(43);
  for (int n : {3, 4, 5, 6})
    for (const Modulus& mod : {m25, m49}) {
      if (!mod.coprime_to_factorial(n)) continue;
      for (int trial = 0; trial < 40; ++trial) {
        Series gamma = random_lie_homogeneous(rng, n, mod, n);
        EXPECT_EQ(mu_matrix_path(gamma), mu_word_path(gamma));
      }
    }
}

TEST(Obstruction, SectionIndependence) {
  Rng rng(44);
  for (int n : {3, 4}) {
    auto spec = make_cyclic_action(2, 48, xy(n, m49), n, m49);
    for (int trial = 0; trial < 3; ++trial) {
      NACocycle p = na_twist(spec, x_power_cocycle(spec, Cochain1{1, {0, 3}}, n), random_group_elt(rng, n, m49));
      LieCochain2 a = delta_k(spec, p);
      LieCochain2 b = delta_k(spec, p, perturbed_section(rng(), n, m49));
      EXPECT_NE(a.values, b.values);
      EXPECT_TRUE(solve_coboundary(spec.twisted(), sub(a, b)).has_value());
    }
  }
}

TEST(Obstruction, MainTheoremExamples) {
  Rng rng(45);
  {
    TwistedGroup tg(FiniteGroup::cyclic(3), m49, {1, 18, 30});
    auto spec = ActionSpec::untwisted(3, tg);
    auto rep = verify_main_theorem(spec, x_power_cocycle(spec, Cochain1{1, {0, 17, 29}}, 4), "untwisted");
    EXPECT_TRUE(rep.theorem_holds);
    EXPECT_EQ(rep.massey_class, "0");
    EXPECT_EQ(rep.rhs_class, "0");
    EXPECT_TRUE(rep.cochain_identity_holds);
    EXPECT_TRUE(rep.contains_zero);
    EXPECT_EQ(rep.id, "untwisted");
  }
  {
    auto spec = make_cyclic_action(2, 24, xy(3, m25), 3, m25);
    auto rep = verify_main_theorem(spec, principal_cocycle(spec, random_group_elt(rng, 3, m25)));
    EXPECT_TRUE(rep.theorem_holds);
    EXPECT_TRUE(rep.cochain_identity_holds);
    EXPECT_TRUE(rep.extension_identity_holds);
    EXPECT_TRUE(rep.delta_class_zero);
  }
  for (int n : {3, 4}) {
    auto spec = make_cyclic_action(5, 1, xy(n, m25), n, m25);
    for (int trial = 0; trial < 3; ++trial) {
      NACocycle q = na_twist(spec, x_power_cocycle(spec, Cochain1{1, {0, 5, 10, 15, 20}}, n + 1),
                             random_group_elt(rng, n, m25));
      auto rep = verify_main_theorem(spec, q);
      EXPECT_TRUE(rep.theorem_holds) << rep.massey_class << " vs " << rep.rhs_class;
      EXPECT_TRUE(rep.cochain_identity_holds);
      EXPECT_TRUE(rep.extension_identity_holds);
      EXPECT_TRUE(rep.contains_zero);
      EXPECT_TRUE(rep.witnesses.empty());
    }
  }
}

TEST(Obstruction, RejectsSmallDegree) {
  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 24});
  auto spec = ActionSpec::untwisted(2, tg);
  EXPECT_THROW(verify_main_theorem(spec, x_power_cocycle(spec, Cochain1{1, {0, 1}}, 3)), InvalidArgument);
}

TEST(Obstruction, RejectsInvalidInput) {
  auto spec = make_cyclic_action(2, 24, xy(3, m25), 3, m25);
  NACocycle q = principal_cocycle(spec, GroupElt::gen_x(3, m25));
  q.values[1] = q.values[1] * xy(3, m25);
  EXPECT_THROW(verify_main_theorem(spec, q), ValidationError);
}

TEST(Obstruction, MuDeltaLiftable) {
  Rng rng(46);
  {
    auto spec = make_cyclic_action(2, 24, xy(3, m25) * xy(3, m25), 3, m25);
    NACocycle p = truncate(principal_cocycle(spec, random_group_elt(rng, 3, m25)), 3);
    auto rep = mu_delta_report(spec, p);
    EXPECT_TRUE(rep.classes_equal);
    EXPECT_TRUE(rep.pointwise_holds);
    EXPECT_TRUE(rep.delta_class_zero);
    EXPECT_TRUE(verify_mu_delta(spec, p));
  }
  const int n = 4;
  auto spec = make_cyclic_action(3, 18, commutator(xy(n, m49), GroupElt::gen_y(n, m49)), n, m49);
  for (int trial = 0; trial < 3; ++trial) {
    NACocycle base = na_twist(spec, x_power_cocycle(spec, Cochain1{1, {0, 17, 29}}, 2), random_group_elt(rng, n, m49));
    NACocycle p = lift_to(spec, base, n);
    ASSERT_EQ(p.level, n);
    auto rep = mu_delta_report(spec, p);
    EXPECT_TRUE(rep.classes_equal) << rep.lhs_class << " vs " << rep.rhs_class;
    EXPECT_TRUE(rep.pointwise_holds);
  }
}

// (Z/5)^2 with trivial chi and a graded twist: f = 2h, and for most h the
// lift chain of an abelian cocycle stops at level n with delta_n nonzero.
TEST(Obstruction, MuDeltaNonLiftable) {
  const uint32_t p = 5;
  const int n = 3;
  TwistedGroup tg = trivial_square(p);
  int obstructed = 0;
  for (uint32_t hu = 0; hu < p; ++hu)
    for (uint32_t lambda : {0u, 2u}) {
      auto spec = make_graded_action(tg, hom(p, hu, 1, n - 1), n);
      NACocycle base = abelian_cocycle(spec, hom(p, lambda, 2 * lambda % p, 1), hom(p, 1, 2, 1));
      NACocycle q = lift_to(spec, base, n + 1);
      ASSERT_GE(q.level, n);
      NACocycle level_n = truncate(q, n);
      auto rep = mu_delta_report(spec, level_n);
      EXPECT_TRUE(rep.classes_equal) << "hu=" << hu << " lambda=" << lambda;
      EXPECT_TRUE(rep.pointwise_holds);
      if (q.level == n) {
        EXPECT_FALSE(rep.delta_class_zero);
        EXPECT_NE(rep.lhs_class, "0");
        ++obstructed;
      } else {
        EXPECT_TRUE(verify_main_theorem(spec, q).theorem_holds);
      }
    }
  EXPECT_GT(obstructed, 0);
}

TEST(Obstruction, ContainsZero) {
  Rng rng(47);
  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 1});
  auto plain = ActionSpec::untwisted(3, tg);
  EXPECT_TRUE(contains_zero_check(plain, x_power_cocycle(plain, Cochain1{1, {0, 0}}, 4)));
  for (int n : {3, 4}) {
    auto spec = make_cyclic_action(4, 7, xy(n, m25) * commutator(xy(n, m25), GroupElt::gen_x(n, m25)), n, m25);
    NACocycle q = principal_cocycle(spec, random_group_elt(rng, n, m25));
    EXPECT_TRUE(contains_zero_check(spec, q));
  }
}
