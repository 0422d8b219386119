#include <gtest/gtest.h>

#include "nilmassey/defining_system.hpp"
#include "nilmassey/na_cocycle.hpp"
#include "nilmassey/random.hpp"

using namespace nilmassey;

namespace {

const Modulus m25(25), m49(49);

GroupElt xy(int n, const Modulus& mod) { return commutator(GroupElt::gen_x(n, mod), GroupElt::gen_y(n, mod)); }

std::vector<UniCoset> phi_of(const ActionSpec& spec, const NACocycle& p) {
  std::vector<UniCoset> theta;
  for (const auto& v : p.values) theta.push_back(phi(v, spec.n()));
  return theta;
}

struct Fixture {
  ActionSpec spec;
  NACocycle p;
};

std::vector<Fixture> fixtures(Rng& rng) {
  std::vector<Fixture> out;
  for (int n : {3, 4, 5}) {
    auto spec = make_cyclic_action(2, 48, xy(n, m49) * power(commutator(xy(n, m49), GroupElt::gen_y(n, m49)), 2), n, m49);
    out.push_back({spec, na_twist(spec, x_power_cocycle(spec, Cochain1{1, {0, 11}}, n), random_group_elt(rng, n, m49))});
    out.push_back({spec, truncate(principal_cocycle(spec, random_group_elt(rng, n, m49)), n)});
  }
  for (int n : {3, 4}) {
    auto spec = make_cyclic_action(5, 1, xy(n, m25), n, m25);
    out.push_back({spec, na_twist(spec, x_power_cocycle(spec, Cochain1{1, {0, 5, 10, 15, 20}}, n),
                                  random_group_elt(rng, n, m25))});
  }
  return out;
}

}  // namespace

TEST(DefiningSystem, ZeroSystem) {
  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 24});
  DefiningSystem ds(4, tg);
  EXPECT_TRUE(validate_defining_system(tg, ds).ok());
  EXPECT_TRUE(is_zero(massey_value(tg, ds)));
  EXPECT_EQ(massey_value(tg, ds).weight, 4);
  EXPECT_THROW(ds.entry(1, 5), InvalidArgument);
  EXPECT_THROW(ds.entry(2, 2), InvalidArgument);
}

TEST(DefiningSystem, SparseOrderThree) {
  // Z_{1,2} and Z_{3,4} are cocycles, Z_{2,3} = 0, so Z_{1,3} = Z_{2,4} = 0 works.
  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 24});
  DefiningSystem ds(3, tg);
  ds.entry(1, 2) = Cochain1{1, {0, 3}};
  ds.entry(3, 4) = Cochain1{1, {0, 8}};
  ASSERT_TRUE(validate_defining_system(tg, ds).ok());
  EXPECT_TRUE(is_zero(massey_value(tg, ds)));
}

TEST(DefiningSystem, FromThetaStructure) {
  Rng rng(31);
  for (const auto& [spec, p] : fixtures(rng)) {
    const int n = spec.n();
    const TwistedGroup& tg = spec.twisted();
    auto theta = phi_of(spec, p);
    ASSERT_TRUE(validate_theta(tg, theta).ok());
    DefiningSystem ds = from_theta(tg, theta);
    EXPECT_TRUE(validate_defining_system(tg, ds).ok()) << validate_defining_system(tg, ds).summary();
    const Cochain1 minus_py = scale(tg, spec.modulus().neg(1), projection_y(p));
    const Cochain1 minus_px = scale(tg, spec.modulus().neg(1), projection_x(p));
    EXPECT_EQ(ds.entry(1, 2), minus_py);
    EXPECT_EQ(ds.entry(n, n + 1), minus_py);
    for (int i = 2; i <= n - 1; ++i) EXPECT_EQ(ds.entry(i, i + 1), minus_px);
    EXPECT_TRUE(is_cocycle(tg, massey_value(tg, ds)));
  }
  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 24});
  DefiningSystem zero = from_theta(tg, {UniCoset::identity(3, m25), UniCoset::identity(3, m25)});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      if (DefiningSystem::valid_index(3, i, j)) EXPECT_TRUE(is_zero(zero.entry(i, j)));
}

TEST(DefiningSystem, FromThetaRejectsNonCocycle) {
  // With trivial chi theta is a homomorphism, and A^2 != 1.
  TwistedGroup tg(FiniteGroup::cyclic(2), m25, {1, 1});
  std::vector<UniCoset> theta{UniCoset::identity(3, m25), UniCoset(build_A(3, m25))};
  EXPECT_FALSE(validate_theta(tg, theta).ok());
  EXPECT_THROW(from_theta(tg, theta), NotACocycle);
}

TEST(DefiningSystem, CorruptionIsPinpointed) {
  Rng rng(32);
  for (const auto& [spec, p] : fixtures(rng)) {
    const TwistedGroup& tg = spec.twisted();
    DefiningSystem ds = from_theta(tg, phi_of(spec, p));
    const int n = spec.n();
    for (int i = 1; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j) {
        if (!DefiningSystem::valid_index(n, i, j)) continue;
        // A bump at the identity is never a cocycle, so the entry's own
        // equation breaks. A bump elsewhere can be a legitimate change.
        DefiningSystem bad = ds;
        bad.entry(i, j).values[0] = spec.modulus().add(bad.entry(i, j).values[0], 1 + rng() % 5);
        auto rep = validate_defining_system(tg, bad);
        ASSERT_FALSE(rep.ok()) << "i=" << i << " j=" << j;
        bool names_entry = false;
        const std::string tag = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " ";
        for (const auto& v : rep.violations()) names_entry |= v.witness.rfind(tag, 0) == 0;
        EXPECT_TRUE(names_entry) << rep.summary();
        EXPECT_THROW(massey_value(tg, bad), ValidationError);
      }
  }
}

TEST(DefiningSystem, ConjugationChangesValueByCoboundary) {
  Rng rng(33);
  for (const auto& [spec, p] : fixtures(rng)) {
    const TwistedGroup& tg = spec.twisted();
    const int n = spec.n();
    auto theta = phi_of(spec, p);
    for (int trial = 0; trial < 3; ++trial) {
      UniCoset u = phi(random_group_elt(rng, n, spec.modulus()), n);
      std::vector<UniCoset> conj;
      for (uint32_t g = 0; g < tg.order(); ++g) conj.push_back(u.inverse() * theta[g] * chi_act(tg.chi(g), u));
      ASSERT_TRUE(validate_theta(tg, conj).ok());
      EXPECT_TRUE(classes_equal(tg, massey_value(tg, from_theta(tg, theta)), massey_value(tg, from_theta(tg, conj))));
    }
  }
}

TEST(DefiningSystem, ModifyForZero) {
  Rng rng(34);
  for (const auto& [spec, p] : fixtures(rng)) {
    const TwistedGroup& tg = spec.twisted();
    const int n = spec.n();
    DefiningSystem ds = from_theta(tg, phi_of(spec, p));
    DefiningSystem same = modify_for_zero(tg, ds, zero_cochain1(tg, n - 1));
    EXPECT_EQ(massey_value(tg, same), massey_value(tg, ds));

    Cochain1 f = f_cochain(spec);
    DefiningSystem mod = modify_for_zero(tg, ds, f);
    EXPECT_TRUE(validate_defining_system(tg, mod).ok());
    EXPECT_EQ(sub(tg, massey_value(tg, mod), massey_value(tg, ds)), cup(tg, f, ds.entry(n, n + 1)));

    Cochain1 bad = f;
    bad.values[1] = spec.modulus().add(bad.values[1], 1);
    if (!is_cocycle(tg, bad)) EXPECT_THROW(modify_for_zero(tg, ds, bad), NotACocycle);
  }
}
