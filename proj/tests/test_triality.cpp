#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"

using namespace g2orbits;
using testing_support::random_in;
using testing_support::random_octonion;
using testing_support::random_so8;

TEST(Triality, InvolutionsAndComposition) {
  for (const auto& [i, j] : so8_pairs) {
    const LieMatrix g = g_basis(i, j);
    EXPECT_EQ(triality_alpha(triality_alpha(g)), g);
    EXPECT_LE(max_abs_diff(triality_beta(triality_beta(g)), g), 1e-15);
    EXPECT_LE(max_abs_diff(triality_gamma(g), triality_beta(triality_alpha(g))), 1e-15);
  }
}

TEST(Triality, BetaSendsGToF) {
  for (const auto& [i, j] : so8_pairs) EXPECT_EQ(triality_beta(g_basis(i, j)), f_basis(i, j));
  EXPECT_EQ(f_basis(3, 1), -f_basis(1, 3));
  EXPECT_THROW(f_basis(2, 2), InvalidIndex);
}

TEST(Triality, PreservesBrackets) {
  std::mt19937_64 rng(20);
  for (auto map : {TrialityMap::alpha, TrialityMap::beta, TrialityMap::gamma})
    for (int n = 0; n < 50; ++n) {
      const LieMatrix x = random_so8(rng), y = random_so8(rng);
      EXPECT_LE(max_abs_diff(apply_triality(map, bracket(x, y)),
                             bracket(apply_triality(map, x), apply_triality(map, y))),
                1e-10);
    }
}

TEST(Triality, FixedAlgebras) {
  // Fix(alpha) = so(7): alpha fixes exactly the G_ij with i, j >= 1.
  for (const auto& [i, j] : so8_pairs) {
    const bool fixed = max_abs_diff(triality_alpha(g_basis(i, j)), g_basis(i, j)) == 0.0;
    EXPECT_EQ(fixed, i != 0);
  }
  for (const auto& b : named_subalgebra(SubalgebraName::g2).basis()) {
    EXPECT_LE(max_abs_diff(triality_beta(b), b), 1e-12);
    EXPECT_LE(max_abs_diff(triality_gamma(b), b), 1e-12);
  }
  for (const auto& check : triality_checks())
    if (check.name.find("dim Fix") != std::string::npos) {
      EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
    }
}

TEST(Subalgebras, DimensionsAndClosure) {
  const std::pair<SubalgebraName, std::size_t> expect[] = {
      {SubalgebraName::g2, 14}, {SubalgebraName::su3, 8},      {SubalgebraName::so4_g2, 6},
      {SubalgebraName::u3, 9},  {SubalgebraName::so3_so4, 9}, {SubalgebraName::so7, 21}};
  for (const auto& [name, dim] : expect) {
    const NamedSubalgebra& s = named_subalgebra(name);
    EXPECT_EQ(s.name, name);
    EXPECT_EQ(s.dim(), dim) << to_string(name);
    EXPECT_LT(closure_residual(s.space), 1e-9) << to_string(name);
    EXPECT_LE(orthonormality_defect(s.space), 1e-10) << to_string(name);
    EXPECT_EQ(&named_subalgebra(to_string(name)), &s);
  }
  EXPECT_THROW(named_subalgebra("e8"), UnknownSubalgebra);
}

TEST(Subalgebras, GroupsActByAutomorphismsOrNot) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 5; ++n) {
    EXPECT_TRUE(is_automorphism(expm(random_in(named_subalgebra(SubalgebraName::su3), rng), 1.0)));
    EXPECT_TRUE(is_automorphism(expm(random_in(named_subalgebra(SubalgebraName::so4_g2), rng), 1.0)));
  }
  EXPECT_FALSE(is_automorphism(expm(zeta(4), 0.7)));
  EXPECT_FALSE(is_automorphism(expm(g_basis(1, 2), 0.7)));
  Mat8 skewed = Mat8::identity();
  skewed(1, 1) = 2.0;
  EXPECT_THROW(is_automorphism(skewed), NotOrthogonal);
}

TEST(Spin, RelationHoldsOnLifts) {
  std::mt19937_64 rng(22);
  std::vector<std::pair<Octonion, Octonion>> pairs;
  for (int n = 0; n < 20; ++n) pairs.emplace_back(random_octonion(rng), random_octonion(rng));
  const auto& so7 = named_subalgebra(SubalgebraName::so7);
  for (int n = 0; n < 20; ++n) {
    const SpinElement p = spin_lift_exp(random_in(so7, rng), 0.8);
    EXPECT_LE(spin_relation_defect(p, pairs), 1e-10);
  }
}

TEST(Spin, ProductsAreAssociativeAndKeepTheRelation) {
  std::mt19937_64 rng(23);
  const auto& so7 = named_subalgebra(SubalgebraName::so7);
  const SpinElement a = spin_lift_exp(random_in(so7, rng), 1.0);
  const SpinElement b = spin_lift_exp(random_in(so7, rng), 1.0);
  const SpinElement c = spin_lift_exp(random_in(so7, rng), 1.0);
  const SpinElement l = (a * b) * c, r = a * (b * c);
  EXPECT_LE(max_abs_diff(l.g1, r.g1), 1e-12);
  EXPECT_LE(max_abs_diff(l.g2, r.g2), 1e-12);
  std::vector<std::pair<Octonion, Octonion>> pairs;
  for (int n = 0; n < 10; ++n) pairs.emplace_back(random_octonion(rng), random_octonion(rng));
  EXPECT_LE(spin_relation_defect(l, pairs), 1e-10);
  EXPECT_LE(spin_relation_defect(a.inverse(), pairs), 1e-10);
}

TEST(Spin, RejectsGeneratorsOutsideSo7) {
  EXPECT_THROW(spin_lift_exp(g_basis(0, 3), 1.0), NotInSo7);
}

TEST(Spin, SectionFormulas) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (ActionType type : {ActionType::III, ActionType::IV, ActionType::V}) {
    const double rate = oracle::e0_rate(testing_support::oracle_type(type));
    for (int n = 0; n < 20; ++n) {
      const double t = u(rng);
      const SpinElement p = spin_lift_exp(action_spec(type).geodesic_generator, t);
      Vec8 expect{};
      expect[0] = std::cos(rate * t);
      expect[4] = std::sin(rate * t);
      const Vec8 got = p.g2 * Vec8{1, 0, 0, 0, 0, 0, 0, 0};
      for (int k = 0; k < 8; ++k) EXPECT_NEAR(got[k], expect[k], 1e-10) << to_string(type) << " t=" << t;
    }
  }
  for (int n = 0; n < 20; ++n) {
    const double s = u(rng);
    const Vec8 got = spin_lift_exp(zeta(4), s).g2 * Vec8{1, 0, 0, 0, 0, 0, 0, 0};
    EXPECT_NEAR(got[0], std::cos(1.5 * s), 1e-10);
    EXPECT_NEAR(got[4], std::sin(1.5 * s), 1e-10);
  }
}

TEST(Spin, Rp7InvariantConstantOnTypeIIIOrbits) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
  const ActionSpec& spec = action_spec(ActionType::III);
  const auto& g2 = named_subalgebra(SubalgebraName::g2);
  for (int n = 0; n < 100; ++n) {
    const double t = u(rng);
    const SpinElement k1 = spin_lift_exp(random_in(g2, rng), 1.0);
    const SpinElement k2 = spin_lift_exp(random_in(g2, rng), 1.0);
    const SpinElement p = k1 * spin_lift_exp(spec.geodesic_generator, t) * k2;
    EXPECT_NEAR(rp7_invariant(p), std::abs(std::cos(t)), 1e-10);
  }
}
