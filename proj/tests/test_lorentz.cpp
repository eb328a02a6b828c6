#include <gtest/gtest.h>

#include <cmath>

#include "conecurve/lorentz.hpp"
#include "test_util.hpp"

using namespace conecurve;

TEST(Lorentz, InnerProductSignature) {
  const LorentzVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  EXPECT_EQ(inner(e1, e1), 1.0);
  EXPECT_EQ(inner(e2, e2), 1.0);
  EXPECT_EQ(inner(e3, e3), -1.0);
  EXPECT_EQ(inner(e1, e3), 0.0);
  EXPECT_EQ(inner(LorentzVector{1, 2, 3}, LorentzVector{4, 5, 6}), 4.0 + 10.0 - 18.0);
}

TEST(Lorentz, CausalCharacter) {
  EXPECT_EQ(causal_character({1, 0, 1}), CausalCharacter::Lightlike);
  EXPECT_EQ(causal_character({1, 0, 0}), CausalCharacter::Spacelike);
  EXPECT_EQ(causal_character({0, 0, 1}), CausalCharacter::Timelike);
  // Within the default tolerance a near-null vector is lightlike.
  EXPECT_EQ(causal_character({1, 0, 1 + 1e-10}), CausalCharacter::Lightlike);
  EXPECT_EQ(causal_character({1, 0, 1 + 1e-6}), CausalCharacter::Timelike);
  EXPECT_EQ(causal_character({1, 0, 1 + 1e-6}, 1e-3), CausalCharacter::Lightlike);
  EXPECT_STREQ(to_string(CausalCharacter::Spacelike), "spacelike");
}

TEST(Lorentz, NormRejectsTimelike) {
  EXPECT_DOUBLE_EQ(norm({3, 4, 0}), 5.0);
  EXPECT_EQ(norm({1, 0, 1}), 0.0);
  EXPECT_THROW(norm({0, 0, 1}), NegativeQuadrance);
}

TEST(Lorentz, Arithmetic) {
  const LorentzVector a{1, 2, 3}, b{-1, 0.5, 2};
  EXPECT_EQ(a + b, (LorentzVector{0, 2.5, 5}));
  EXPECT_EQ(a - b, (LorentzVector{2, 1.5, 1}));
  EXPECT_EQ(2.0 * a, (LorentzVector{2, 4, 6}));
  EXPECT_EQ(a / 2.0, (LorentzVector{0.5, 1, 1.5}));
  EXPECT_EQ(-a, (LorentzVector{-1, -2, -3}));
  EXPECT_EQ(a[0], 1.0);
  EXPECT_EQ(a[2], 3.0);
  EXPECT_EQ(max_abs(b), 2.0);
  EXPECT_FALSE(is_finite({NAN, 0, 0}));
}

TEST(LorentzProperty, RotationAboutTimelikeAxisIsIsometry) {
  for (int i = 0; i < 200; ++i) {
    const LorentzVector u{testutil::uniform(-3, 3), testutil::uniform(-3, 3), testutil::uniform(-3, 3)};
    const LorentzVector v{testutil::uniform(-3, 3), testutil::uniform(-3, 3), testutil::uniform(-3, 3)};
    const double t = testutil::uniform(-7, 7);
    EXPECT_NEAR(inner(rotate_about_timelike_axis(u, t), rotate_about_timelike_axis(v, t)), inner(u, v), 1e-12);
  }
}

TEST(LorentzProperty, BilinearAndSymmetric) {
  for (int i = 0; i < 200; ++i) {
    const LorentzVector u{testutil::uniform(-3, 3), testutil::uniform(-3, 3), testutil::uniform(-3, 3)};
    const LorentzVector v{testutil::uniform(-3, 3), testutil::uniform(-3, 3), testutil::uniform(-3, 3)};
    const LorentzVector w{testutil::uniform(-3, 3), testutil::uniform(-3, 3), testutil::uniform(-3, 3)};
    const double a = testutil::uniform(-2, 2);
    EXPECT_DOUBLE_EQ(inner(u, v), inner(v, u));
    EXPECT_NEAR(inner(a * u + w, v), a * inner(u, v) + inner(w, v), 1e-12);
  }
}
