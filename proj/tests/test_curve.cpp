#include <gtest/gtest.h>

#include <cmath>

#include "conecurve/curve.hpp"
#include "oracles/frozen_values.hpp"
#include "test_util.hpp"

using namespace conecurve;

TEST(Curve, Example1MatchesFrozenJets) {
  for (const auto& o : frozen::kExample1) {
    const CurveJet j = example1_curve(o.s);
    EXPECT_VEC_NEAR(j.p, o.p, 1e-15);
    EXPECT_VEC_NEAR(j.d1, o.d1, 1e-15);
    EXPECT_VEC_NEAR(j.d2, o.d2, 1e-14);
    EXPECT_VEC_NEAR(j.d3, o.d3, 1e-14);
    EXPECT_EQ(j.accuracy, JetAccuracy::Exact);
  }
}

TEST(Curve, Example1AtZero) {
  const CurveJet j = example1_curve(0.0);
  EXPECT_VEC_NEAR(j.p, (LorentzVector{-0.5, 0, 0.5}), 1e-15);
  EXPECT_EQ(causal_character(j.p), CausalCharacter::Lightlike);
}

TEST(Curve, ConePositionFormula) {
  EXPECT_VEC_NEAR(cone_position(0.0, 1.0), (LorentzVector{-0.5, 0, 0.5}), 0.0);
  EXPECT_THROW(cone_position(1.0, 0.0), DegenerateGenerator);
}

TEST(Curve, SinhGeneratesExample1) {
  const auto src = named_generator("sinh");
  ASSERT_TRUE(src.has_value());
  for (double s = -2.0; s <= 2.0; s += 0.25) {
    const CurveJet a = src->jet(s);
    const CurveJet b = example1_curve(s);
    EXPECT_VEC_NEAR(a.p, b.p, 1e-13);
    EXPECT_VEC_NEAR(a.d1, b.d1, 1e-13);
    EXPECT_VEC_NEAR(a.d2, b.d2, 1e-12);
    EXPECT_VEC_NEAR(a.d3, b.d3, 1e-12);
  }
}

TEST(Curve, RecoverGeneratingFunction) {
  const auto f = recover_generating_function(example1_curve(1.0));
  EXPECT_NEAR(f.value, frozen::kSinh1, 1e-14);
  EXPECT_NEAR(f.d1, frozen::kCosh1, 1e-14);
  EXPECT_NEAR(f.d2, frozen::kSinh1, 1e-13);
  EXPECT_NEAR(f.d3, frozen::kCosh1, 1e-12);
  const auto g = recover_generator_jet(example1_curve(1.0));
  EXPECT_NEAR(g.derivative(4), frozen::kSinh1, 1e-11);
}

TEST(Curve, RecoveryRejectsDegenerateProjection) {
  CurveJet j;
  j.p = {1, 0, 1};
  EXPECT_THROW(recover_generating_function(j), DegenerateProjection);
}

TEST(Curve, DegenerateGeneratorIsReported) {
  const auto c = CurveSource::generator("flat", [](const GeneratorJet& s) { return s * s; });
  EXPECT_THROW(c.jet(0.0), DegenerateGenerator);
}

TEST(CurveProperty, GeneratedCurvesLieOnTheConeWithUnitSpeed) {
  for (const auto& name : generator_names()) {
    const auto c = named_generator(name);
    ASSERT_TRUE(c.has_value()) << name;
    for (int i = 0; i < 50; ++i) {
      const CurveJet j = c->jet(testutil::uniform(-2, 2));
      EXPECT_NEAR(inner(j.p, j.p), 0.0, 1e-10 * std::max(1.0, max_abs(j.p) * max_abs(j.p))) << name;
      EXPECT_NEAR(inner(j.d1, j.d1), 1.0, 1e-10) << name;
    }
  }
  EXPECT_FALSE(named_generator("nope").has_value());
}

TEST(CurveProperty, RoundTripThroughGeneratorRecovery) {
  const auto c = named_generator("sinh-perturbed");
  for (int i = 0; i < 30; ++i) {
    const double s = testutil::uniform(-2, 2);
    const CurveJet j = c->jet(s);
    const CurveJet back = eval_cone_curve(recover_generator_jet(j), s);
    EXPECT_VEC_NEAR(back.p, j.p, 1e-12);
    EXPECT_VEC_NEAR(back.d3, j.d3, 1e-9);
  }
}

TEST(Curve, SampledCurveUsesFdJetsAtNodes) {
  SampledCurve sc;
  sc.s0 = -1.0;
  sc.step = 0.01;
  for (int i = 0; i <= 200; ++i) sc.positions.push_back(example1_curve(sc.node(i)).p);
  const auto src = CurveSource::sampled(sc, "mem");
  EXPECT_FALSE(src.exact());
  EXPECT_EQ(src.descriptor(), "csv:mem");
  const CurveJet j = src.jet(0.5);
  EXPECT_EQ(j.accuracy, JetAccuracy::Centered);
  EXPECT_VEC_NEAR(j.d1, example1_curve(0.5).d1, 1e-10);
  EXPECT_VEC_NEAR(j.d3, example1_curve(0.5).d3, 1e-5);
  EXPECT_EQ(src.jet(-1.0).accuracy, JetAccuracy::OneSided);
  EXPECT_THROW(src.jet(0.505), OffGrid);
  EXPECT_THROW(src.jet(5.0), OffGrid);
  EXPECT_EQ(src.native_grid()->size(), 201u);
}

TEST(Curve, UniformGrid) {
  const auto g = uniform_grid(-2, 2, 401);
  EXPECT_EQ(g.size(), 401u);
  EXPECT_EQ(g.front(), -2.0);
  EXPECT_EQ(g.back(), 2.0);
  EXPECT_EQ(g[200], 0.0);
}
