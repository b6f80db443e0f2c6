#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "meanconvex/pathological.hpp"

using namespace meanconvex;

namespace {

const FormalElement t1 = FormalElement::generator(0);

PathologicalSpec spec(Rational alpha, Rational c) { return PathologicalSpec(alpha, DerivationSpec({c})); }

HighPrecision hp(const char* text) { return HighPrecision(text); }

bool close(const HighPrecision& a, const HighPrecision& b, const char* rel) {
  return abs(a - b) <= HighPrecision(rel) * abs(b);
}

TEST(LogFComponents, Examples) {
  const auto a = log_F_components(t1, spec(1, 1));
  EXPECT_EQ(a.alpha, 1);
  EXPECT_EQ(a.x, t1);
  EXPECT_EQ(a.ell, t1.reciprocal());
  const auto b = log_F_components(FormalElement(Rational(5, 3)), spec(Rational(3, 2), 1));
  EXPECT_EQ(b.alpha, Rational(3, 2));
  EXPECT_EQ(b.ell, FormalElement(0));
  const auto c = log_F_components(t1 * t1, spec(1, 1));
  EXPECT_EQ(c.ell, 2 / t1);
  EXPECT_THROW(log_F_components(FormalElement(0), spec(1, 1)), DomainError);
  EXPECT_THROW(log_F_components(3 - t1, spec(1, 1)), DomainError);
}

TEST(EvaluateF, Examples) {
  PrecisionScope scope(60);
  EXPECT_TRUE(close(evaluate_F(t1, spec(1, 0)), hp(kPiDecimal), "1e-49"));
  EXPECT_TRUE(close(evaluate_F(t1, spec(2, 0)), hp(oracle::kPiSquared), "1e-48"));
  EXPECT_TRUE(close(evaluate_F(t1, spec(1, 1)), hp(oracle::kPiExpInvPi), "1e-48"));
  EXPECT_TRUE(close(evaluate_F(t1, spec(2, 1)), hp(oracle::kPiSquaredExpInvPi), "1e-48"));
}

TEST(EvaluateF, Multiplicative) {
  std::mt19937_64 rng(53);
  const auto s = spec(Rational(3, 2), 1);
  PrecisionScope scope(s.precision());
  for (int i = 0; i < 50; ++i) {
    const auto x = sample_field_point(rng, s.assignment());
    const auto y = sample_field_point(rng, s.assignment());
    ASSERT_EQ(log_F_components(x * y, s).ell, log_F_components(x, s).ell + log_F_components(y, s).ell);
    ASSERT_TRUE(close(evaluate_F(x * y, s), evaluate_F(x, s) * evaluate_F(y, s), "1e-42"));
  }
}

TEST(EvaluateF, PowerConsistency) {
  std::mt19937_64 rng(59);
  const auto s = spec(2, 1);
  PrecisionScope scope(s.precision());
  for (int i = 0; i < 50; ++i) {
    const auto x = sample_field_point(rng, s.assignment());
    const long n = uniform_int(rng, 1, 7);
    const long m = uniform_int(rng, -7, 7);
    ASSERT_TRUE(close(evaluate_F(x.pow(n), s), pow(evaluate_F(x, s), n), "1e-42"));
    ASSERT_TRUE(close(pow(evaluate_F(PoweredElement(x, Rational(m, n)), s), n), pow(evaluate_F(x, s), m), "1e-42"));
  }
}

TEST(PoweredElement, Product) {
  const PoweredElement a(t1, Rational(1, 2));
  const PoweredElement b = a * PoweredElement(t1, Rational(1, 3));
  EXPECT_EQ(b.exponent, Rational(5, 6));
  EXPECT_THROW(a * PoweredElement(t1 + 1), DomainError);
  EXPECT_THROW(PoweredElement(FormalElement(0)), DomainError);
}

TEST(ShapedPair, PowersStayInField) {
  const auto pair = shaped_pair(t1, t1 + 1, Rational(2, 3));
  EXPECT_EQ(pair.first.exponent, 3);
  EXPECT_EQ(pair.second.exponent, 3);
}

TEST(JensenProbe, ZeroDerivationSitsOnBoundary) {
  const auto s = spec(2, 0);
  const std::vector<PoweredPair> pairs{{t1, t1 * t1}};
  const auto report = jensen_probe(s, 1, pairs);
  EXPECT_TRUE(report.pass);
  PrecisionScope scope(60);
  EXPECT_LE(abs(HighPrecision(report.min_gap_text)), HighPrecision("1e-40"));
}

TEST(JensenProbe, EqualArgumentsGiveZeroGap) {
  const auto report = jensen_probe(spec(1, 1), 1, std::vector<PoweredPair>{{t1, t1}});
  EXPECT_TRUE(report.pass);
  PrecisionScope scope(60);
  EXPECT_LE(abs(HighPrecision(report.min_gap_text)), HighPrecision("1e-45"));
}

TEST(JensenProbe, RandomPairsArePositive) {
  std::mt19937_64 rng(61);
  const auto s = spec(1, 1);
  std::vector<PoweredPair> pairs;
  for (int i = 0; i < 200; ++i) {
    const auto w = sample_field_point(rng, s.assignment());
    const auto z = sample_field_point(rng, s.assignment());
    pairs.push_back(shaped_pair(w, z, 1));
  }
  const auto report = jensen_probe(s, 1, pairs);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.samples.size(), 200u);
  EXPECT_GE(*report.min_gap, -1e-40);
}

TEST(JensenProbe, ExponentBelowBoundaryIsSharp) {
  // F(t) = t^2 with q < p/2 fails for some pair.
  std::mt19937_64 rng(67);
  const auto s = spec(2, 0);
  std::vector<PoweredPair> pairs;
  for (int i = 0; i < 20; ++i)
    pairs.push_back(shaped_pair(sample_field_point(rng, s.assignment()), sample_field_point(rng, s.assignment()), 1));
  JensenProbeOptions options;
  options.range_order = Rational(1, 4);
  EXPECT_FALSE(jensen_probe(s, 1, pairs, options).pass);
  for (const Rational& q : {Rational(1, 2), Rational(3, 4), Rational(1), Rational(3)}) {
    options.range_order = q;
    EXPECT_TRUE(jensen_probe(s, 1, pairs, options).pass);
    EXPECT_TRUE(jensen_probe(spec(2, 1), 1, pairs, options).pass);
  }
}

TEST(JensenProbe, RejectsUnshapedPairs) {
  EXPECT_THROW(jensen_probe(spec(1, 1), Rational(1, 2), std::vector<PoweredPair>{{t1, t1 + 1}}), ShapingError);
}

TEST(DiscontinuityDemo, JumpFactor) {
  const auto report = discontinuity_demo(spec(2, 1), 8);
  EXPECT_TRUE(report.pass);
  PrecisionScope scope(60);
  std::map<std::string, std::string> fixtures(report.fixture_values.begin(), report.fixture_values.end());
  EXPECT_TRUE(close(HighPrecision(fixtures.at("jump_factor")), hp(oracle::kExpInvPi), "1e-45"));
  EXPECT_TRUE(close(HighPrecision(fixtures.at("F_at_t1")), hp(oracle::kPiSquaredExpInvPi), "1e-45"));
  EXPECT_TRUE(close(HighPrecision(fixtures.at("limit_of_F_on_approximants")), hp(oracle::kPiSquared), "1e-45"));
  EXPECT_GE(HighPrecision(fixtures.at("terminal_discrepancy")), hp(oracle::kHalfAnalyticJump));
  EXPECT_EQ(report.samples.size(), 9u);
}

TEST(DiscontinuityDemo, JumpIndependentOfAlpha) {
  PrecisionScope scope(60);
  const auto jump = [](Rational alpha, Approximants kind) {
    const auto r = discontinuity_demo(spec(alpha, 1), 6, kind);
    for (const auto& [k, v] : r.fixture_values)
      if (k == "jump_factor") return HighPrecision(v);
    return HighPrecision(0);
  };
  EXPECT_TRUE(close(jump(1, Approximants::decimal_truncation), jump(Rational(7, 3), Approximants::continued_fraction),
                    "1e-30"));
}

TEST(DiscontinuityDemo, ZeroDerivationRefused) { EXPECT_THROW(discontinuity_demo(spec(1, 0), 8), DomainError); }

TEST(DecimalToRational, Values) {
  EXPECT_EQ(decimal_to_rational("3.14"), Rational(157, 50));
  EXPECT_EQ(decimal_to_rational("12"), Rational(12));
  EXPECT_EQ(decimal_to_rational("0.5"), Rational(1, 2));
}

}  // namespace
