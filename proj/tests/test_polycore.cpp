#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ballpoly/polynomial.hpp"
#include "ballpoly/polynomial_io.hpp"
#include "test_support.hpp"

namespace ballpoly {
namespace {

MPoly x(int dim, int axis) { return MPoly::variable(dim, axis); }

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(parse_rational("6/4"), ratio(3, 2));
  EXPECT_EQ(parse_rational(" -1/2 "), ratio(-1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_THROW(parse_rational("10/-4"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(MultiIndex, GradedLexOrder) {
  const auto deg2 = monomials_of_degree(2, 2);
  ASSERT_EQ(deg2.size(), 3u);
  EXPECT_EQ(deg2[0], (MultiIndex{2, 0}));
  EXPECT_EQ(deg2[1], (MultiIndex{1, 1}));
  EXPECT_EQ(deg2[2], (MultiIndex{0, 2}));
  EXPECT_EQ(monomials_up_to(3, 4).size(), 35u);
  GradedLexOrder less;
  EXPECT_TRUE(less(MultiIndex{0, 5}, MultiIndex{3, 3}));
  EXPECT_TRUE(less(MultiIndex{2, 1}, MultiIndex{1, 2}));
  EXPECT_THROW((MultiIndex{0, 1}.decremented(0)), std::out_of_range);
}

TEST(Arith, Examples) {
  EXPECT_EQ(x(2, 0) * x(2, 0), MPoly::monomial(MultiIndex{2, 0}));
  const MPoly p = x(3, 0) * Rational(3) + x(3, 1) * x(3, 2);
  EXPECT_TRUE((p + p * Rational(-1)).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  const MPoly w = one_minus_norm_sq(2) * MPoly::constant(2, Rational(1));
  EXPECT_EQ(format(w), "1 - x1^2 - x2^2");
}

TEST(Arith, DimensionMismatchThrows) {
  EXPECT_THROW(x(2, 0) + x(3, 0), DimensionMismatch);
  EXPECT_THROW(x(2, 0) * x(3, 0), DimensionMismatch);
  EXPECT_THROW(MPoly(0), std::invalid_argument);
}

TEST(Arith, ZeroCoefficientsArePruned) {
  MPoly p = x(2, 0);
  p.add_term(MultiIndex{1, 0}, Rational(-1));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
}

TEST(Diff, Examples) {
  const MPoly p = MPoly::monomial(MultiIndex{2, 1});
  EXPECT_EQ(diff(p, 0), MPoly::monomial(MultiIndex{1, 1}, Rational(2)));
  EXPECT_TRUE(diff(MPoly::monomial(MultiIndex{3, 0}), 1).is_zero());
  EXPECT_EQ(diff(one_minus_norm_sq(2), 0), x(2, 0) * Rational(-2));
  EXPECT_THROW(diff(p, 2), std::out_of_range);
  EXPECT_THROW(diff(p, -1), std::out_of_range);
}

TEST(Eval, Examples) {
  const MPoly p = x(2, 0) * x(2, 0) + x(2, 1);
  const std::vector<Rational> pt{ratio(1, 2), ratio(1, 3)};
  EXPECT_EQ(evaluate(p, pt), ratio(7, 12));
  const MPoly q = p + MPoly::constant(2, ratio(5, 3));
  EXPECT_EQ(evaluate(q, std::vector<Rational>{0, 0}), ratio(5, 3));
  const MPoly w = one_minus_norm_sq(2);
  for (int k = 0; k < 16; ++k) {
    const double th = 2 * std::numbers::pi * k / 16;
    EXPECT_NEAR(evaluate(w, std::vector<double>{std::cos(th), std::sin(th)}), 0.0, 1e-14);
  }
  EXPECT_THROW(evaluate(p, std::vector<Rational>{1}), DimensionMismatch);
}

TEST(Grade, Examples) {
  const auto g1 = grade(x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1));
  EXPECT_EQ(g1.degree, 2);
  EXPECT_EQ(g1.homogeneous_parts.size(), 1u);
  EXPECT_EQ(g1.parity, Parity::kEven);
  const MPoly cubic = x(2, 0) + x(2, 0) * x(2, 0) * x(2, 0);
  const auto g2 = grade(cubic);
  EXPECT_EQ(g2.degree, 3);
  EXPECT_EQ(g2.homogeneous_parts.size(), 2u);
  EXPECT_EQ(g2.parity, Parity::kOdd);
  EXPECT_EQ(grade(MPoly::constant(2, 1) + x(2, 0)).parity, Parity::kMixed);
  EXPECT_EQ(grade(MPoly(2)).degree, -1);
}

TEST(Format, RoundTripsThroughParser) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MPoly p = testing::random_poly(rng, 3, 5);
    EXPECT_EQ(parse_polynomial(format(p), 3), p) << format(p);
  }
  EXPECT_EQ(format(MPoly(2)), "0");
  EXPECT_EQ(format(parse_polynomial("x2^2 + x1*x2 + x1^2", 2)), "x1^2 + x1*x2 + x2^2");
  EXPECT_EQ(format(parse_polynomial("-3/4*x1^2*x2 + 1", 2)), "1 - 3/4*x1^2*x2");
  EXPECT_THROW(parse_polynomial("x3", 2), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x1 +", 2), std::invalid_argument);
}

TEST(Primitive, IntegerContentAndSign) {
  MPoly p = parse_polynomial("-1/2*x1^2 + 1/3*x2^2", 2);
  make_primitive(p);
  EXPECT_EQ(p, parse_polynomial("3*x1^2 - 2*x2^2", 2));
}

class PolyProperties : public ::testing::TestWithParam<int> {};

TEST_P(PolyProperties, DiffIsLinear) {
  const int dim = GetParam();
  std::mt19937_64 rng(100 + dim);
  for (int t = 0; t < 20; ++t) {
    const MPoly p = testing::random_poly(rng, dim, 10, 0.1);
    const MPoly q = testing::random_poly(rng, dim, 10, 0.1);
    const Rational a = ratio(t - 7, 3), b = ratio(5, t + 1);
    for (int i = 0; i < dim; ++i) EXPECT_EQ(diff(p * a + q * b, i), diff(p, i) * a + diff(q, i) * b);
  }
}

TEST_P(PolyProperties, ProductRule) {
  const int dim = GetParam();
  std::mt19937_64 rng(200 + dim);
  for (int t = 0; t < 20; ++t) {
    const MPoly p = testing::random_poly(rng, dim, 5);
    const MPoly q = testing::random_poly(rng, dim, 5);
    for (int i = 0; i < dim; ++i) EXPECT_EQ(diff(p * q, i), diff(p, i) * q + p * diff(q, i));
  }
}

TEST_P(PolyProperties, EvaluationIsMultiplicative) {
  const int dim = GetParam();
  std::mt19937_64 rng(300 + dim);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int t = 0; t < 20; ++t) {
    const MPoly p = testing::random_poly(rng, dim, 5);
    const MPoly q = testing::random_poly(rng, dim, 5);
    std::vector<Rational> pt;
    for (int i = 0; i < dim; ++i) pt.push_back(ratio(c(rng), 7));
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
  }
}

TEST_P(PolyProperties, MixedPartialsCommute) {
  const int dim = GetParam();
  std::mt19937_64 rng(400 + dim);
  for (int t = 0; t < 20; ++t) {
    const MPoly p = testing::random_poly(rng, dim, 8);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) EXPECT_EQ(diff(diff(p, i), j), diff(diff(p, j), i));
  }
}

TEST_P(PolyProperties, GradeRecomposes) {
  const int dim = GetParam();
  std::mt19937_64 rng(500 + dim);
  for (int t = 0; t < 20; ++t) {
    const MPoly p = testing::random_poly(rng, dim, 7);
    const auto g = grade(p);
    MPoly sum(dim);
    for (const auto& part : g.homogeneous_parts) {
      EXPECT_TRUE(is_homogeneous(part));
      sum += part;
    }
    EXPECT_EQ(sum, p);
    EXPECT_EQ(g.degree, p.degree());
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, PolyProperties, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace ballpoly
