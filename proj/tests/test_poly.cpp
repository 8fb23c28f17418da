#include "kdunkl/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using kdunkl::SparsePolynomial;

namespace {

SparsePolynomial F(const char* text) { return SparsePolynomial::parse(text); }

SparsePolynomial random_polynomial(std::mt19937& rng, int vars, int max_degree) {
  std::uniform_int_distribution<int> coeff(-3, 3), count(0, 6), exp(0, max_degree);
  SparsePolynomial f;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    kdunkl::Exponents e(static_cast<std::size_t>(vars), 0);
    int budget = max_degree;
    for (auto& x : e) {
      x = std::min(budget, exp(rng) / 2);
      budget -= x;
    }
    f.add_term(e, coeff(rng));
  }
  return f;
}

}  // namespace

TEST(Polynomial, ParseFormatRoundTrip) {
  for (const char* text : {"x1+x2-x1*x2", "3*x1^2*x3", "0", "-7", "x2^3-2*x1*x2+5"}) {
    const auto f = F(text);
    EXPECT_EQ(F(f.to_string().c_str()), f) << text;
    EXPECT_EQ(SparsePolynomial::from_json(f.to_json()), f);
  }
  EXPECT_EQ(F("x1+x2-x1*x2").to_string(), "x1+x2-x1*x2");
  EXPECT_EQ(F("x1*x1"), F("x1^2"));
  EXPECT_EQ(F("x1-x1"), SparsePolynomial());
  EXPECT_THROW(F("x"), std::invalid_argument);
  EXPECT_THROW(F("x1 x2 y"), std::invalid_argument);
  EXPECT_THROW(F(""), std::invalid_argument);
}

TEST(Polynomial, TrailingZeroExponentsAreIrrelevant) {
  SparsePolynomial a, b;
  a.add_term({1, 0, 0}, 2);
  b.add_term({1}, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.nvars(), 1);
}

TEST(DividedDifference, Examples) {
  EXPECT_EQ(kdunkl::divided_difference(F("x1^2"), 1), F("x1+x2"));
  EXPECT_EQ(kdunkl::divided_difference(F("x1*x2"), 1), SparsePolynomial());
  EXPECT_EQ(kdunkl::divided_difference(F("x1^2*x2"), 1), F("x1*x2"));
}

TEST(DividedDifference, IsobaricExamples) {
  EXPECT_EQ(kdunkl::isobaric_divided_difference(F("x1"), 1), F("1"));
  // x_1^2 is symmetric in x_2, x_3 and pi_2(x_2) = d_2(x_2 - x_2 x_3) = 1.
  EXPECT_EQ(kdunkl::isobaric_divided_difference(F("x1^2*x2"), 2), F("x1^2"));
  EXPECT_EQ(kdunkl::isobaric_divided_difference(F("x1^2*x2^2"), 2), F("x1^2*x2+x1^2*x3-x1^2*x2*x3"));
  EXPECT_EQ(kdunkl::isobaric_divided_difference(F("1"), 1), F("1"));
}

TEST(DividedDifference, DefiningIdentity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_polynomial(rng, 5, 6);
    for (int i = 1; i <= 4; ++i) {
      const auto d = kdunkl::divided_difference(f, i);
      const auto xi = SparsePolynomial::variable(i) - SparsePolynomial::variable(i + 1);
      EXPECT_EQ(d * xi, f - f.swap_variables(i));
      EXPECT_EQ(d.swap_variables(i), d);
      EXPECT_TRUE(kdunkl::divided_difference(d, i).is_zero());
      const auto pi = kdunkl::isobaric_divided_difference(f, i);
      EXPECT_EQ(kdunkl::isobaric_divided_difference(pi, i), pi);
    }
  }
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_polynomial(rng, 4, 4), b = random_polynomial(rng, 4, 4), c = random_polynomial(rng, 4, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, GradedPieces) {
  const auto f = F("1+x1-x1*x2+x3^2");
  EXPECT_EQ(f.lowest_degree(), 0);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.homogeneous_component(2), F("-x1*x2+x3^2"));
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_TRUE(f.homogeneous_component(1).is_homogeneous());
}
