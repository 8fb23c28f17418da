#include "kdunkl/freealg.hpp"

#include <gtest/gtest.h>

#include <random>

using kdunkl::FreeAlgebraElement;
using kdunkl::Word;

namespace {

FreeAlgebraElement random_element(std::mt19937& rng, int letters, int max_degree) {
  std::uniform_int_distribution<int> letter(0, letters - 1), degree(0, max_degree), coeff(-2, 2), count(1, 3);
  FreeAlgebraElement e;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Word w;
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) w.push_back(static_cast<kdunkl::Letter>(letter(rng)));
    e.add_term(w, coeff(rng));
  }
  return e;
}

}  // namespace

TEST(InclusionExclusion, SingleFactor) {
  const auto u = FreeAlgebraElement::letter(0), v = FreeAlgebraElement::letter(1);
  const std::vector<std::pair<FreeAlgebraElement, FreeAlgebraElement>> factors{{u, v}};
  const std::vector<FreeAlgebraElement> blocks{FreeAlgebraElement(1), FreeAlgebraElement(1)};
  const auto sides = kdunkl::lemma2_expand(factors, blocks);
  EXPECT_EQ(sides.lhs, u + v);
  EXPECT_EQ(sides.rhs, v + u);
}

TEST(InclusionExclusion, TwoFactors) {
  const auto u1 = FreeAlgebraElement::letter(0), v1 = FreeAlgebraElement::letter(1);
  const auto u2 = FreeAlgebraElement::letter(2), v2 = FreeAlgebraElement::letter(3);
  const std::vector<std::pair<FreeAlgebraElement, FreeAlgebraElement>> factors{{u1, v1}, {u2, v2}};
  const std::vector<FreeAlgebraElement> blocks(3, FreeAlgebraElement(1));
  const auto sides = kdunkl::lemma2_expand(factors, blocks);
  const auto x1 = u1 + v1, x2 = u2 + v2;
  EXPECT_EQ(sides.rhs, v1 * v2 + u1 * x2 + x1 * u2 - u1 * u2);
  EXPECT_EQ(sides.lhs, sides.rhs);
}

TEST(InclusionExclusion, RandomInstances) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> letters(1, 3), factors(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = letters(rng), m = factors(rng);
    std::vector<std::pair<FreeAlgebraElement, FreeAlgebraElement>> pairs;
    std::vector<FreeAlgebraElement> blocks;
    for (int k = 0; k < m; ++k) pairs.emplace_back(random_element(rng, l, 2), random_element(rng, l, 2));
    for (int k = 0; k <= m; ++k) blocks.push_back(random_element(rng, l, 1));
    const auto sides = kdunkl::lemma2_expand(pairs, blocks);
    EXPECT_EQ(sides.lhs, sides.rhs) << "trial " << trial;
  }
}

TEST(InclusionExclusion, RejectsWrongBlockCount) {
  const std::vector<std::pair<FreeAlgebraElement, FreeAlgebraElement>> factors{
      {FreeAlgebraElement::letter(0), FreeAlgebraElement::letter(1)}};
  const std::vector<FreeAlgebraElement> blocks{FreeAlgebraElement(1)};
  EXPECT_THROW(kdunkl::lemma2_expand(factors, blocks), std::invalid_argument);
}
