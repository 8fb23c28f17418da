#include "kdunkl/lp.hpp"

#include <gtest/gtest.h>

#include <random>

using kdunkl::Rational;
using kdunkl::RationalMatrix;

TEST(LinearSolve, UniqueAndInconsistent) {
  RationalMatrix a{{1, 2}, {3, 4}};
  const auto x = kdunkl::solve_linear_system(a, {5, 6});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(-4));
  EXPECT_EQ((*x)[1], Rational(9, 2));
  EXPECT_FALSE(kdunkl::solve_linear_system({{1, 1}, {2, 2}}, {1, 3}));
}

TEST(Simplex, FeasibleAndInfeasible) {
  const auto ok = kdunkl::find_nonnegative_solution({{1, -1}}, {Rational(-2)});
  ASSERT_EQ(ok.status, kdunkl::FeasibilityStatus::feasible);
  EXPECT_EQ(ok.x[0] - ok.x[1], Rational(-2));
  EXPECT_GE(ok.x[0], 0);
  EXPECT_GE(ok.x[1], 0);
  const auto bad = kdunkl::find_nonnegative_solution({{1, 1}}, {Rational(-1)});
  EXPECT_EQ(bad.status, kdunkl::FeasibilityStatus::infeasible);
}

TEST(Simplex, RandomFeasibleSystemsAreSolvedExactly) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4), weight(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 4, n = 7;
    RationalMatrix a(m, std::vector<Rational>(n));
    std::vector<Rational> x0(n), b(m, Rational(0));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    for (auto& v : x0) v = weight(rng);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
    const auto r = kdunkl::find_nonnegative_solution(a, b);
    ASSERT_EQ(r.status, kdunkl::FeasibilityStatus::feasible);
    for (std::size_t i = 0; i < m; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * r.x[j];
      EXPECT_EQ(s, b[i]);
    }
    for (const auto& v : r.x) EXPECT_GE(v, 0);
  }
}
