#include "kdunkl/lp.hpp"

#include <stdexcept>

namespace kdunkl {

std::optional<std::vector<Rational>> solve_linear_system(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("right-hand side size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pick = r;
    while (pick < rows && a[pick][c] == 0) ++pick;
    if (pick == rows) continue;
    std::swap(a[pick], a[r]);
    std::swap(b[pick], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

FeasibilityResult find_nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b,
                                            const SimplexLimits& limits) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("right-hand side size mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  FeasibilityResult result;
  if (m == 0) {
    result.status = FeasibilityStatus::feasible;
    result.x.assign(n, Rational(0));
    return result;
  }

  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j] * sign;
    t[i][n + i] = 1;
    t[i][width - 1] = b[i] * sign;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  std::size_t pivots = 0;
  while (true) {
    std::size_t entering = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;
    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][entering] <= 0) continue;
      const Rational ratio = t[i][width - 1] / t[i][entering];
      if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) break;  // unbounded direction cannot occur in phase one
    if (++pivots > limits.max_pivots) {
      result.status = FeasibilityStatus::pivot_limit;
      return result;
    }
    const Rational inv = 1 / t[leaving][entering];
    for (auto& v : t[leaving])
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leaving || t[i][entering] == 0) continue;
      const Rational f = t[i][entering];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leaving][j] != 0) t[i][j] -= f * t[leaving][j];
    }
    if (cost[entering] != 0) {
      const Rational f = cost[entering];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leaving][j] != 0) cost[j] -= f * t[leaving][j];
    }
    basis[leaving] = entering;
  }

  if (cost[width - 1] != 0) {  // -(sum of artificials) at the optimum
    result.status = FeasibilityStatus::infeasible;
    return result;
  }
  result.status = FeasibilityStatus::feasible;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) result.x[basis[i]] = t[i][width - 1];
  return result;
}

}  // namespace kdunkl
