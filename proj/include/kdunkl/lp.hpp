#pragma once

#include "kdunkl/bigint.hpp"

#include <optional>
#include <vector>

namespace kdunkl {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly. Returns nothing when the system is inconsistent;
/// free variables, if any, are set to zero.
std::optional<std::vector<Rational>> solve_linear_system(RationalMatrix a, std::vector<Rational> b);

struct SimplexLimits {
  std::size_t max_pivots = 100000;
};

enum class FeasibilityStatus { feasible, infeasible, pivot_limit };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::infeasible;
  std::vector<Rational> x;
};

/// Phase-one simplex with exact rational pivots and Bland's rule: finds
/// x >= 0 with A x = b, or proves that none exists.
FeasibilityResult find_nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b,
                                            const SimplexLimits& limits = {});

}  // namespace kdunkl
