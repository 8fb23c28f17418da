#pragma once

#include "kdunkl/ideal.hpp"
#include "kdunkl/lp.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kdunkl {

struct ConeOptions {
  /// Up to this many words of one degree every word is offered to the LP.
  /// Above it the cone is generated degree by degree: the rays of degree d
  /// are the images of (rays of degree d-1) * letter, up to positive scaling.
  std::size_t max_words = 200'000;
  /// Cap on the number of distinct rays kept per degree; exceeding it makes
  /// the answer undecided.
  std::size_t max_rays = 200'000;
  SimplexLimits simplex;
  MembershipOptions membership;
};

enum class ConeStatus { certified, no_certificate, undecided };
std::string to_string(ConeStatus status);

/// sign * e_d = sum weight_w * w + (ideal part), weights >= 0.
struct DegreeConeCertificate {
  int degree = 0;
  int sign = 1;
  std::map<Word, Rational, WordOrder> weights;
  MembershipCertificate ideal_part;
  /// Weights and ideal coefficients are all integers.
  bool integral = true;
};

struct ConeResult {
  ConeStatus status = ConeStatus::undecided;
  std::vector<DegreeConeCertificate> degrees;
  std::optional<int> failing_degree;
  std::string detail;
};

/// For every degree d with a nonzero piece, decides whether sign(d) * e_d is a
/// nonnegative rational combination of words modulo the ideal (exact phase-one
/// simplex over the normal forms of the words).
ConeResult cone_membership(const FreeAlgebraElement& e, const QuadraticAlgebraSpec& spec,
                           const std::function<int(int)>& sign_profile, const ConeOptions& options = {});

/// Re-expands one degree's certificate and compares with sign * e_d.
bool verify_cone_certificate(const DegreeConeCertificate& certificate, const FreeAlgebraElement& e,
                             const QuadraticAlgebraSpec& spec);

}  // namespace kdunkl
