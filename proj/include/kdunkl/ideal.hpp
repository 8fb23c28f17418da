#pragma once

#include "kdunkl/quadspec.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace kdunkl {

/// Ring over which a membership statement was established. Integer
/// certificates prove vanishing in the algebra itself; rational ones only in
/// the algebra tensored with Q.
enum class Ring { integer, rational };
std::string to_string(Ring ring);

/// Raised when a degree needs more memory than the configured caps allow.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdealLimits {
  /// Nonzero matrix entries kept for one degree.
  std::size_t max_entries = 2'000'000;
  /// Columns (candidate words modulo lower degrees) for one degree.
  std::size_t max_dimension = 400'000;
};

/// Sparse vector over the standard words of one degree, sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// One summand coeff * left * relation * right of an ideal combination.
struct CertificateTerm {
  Word left;
  std::size_t relation = 0;
  Word right;
  Rational coeff;

  bool operator==(const CertificateTerm&) const = default;
};

struct MembershipCertificate {
  Ring ring = Ring::integer;
  std::vector<CertificateTerm> terms;
};

/// The two-sided ideal generated by homogeneous quadratic relations, built
/// one degree at a time.
///
/// Degree d of the free algebra modulo (ideal in degree d-1) * letters is
/// spanned by s*b with s a standard word of degree d-1 and b a letter. The
/// ideal in degree d adds the images of s*r for standard s of degree d-2 and
/// relations r. Eliminating those images (Hermite-style, with extended-gcd
/// steps, while every pivot stays a unit) yields the standard words and a
/// normal form of degree d. Each pivot row remembers, as a small DAG, which
/// generators it came from, so membership can be certified explicitly.
class QuadraticIdeal {
 public:
  QuadraticIdeal(std::size_t alphabet_size, std::vector<FreeAlgebraElement> relations, bool integral = true,
                 IdealLimits limits = {});

  std::size_t alphabet_size() const { return letters_; }
  const std::vector<FreeAlgebraElement>& relations() const { return relations_; }

  /// Builds all degrees up to d; throws ResourceCapExceeded.
  void ensure_degree(int d);
  const std::vector<Word>& standard_words(int d);
  /// Dimension of degree d of the quotient algebra (over Q).
  std::size_t dimension(int d);
  /// Integer when every pivot up to degree d was a unit.
  Ring ring(int d);

  SparseVector normal_form(const Word& w);
  /// Normal form of a homogeneous element of degree d.
  SparseVector normal_form(const FreeAlgebraElement& e);
  /// Writes a homogeneous element with zero normal form as a combination of
  /// left * relation * right. Throws std::logic_error if the normal form is not zero.
  std::vector<CertificateTerm> certify(const FreeAlgebraElement& e);

 private:
  struct Node {
    // ref >= 0: earlier node of the same degree; ref < 0: generator -1-ref
    std::vector<std::pair<long, Rational>> refs;
  };
  struct Pivot {
    SparseVector row;  // ascending columns; the lead is the last entry
    long node = 0;
  };
  struct Degree {
    std::vector<Word> standard;
    std::vector<long> pivot_of_column;  // -1 when the column is standard
    std::vector<Pivot> pivots;
    std::vector<Node> nodes;
    std::vector<SparseVector> column_nf;  // normal form of column s*b
    std::vector<std::size_t> standard_of_column;
    bool integral = true;
  };

  void build_degree(int d);
  const SparseVector& word_nf(const Word& w);
  SparseVector combine_columns(int d, const SparseVector& prefix_nf, Letter last);
  void reduce_to_zero(int d, SparseVector z, std::map<long, Rational>& node_coeffs) const;
  std::map<long, Rational> expand_nodes(int d, std::map<long, Rational> node_coeffs) const;

  std::size_t letters_;
  std::vector<FreeAlgebraElement> relations_;
  std::vector<std::vector<std::tuple<Letter, Letter, Integer>>> rel_terms_;
  bool integral_start_;
  IdealLimits limits_;
  std::vector<Degree> degrees_;
  std::unordered_map<Word, SparseVector, WordHash> nf_memo_;
  std::recursive_mutex mutex_;
};

enum class MembershipScope {
  /// Every relation of the spec.
  all,
  /// Only relations whose letters all occur in the element. Membership in
  /// this smaller ideal implies membership in the full one.
  support,
};

enum class RingMode { integer_with_fallback, rational };

struct MembershipOptions {
  MembershipScope scope = MembershipScope::all;
  RingMode ring = RingMode::integer_with_fallback;
  IdealLimits limits;
  bool want_certificate = true;
};

enum class MembershipStatus { member, not_member, undecided };
std::string to_string(MembershipStatus status);

struct MembershipResult {
  MembershipStatus status = MembershipStatus::undecided;
  Ring ring = Ring::integer;
  std::optional<MembershipCertificate> certificate;
  /// Degrees whose piece is not in the ideal.
  std::vector<int> failing_degrees;
  std::string detail;
};

/// Decides, degree by degree, whether e lies in the ideal of the spec.
/// Throws std::invalid_argument for letters outside the alphabet.
MembershipResult ideal_membership(const FreeAlgebraElement& e, const QuadraticAlgebraSpec& spec,
                                  const MembershipOptions& options = {});

/// Re-expands the certificate (no linear algebra) and compares with e.
bool verify_certificate(const MembershipCertificate& certificate, const FreeAlgebraElement& e,
                        const QuadraticAlgebraSpec& spec);

/// Shared engine for a spec (or its restriction to a set of letters); engines
/// are cached per relation set.
std::shared_ptr<QuadraticIdeal> ideal_engine(const QuadraticAlgebraSpec& spec, RingMode mode = RingMode::integer_with_fallback,
                                             IdealLimits limits = {});

}  // namespace kdunkl
