#pragma once

#include "kdunkl/freealg.hpp"
#include "kdunkl/perm.hpp"
#include "kdunkl/poly.hpp"
#include "kdunkl/report.hpp"
#include "kdunkl/schubert.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace kdunkl {

/// Element of the group algebra Z<S_n>. Keys are permutations of rank n; no
/// zero coefficients are stored.
class GroupAlgebraVector {
 public:
  explicit GroupAlgebraVector(int n = 1) : n_(n) {}
  static GroupAlgebraVector basis(const Permutation& w, int n);

  int rank() const { return n_; }
  const std::map<Permutation, Integer>& coefficients() const { return coefficients_; }
  Integer coefficient(const Permutation& w) const;
  bool is_zero() const { return coefficients_.empty(); }

  void add(const Permutation& w, const Integer& c);
  GroupAlgebraVector& operator+=(const GroupAlgebraVector& other);
  GroupAlgebraVector& operator*=(const Integer& scalar);
  bool operator==(const GroupAlgebraVector&) const = default;

  /// Same data with minimal-rank keys, comparable with PermutationCombination.
  PermutationCombination combination() const;
  /// "-213+132+231", ordered by length, then lexicographically.
  std::string to_string() const;

 private:
  int n_;
  std::map<Permutation, Integer> coefficients_;
};

/// Orders permutations by length, then lexicographically.
struct LengthOrder {
  bool operator()(const Permutation& a, const Permutation& b) const;
};

/// [ij] w = w t_ij when this is a Bruhat cover of w, 0 otherwise. Reversed
/// indices act as -[ji].
GroupAlgebraVector act_generator(int i, int j, const Permutation& w, int n);

/// Action of an element of E_n; in each word the leftmost generator acts
/// first. Use FreeAlgebraElement::reversed() for the opposite convention.
GroupAlgebraVector act_element(const FreeAlgebraElement& e, const GroupAlgebraVector& v);

/// Matrix of an element of E_n on Z<S_n>, one image per permutation.
class LinearOperator {
 public:
  explicit LinearOperator(int n);
  static LinearOperator identity(int n);

  int rank() const { return n_; }
  const GroupAlgebraVector& image(const Permutation& w) const;
  void set_image(const Permutation& w, GroupAlgebraVector v);

  GroupAlgebraVector apply(const GroupAlgebraVector& v) const;
  /// (*this) after `first`: v -> this(first(v)).
  LinearOperator after(const LinearOperator& first) const;
  LinearOperator operator+(const LinearOperator& other) const;
  bool operator==(const LinearOperator&) const = default;

 private:
  int n_;
  std::map<Permutation, GroupAlgebraVector> images_;
};

LinearOperator operator_of(const FreeAlgebraElement& e, int n);

/// f(kappa_1, ..., kappa_{n-1}) v through the Bruhat operators. The kappa
/// operators are checked to commute once per rank before first use.
GroupAlgebraVector eval_at_kappa(const SparsePolynomial& f, const Permutation& v, int n);
/// f(theta_1, ..., theta_{n-1}) v.
GroupAlgebraVector eval_at_theta(const SparsePolynomial& f, const Permutation& v, int n);

/// Coefficients of w in G_u(kappa) v.
GroupAlgebraVector structure_constants_dunkl(const Permutation& u, const Permutation& v, int n);
/// Coefficients of w in S_u(theta) v, restricted to l(w) = l(u) + l(v).
GroupAlgebraVector structure_constants_cohomology(const Permutation& u, const Permutation& v, int n);

/// {u, v, n, method, constants: [{w, c}]}, constants ordered by LengthOrder.
nlohmann::json structure_constants_json(const Permutation& u, const Permutation& v, int n, const std::string& method,
                                        const GroupAlgebraVector& constants);

struct RepOptions {
  /// Also compare with the Grothendieck expansion of x_p G_w.
  bool polynomial_oracle = true;
};

/// Relations act by zero, the reversal map preserves the relation set, the
/// kappa operators commute, and kappa_p / theta_p act by the K-theoretic and
/// ordinary Monk rules.
Report verify_rep(int n, const RepOptions& options = {});

}  // namespace kdunkl
