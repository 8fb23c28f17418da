#pragma once

#include "kdunkl/bigint.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kdunkl {

/// Exponent vector of a monomial in x_1, x_2, ...; stored without trailing
/// zeros so that x_1 has the same key whatever the ambient variable count.
using Exponents = std::vector<int>;

int total_degree(const Exponents& exps);

/// Graded order: lower total degree first, then x_1 > x_2 > ... lexicographically.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in x_1, x_2, ... with arbitrary-precision integer coefficients.
class SparsePolynomial {
 public:
  using Terms = std::map<Exponents, Integer, MonomialOrder>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(const Integer& constant);

  static SparsePolynomial variable(int i);
  static SparsePolynomial monomial(Exponents exps, const Integer& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Exponents& exps) const;
  void add_term(Exponents exps, const Integer& coeff);

  /// Largest variable index occurring (0 for constants).
  int nvars() const;
  int degree() const;
  int lowest_degree() const;
  SparsePolynomial homogeneous_component(int d) const;
  bool is_homogeneous() const;

  /// s_i f: exchange x_i and x_{i+1}.
  SparsePolynomial swap_variables(int i) const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Integer& scalar);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Integer& s) { return a *= s; }
  SparsePolynomial operator-() const;
  bool operator==(const SparsePolynomial&) const = default;

  /// "x1+x2-x1*x2", "3*x1^2*x3", "0".
  std::string to_string() const;
  static SparsePolynomial parse(std::string_view text);
  /// [{"coeff": "decimal", "exps": [..]}]
  nlohmann::json to_json() const;
  static SparsePolynomial from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

/// (f - s_i f) / (x_i - x_{i+1}); exact for every f.
SparsePolynomial divided_difference(const SparsePolynomial& f, int i);
/// d_i((1 - x_{i+1}) f).
SparsePolynomial isobaric_divided_difference(const SparsePolynomial& f, int i);

}  // namespace kdunkl
