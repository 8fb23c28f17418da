#pragma once

#include "kdunkl/bigint.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace kdunkl {

/// Index of a generator in an algebra's alphabet.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Shorter words first, then lexicographic by letter index.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull ^ w.size();
    for (Letter a : w) h = (h ^ a) * 1099511628211ull;
    return h;
  }
};

Word concat(const Word& a, const Word& b);

/// Integer linear combination of words: an element of the free associative
/// algebra over a finite alphabet. Multiplication is concatenation.
class FreeAlgebraElement {
 public:
  using Terms = std::map<Word, Integer, WordOrder>;

  FreeAlgebraElement() = default;
  explicit FreeAlgebraElement(const Integer& scalar);

  static FreeAlgebraElement word(Word w, const Integer& coeff = 1);
  static FreeAlgebraElement letter(Letter a, const Integer& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Word& w) const;
  void add_term(const Word& w, const Integer& coeff);

  /// Longest word length (-1 for zero).
  int degree() const;
  int lowest_degree() const;
  bool is_homogeneous() const;
  /// Terms whose words have exactly d letters.
  FreeAlgebraElement graded_component(int d) const;
  /// Distinct word lengths present, ascending.
  std::vector<int> degrees() const;
  /// Letters occurring in some word.
  std::vector<Letter> support() const;

  /// Reverses every word (the anti-automorphism fixing each letter).
  FreeAlgebraElement reversed() const;
  /// Algebra homomorphism sending each letter to an element.
  FreeAlgebraElement substitute(const std::function<FreeAlgebraElement(Letter)>& image) const;

  FreeAlgebraElement& operator+=(const FreeAlgebraElement& other);
  FreeAlgebraElement& operator-=(const FreeAlgebraElement& other);
  FreeAlgebraElement& operator*=(const Integer& scalar);
  friend FreeAlgebraElement operator+(FreeAlgebraElement a, const FreeAlgebraElement& b) { return a += b; }
  friend FreeAlgebraElement operator-(FreeAlgebraElement a, const FreeAlgebraElement& b) { return a -= b; }
  friend FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
  friend FreeAlgebraElement operator*(FreeAlgebraElement a, const Integer& s) { return a *= s; }
  FreeAlgebraElement operator-() const;
  bool operator==(const FreeAlgebraElement&) const = default;

 private:
  Terms terms_;
};

/// ab - ba.
FreeAlgebraElement commutator(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
FreeAlgebraElement graded_component(const FreeAlgebraElement& e, int d);
/// a_0 a_1 ... a_k.
FreeAlgebraElement product(std::span<const FreeAlgebraElement> factors);

/// Both sides of the inclusion-exclusion identity for x_k = u_k + v_k:
///   w_0 x_1 w_1 ... x_m w_m
///     = w_0 v_1 w_1 ... v_m w_m
///       + sum over nonempty I of (-1)^{|I|+1} (u_k at k in I, x_k elsewhere).
/// `interleave` holds the m+1 blocks w_0..w_m around the factors.
struct Lemma2Sides {
  FreeAlgebraElement lhs;
  FreeAlgebraElement rhs;
};

Lemma2Sides lemma2_expand(std::span<const std::pair<FreeAlgebraElement, FreeAlgebraElement>> factors,
                          std::span<const FreeAlgebraElement> interleave);

}  // namespace kdunkl
