#pragma once

#include "kdunkl/freealg.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kdunkl {

/// A graded algebra given by generators and homogeneous quadratic relations.
///
/// Letters are written in brackets: "[1,2]" for a generator of E_n and
/// "[3]", "[3']", "[*]" for the letters of E_X. Aliases let a bracket stand for
/// a signed letter, e.g. "[2,1]" parses as -[1,2].
struct QuadraticAlgebraSpec {
  std::string name;
  std::vector<std::string> alphabet;
  std::vector<FreeAlgebraElement> relations;
  std::map<std::string, std::pair<Letter, int>> aliases;

  std::size_t size() const { return alphabet.size(); }
  /// Signed letter denoted by a bracket symbol (alphabet entry or alias).
  std::pair<Letter, int> lookup(std::string_view symbol) const;

  /// "-[1,3][1,2]+[1,2][2,3]", "2*[1,2]", "0"; terms in length-then-lex order.
  std::string format(const FreeAlgebraElement& e) const;
  std::string format_word(const Word& w) const;
  FreeAlgebraElement parse(std::string_view text) const;

  /// {"terms": [{"coeff": "decimal", "word": [symbol, ...]}]}
  nlohmann::json to_json(const FreeAlgebraElement& e) const;
  FreeAlgebraElement from_json(const nlohmann::json& j) const;

  /// Throws unless every word uses letters of this alphabet.
  void check_alphabet(const FreeAlgebraElement& e) const;
};

/// Divides by the content and makes the first word's coefficient positive.
FreeAlgebraElement normalize_relation(const FreeAlgebraElement& r);

/// Normalizes, drops zeros and removes duplicates, keeping first occurrences.
std::vector<FreeAlgebraElement> dedupe_relations(const std::vector<FreeAlgebraElement>& relations);

/// Letter index of [ij], 1 <= i < j <= n, in lexicographic pair order.
Letter en_letter(int i, int j, int n);
/// [ij] for i != j, with [ji] = -[ij].
FreeAlgebraElement en_generator(int i, int j, int n);

/// The quadratic algebra E_n: generators [ij] (i < j), relations [ij]^2,
/// the normalized three-term relations [ij][jk] + [jk][ki] + [ki][ij] for
/// every triple, and [ij][kl] - [kl][ij] for disjoint pairs.
QuadraticAlgebraSpec spec_En(int n);

/// Letters of the auxiliary algebra E_X: X in increasing order, then the
/// primed copies, then *.
struct EXLetters {
  std::vector<int> X;
  int p = 0;
  int q = 0;

  Letter plain(int i) const;
  Letter primed(int i) const;
  Letter star() const { return static_cast<Letter>(2 * X.size()); }
};

/// Which relations of E_X to impose. `mixed_only` drops the squares and keeps
/// ii' - *i + i'*, i'i - i* + *i' and ij' - j'i, to probe whether those suffice.
enum class EXRelations { all, mixed_only };

/// E_X with relations x^2 for every letter, ii' - *i + i'*, i'i - i* + *i',
/// and ij' - j'i for i != j. The symbols "p'" and "q" are accepted as +* and
/// -*; p and q default to the two integers after max X.
QuadraticAlgebraSpec spec_EX(const std::vector<int>& X, int p = 0, int q = 0, EXRelations which = EXRelations::all);
EXLetters ex_letters(const std::vector<int>& X, int p = 0, int q = 0);

}  // namespace kdunkl
