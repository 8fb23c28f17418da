#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kdunkl {

/// A permutation of {1..m} in one-line notation.
///
/// Positions and values are 1-based. Right multiplication by a transposition
/// acts on positions: `v.right_transposition(i, j)` is v with the entries at
/// positions i and j swapped. Values past the rank are fixed points, so a
/// permutation of S_m is also an element of S_infinity.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int m);
  static Permutation longest(int m);
  /// Inverse of lehmer_code(); the rank is the smallest that fits, or m if larger.
  static Permutation from_code(std::span<const int> code, int m = 0);
  /// Accepts "312" (digits, m <= 9) or "3,1,2,10,...".
  static Permutation parse(std::string_view text);

  int rank() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int operator()(int position) const {
    return position <= rank() ? word_[static_cast<std::size_t>(position - 1)] : position;
  }

  int length() const;
  std::vector<int> lehmer_code() const;
  std::vector<int> descents() const;
  bool is_dominant() const;

  Permutation right_transposition(int i, int j) const;
  Permutation embed(int m) const;
  /// Drops trailing fixed points, keeping at least `min_rank` entries.
  Permutation trimmed(int min_rank = 1) const;
  /// True when every point above m is fixed, i.e. the permutation lives in S_m.
  bool fits_rank(int m) const;
  Permutation inverse() const;
  /// Composition (u * v)(i) = u(v(i)).
  Permutation operator*(const Permutation& other) const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

/// Returns (i, j) with w = v t_{ij} and l(w) = l(v) + 1, or nothing.
std::optional<std::pair<int, int>> is_cover(const Permutation& v, const Permutation& w);

/// All of S_n, ordered by length and then lexicographically.
std::vector<Permutation> all_permutations(int n);

/// Elements of a set listed in circular order around a pivot p: a strictly
/// decreasing run of values below p followed by a strictly decreasing run of
/// values above p.
struct CircularSequence {
  std::vector<int> elements;
  int pivot = 0;
  int n = 0;
};

CircularSequence circular_sort(std::span<const int> elements, int pivot, int n);
bool is_circular_order(std::span<const int> sequence, int pivot);

}  // namespace kdunkl
