#include "kdunkl/perm.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using kdunkl::Permutation;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

}  // namespace

TEST(Permutation, RightTranspositionSwapsPositions) {
  EXPECT_EQ(P("213").right_transposition(1, 3), P("312"));
  EXPECT_EQ(P("123").right_transposition(1, 2), P("213"));
  EXPECT_EQ(P("321").right_transposition(2, 3), P("312"));
  EXPECT_THROW(P("123").right_transposition(0, 2), std::out_of_range);
  EXPECT_THROW(P("123").right_transposition(2, 4), std::out_of_range);
  EXPECT_THROW(P("123").right_transposition(2, 2), std::invalid_argument);
}

TEST(Permutation, Length) {
  EXPECT_EQ(P("123").length(), 0);
  EXPECT_EQ(P("321").length(), 3);
  EXPECT_EQ(P("312").length(), 2);
}

TEST(Permutation, Covers) {
  EXPECT_EQ(kdunkl::is_cover(P("213"), P("312")), std::make_pair(1, 3));
  EXPECT_FALSE(kdunkl::is_cover(P("123"), P("321")));
  EXPECT_EQ(kdunkl::is_cover(P("123"), P("213")), std::make_pair(1, 2));
  EXPECT_FALSE(kdunkl::is_cover(P("213"), P("123")));
}

TEST(Permutation, LehmerCode) {
  EXPECT_EQ(P("312").lehmer_code(), (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(P("123").lehmer_code(), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(P("321").lehmer_code(), (std::vector<int>{2, 1, 0}));
  for (const auto& w : kdunkl::all_permutations(5)) {
    const auto code = w.lehmer_code();
    EXPECT_EQ(Permutation::from_code(code, 5), w);
    int sum = 0;
    for (int c : code) sum += c;
    EXPECT_EQ(sum, w.length());
  }
}

TEST(Permutation, ParseAndFormat) {
  EXPECT_EQ(P("3,1,2").to_string(), "312");
  const auto big = Permutation::identity(10).right_transposition(1, 10);
  EXPECT_EQ(big.to_string(), "10,2,3,4,5,6,7,8,9,1");
  EXPECT_EQ(Permutation::parse(big.to_string()), big);
  EXPECT_THROW(P("113"), std::invalid_argument);
  EXPECT_THROW(P("14"), std::invalid_argument);
  EXPECT_THROW(P(""), std::invalid_argument);
  EXPECT_THROW(P("1,x"), std::invalid_argument);
}

TEST(Permutation, EmbedKeepsLengthAndFixesNewPoints) {
  for (const auto& w : kdunkl::all_permutations(4)) {
    const auto e = w.embed(6);
    EXPECT_EQ(e.length(), w.length());
    EXPECT_EQ(e(5), 5);
    EXPECT_EQ(e(6), 6);
    EXPECT_EQ(e.trimmed().embed(4), w.trimmed().embed(4));
    EXPECT_TRUE(e.fits_rank(4));
  }
  EXPECT_FALSE(P("1243").fits_rank(3));
}

TEST(Permutation, TranspositionChangesLengthByOddAmount) {
  for (const auto& v : kdunkl::all_permutations(5))
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) EXPECT_EQ(std::abs(v.right_transposition(i, j).length() - v.length()) % 2, 1);
}

TEST(Permutation, CoverCharacterization) {
  const auto perms = kdunkl::all_permutations(4);
  for (const auto& v : perms) {
    for (const auto& w : perms) {
      const auto u = w * v.inverse();
      int moved = 0;
      for (int k = 1; k <= 4; ++k) moved += u(k) != k;
      const bool expected = w.length() == v.length() + 1 && moved == 2;
      EXPECT_EQ(kdunkl::is_cover(v, w).has_value(), expected) << v.to_string() << " " << w.to_string();
    }
  }
}

TEST(Permutation, MahonianDistribution) {
  for (int n = 1; n <= 6; ++n) {
    // coefficients of prod_{i<n} (1 + q + ... + q^i)
    std::vector<long> poly{1};
    for (int i = 1; i < n; ++i) {
      std::vector<long> next(poly.size() + static_cast<std::size_t>(i), 0);
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (int b = 0; b <= i; ++b) next[a + static_cast<std::size_t>(b)] += poly[a];
      poly = next;
    }
    const auto perms = kdunkl::all_permutations(n);
    std::set<Permutation> distinct(perms.begin(), perms.end());
    EXPECT_EQ(distinct.size(), perms.size());
    std::vector<long> histogram(poly.size(), 0);
    for (const auto& w : perms) ++histogram[static_cast<std::size_t>(w.length())];
    EXPECT_EQ(histogram, poly) << "n=" << n;
  }
}

TEST(CircularOrder, SortExamples) {
  const std::vector<int> a{1, 3}, b{2, 3}, c{1, 2, 4};
  EXPECT_EQ(kdunkl::circular_sort(a, 2, 3).elements, (std::vector<int>{1, 3}));
  EXPECT_EQ(kdunkl::circular_sort(b, 1, 3).elements, (std::vector<int>{3, 2}));
  EXPECT_EQ(kdunkl::circular_sort(c, 3, 4).elements, (std::vector<int>{2, 1, 4}));
}

TEST(CircularOrder, Errors) {
  const std::vector<int> with_pivot{1, 2}, out_of_range{1, 5}, empty;
  EXPECT_THROW(kdunkl::circular_sort(with_pivot, 2, 3), std::invalid_argument);
  EXPECT_THROW(kdunkl::circular_sort(out_of_range, 2, 4), std::invalid_argument);
  EXPECT_THROW(kdunkl::circular_sort(empty, 2, 4), std::invalid_argument);
}

TEST(CircularOrder, SortSatisfiesPredicateForAllSubsets) {
  for (int n = 2; n <= 7; ++n) {
    for (int p = 1; p <= n; ++p) {
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (mask & (1u << (p - 1))) continue;
        std::vector<int> set;
        for (int i = 1; i <= n; ++i)
          if (mask & (1u << (i - 1))) set.push_back(i);
        const auto sorted = kdunkl::circular_sort(set, p, n).elements;
        EXPECT_TRUE(kdunkl::is_circular_order(sorted, p));
        EXPECT_EQ(std::multiset<int>(sorted.begin(), sorted.end()), std::multiset<int>(set.begin(), set.end()));
      }
    }
  }
  const std::vector<int> bad{1, 2};
  EXPECT_FALSE(kdunkl::is_circular_order(bad, 3));
}
