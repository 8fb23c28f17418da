#include "kdunkl/schubert.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>

using kdunkl::Basis;
using kdunkl::Permutation;
using kdunkl::PermutationCombination;
using kdunkl::SparsePolynomial;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }
SparsePolynomial F(const char* text) { return SparsePolynomial::parse(text); }

PermutationCombination combo(std::initializer_list<std::pair<const char*, int>> entries) {
  PermutationCombination c;
  for (const auto& [w, k] : entries) c[P(w).trimmed()] = k;
  return c;
}

// Generates from w_0 along every maximal chain of ascents, as the recursion is
// usually stated; used to confirm that the cheaper generator agrees.
SparsePolynomial from_top(Basis basis, const Permutation& w, int m) {
  const Permutation e = w.embed(m);
  if (e == Permutation::longest(m)) {
    kdunkl::Exponents exps;
    for (int i = m - 1; i >= 1; --i) exps.push_back(i);
    return SparsePolynomial::monomial(exps);
  }
  for (int i = 1; i < m; ++i) {
    if (e(i) < e(i + 1)) {
      const auto parent = from_top(basis, e.right_transposition(i, i + 1), m);
      return basis == Basis::schubert ? kdunkl::divided_difference(parent, i)
                                      : kdunkl::isobaric_divided_difference(parent, i);
    }
  }
  return {};
}

void all_paths_agree(Basis basis, const Permutation& w, int m, const SparsePolynomial& expected) {
  if (w == Permutation::longest(m)) return;
  for (int i = 1; i < m; ++i) {
    if (w(i) < w(i + 1)) {
      const auto parent = from_top(basis, w.right_transposition(i, i + 1), m);
      const auto value = basis == Basis::schubert ? kdunkl::divided_difference(parent, i)
                                                  : kdunkl::isobaric_divided_difference(parent, i);
      EXPECT_EQ(value, expected) << w.to_string() << " via s_" << i;
    }
  }
}

}  // namespace

TEST(Schubert, Examples) {
  EXPECT_EQ(kdunkl::schubert(P("321")), F("x1^2*x2"));
  EXPECT_EQ(kdunkl::schubert(P("312")), F("x1^2"));
  EXPECT_EQ(kdunkl::schubert(P("132")), F("x1+x2"));
  EXPECT_EQ(kdunkl::schubert(P("123")), F("1"));
}

TEST(Grothendieck, Examples) {
  EXPECT_EQ(kdunkl::grothendieck(P("321")), F("x1^2*x2"));
  EXPECT_EQ(kdunkl::grothendieck(P("132")), F("x1+x2-x1*x2"));
  EXPECT_EQ(kdunkl::grothendieck(P("213")), F("x1"));
  EXPECT_EQ(kdunkl::grothendieck(P("123")), F("1"));
}

TEST(Schubert, PathIndependenceAndTopRecursion) {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& w : kdunkl::all_permutations(m)) {
      for (Basis basis : {Basis::schubert, Basis::grothendieck}) {
        const auto value = basis == Basis::schubert ? kdunkl::schubert(w) : kdunkl::grothendieck(w);
        EXPECT_EQ(from_top(basis, w, m), value) << w.to_string();
        all_paths_agree(basis, w, m, value);
      }
    }
  }
}

TEST(Grothendieck, LowestComponentIsSchubertAndEmbeddingIsStable) {
  for (const auto& w : kdunkl::all_permutations(4)) {
    const auto g = kdunkl::grothendieck(w);
    EXPECT_EQ(g.homogeneous_component(w.length()), kdunkl::schubert(w));
    EXPECT_EQ(g.lowest_degree(), w.length());
    EXPECT_EQ(kdunkl::grothendieck(w.embed(5)), g);
    EXPECT_TRUE(kdunkl::schubert(w).is_homogeneous());
  }
}

TEST(BasisExpansion, Examples) {
  EXPECT_EQ(kdunkl::expand_in_basis(F("x1^2"), Basis::grothendieck, 3).coefficients, combo({{"312", 1}}));
  EXPECT_EQ(kdunkl::expand_in_basis(F("x1+x2-x1*x2"), Basis::grothendieck, 3).coefficients, combo({{"132", 1}}));
  EXPECT_TRUE(kdunkl::expand_in_basis(SparsePolynomial(), Basis::schubert, 2).coefficients.empty());
  EXPECT_TRUE(kdunkl::expand_in_basis(SparsePolynomial(), Basis::grothendieck, 5).coefficients.empty());
  EXPECT_EQ(kdunkl::expand_in_basis(F("x2"), Basis::grothendieck, 3).coefficients,
            combo({{"213", -1}, {"132", 1}, {"231", 1}}));
  EXPECT_THROW(kdunkl::expand_in_basis(F("x3"), Basis::schubert, 3), kdunkl::RankTooSmall);
  EXPECT_THROW(kdunkl::expand_in_basis(F("x1^3"), Basis::schubert, 3), kdunkl::RankTooSmall);
}

TEST(BasisExpansion, ReconstructsEveryProductInS4) {
  const auto perms = kdunkl::all_permutations(3);
  for (const auto& u : perms) {
    for (const auto& v : perms) {
      for (Basis basis : {Basis::schubert, Basis::grothendieck}) {
        const auto f = basis == Basis::schubert ? kdunkl::schubert(u) * kdunkl::schubert(v)
                                                : kdunkl::grothendieck(u) * kdunkl::grothendieck(v);
        const auto expansion = kdunkl::expand_in_basis(f, basis, 5);
        EXPECT_EQ(kdunkl::reconstruct(expansion), f);
      }
    }
  }
}

TEST(Monk, Examples) {
  EXPECT_EQ(kdunkl::monk_multiply(2, P("123")), combo({{"213", -1}, {"132", 1}}));
  EXPECT_EQ(kdunkl::monk_multiply(1, P("123")), combo({{"213", 1}}));
  EXPECT_EQ(kdunkl::monk_multiply(1, P("213")), combo({{"312", 1}}));
}

TEST(KMonk, Examples) {
  EXPECT_EQ(kdunkl::kmonk_chains(2, P("123")), combo({{"213", -1}, {"132", 1}, {"231", 1}}));
  EXPECT_EQ(kdunkl::kmonk_chains(1, P("123")), combo({{"213", 1}}));
  EXPECT_EQ(kdunkl::kmonk_chains(1, P("213")), combo({{"312", 1}}));
}

TEST(KMonk, MatchesPolynomialOracles) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& v : kdunkl::all_permutations(n)) {
      for (int p = 1; p <= n; ++p) {
        const auto x = SparsePolynomial::variable(p);
        const int N = std::max(n, p) + 1;
        const auto k_oracle = kdunkl::expand_in_basis(x * kdunkl::grothendieck(v), Basis::grothendieck, N);
        const auto c_oracle = kdunkl::expand_in_basis(x * kdunkl::schubert(v), Basis::schubert, N);
        const auto chains = kdunkl::kmonk_chains(p, v);
        const auto monk = kdunkl::monk_multiply(p, v);
        EXPECT_EQ(chains, k_oracle.coefficients) << "p=" << p << " v=" << v.to_string();
        EXPECT_EQ(monk, c_oracle.coefficients) << "p=" << p << " v=" << v.to_string();
        PermutationCombination cover_part;
        for (const auto& [w, c] : chains)
          if (w.length() == v.length() + 1) cover_part[w] = c;
        EXPECT_EQ(cover_part, monk);
      }
    }
  }
}

TEST(StructureConstants, Examples) {
  EXPECT_EQ(kdunkl::structure_constants_poly(P("213"), P("213")).coefficients, combo({{"312", 1}}));
  EXPECT_EQ(kdunkl::structure_constants_poly(P("213"), P("132")).coefficients,
            combo({{"312", 1}, {"231", 1}, {"321", -1}}));
  for (const auto& v : kdunkl::all_permutations(3))
    EXPECT_EQ(kdunkl::structure_constants_poly(P("123"), v).coefficients, (PermutationCombination{{v.trimmed(), 1}}));
}

TEST(StructureConstants, LengthBoundAndCohomologySlice) {
  const auto perms = kdunkl::all_permutations(3);
  for (const auto& u : perms) {
    for (const auto& v : perms) {
      const auto k = kdunkl::structure_constants_poly(u, v);
      EXPECT_EQ(kdunkl::reconstruct(k), kdunkl::grothendieck(u) * kdunkl::grothendieck(v));
      PermutationCombination slice;
      for (const auto& [w, c] : k.coefficients) {
        EXPECT_GE(w.length(), u.length() + v.length());
        if (w.length() == u.length() + v.length()) slice[w] = c;
      }
      EXPECT_EQ(slice, kdunkl::schubert_product(u, v).coefficients) << u.to_string() << "*" << v.to_string();
    }
  }
}

TEST(RestrictToRank, KeepsFittingTerms) {
  const auto restricted = kdunkl::restrict_to_rank(combo({{"213", 2}, {"1243", 3}}), 3);
  EXPECT_EQ(restricted, (PermutationCombination{{P("213"), 2}}));
}

TEST(PolynomialCache, DiskCacheIsTransparentAndSurvivesCorruption) {
  const auto dir = std::filesystem::temp_directory_path() / "kdunkl_cache_test";
  std::filesystem::remove_all(dir);
  kdunkl::set_polynomial_cache_dir(dir);
  kdunkl::clear_polynomial_memo();
  const auto first = kdunkl::grothendieck(P("1432"));
  kdunkl::clear_polynomial_memo();
  EXPECT_EQ(kdunkl::grothendieck(P("1432")), first);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream(entry.path()) << "{ not json";
  }
  kdunkl::clear_polynomial_memo();
  EXPECT_EQ(kdunkl::grothendieck(P("1432")), first);
  kdunkl::set_polynomial_cache_dir(std::nullopt);
  std::filesystem::remove_all(dir);
}
