#pragma once

#include "kdunkl/bigint.hpp"
#include "kdunkl/perm.hpp"
#include "kdunkl/poly.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>

namespace kdunkl {

enum class Basis { schubert, grothendieck };

std::string to_string(Basis basis);

/// Signed integer combination of permutations of S_infinity. Keys are kept in
/// minimal rank (no trailing fixed points) so that embeddings compare equal.
using PermutationCombination = std::map<Permutation, Integer>;

/// Coefficients of a polynomial in the Schubert or Grothendieck basis.
struct BasisExpansion {
  Basis basis = Basis::schubert;
  PermutationCombination coefficients;

  bool operator==(const BasisExpansion&) const = default;
};

/// Thrown by expand_in_basis when the permutations of S_N do not span the input.
class RankTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SparsePolynomial schubert(const Permutation& w);
SparsePolynomial grothendieck(const Permutation& w);

/// Expands f over {basis_w : w in S_N}. For the Grothendieck basis this peels
/// off the lowest homogeneous component, expands it in Schubert polynomials by
/// an exact linear solve, subtracts the matching Grothendieck polynomials, and
/// repeats until the residual vanishes.
BasisExpansion expand_in_basis(const SparsePolynomial& f, Basis basis, int N);

/// Rebuilds sum c_w basis_w.
SparsePolynomial reconstruct(const BasisExpansion& expansion);

/// x_p S_v = -sum_{i<p} S_{v t_ip} + sum_{i>p} S_{v t_pi} over length-raising covers.
PermutationCombination monk_multiply(int p, const Permutation& v);

/// x_p G_v = sum over chains v -> v t_{i_1 p} -> ... of (-1)^{s+1} G_w, where
/// the labels below p come first in decreasing order, then the labels above p
/// in decreasing order, every step is a Bruhat cover and s counts labels above p.
PermutationCombination kmonk_chains(int p, const Permutation& v);

/// G_u G_v expanded in Grothendieck polynomials. The ambient rank grows from
/// max(rank u, rank v) until the expansion succeeds.
BasisExpansion structure_constants_poly(const Permutation& u, const Permutation& v);

/// S_u S_v expanded in Schubert polynomials.
BasisExpansion schubert_product(const Permutation& u, const Permutation& v);

/// Keeps the terms living in S_n, re-embedded at rank n.
PermutationCombination restrict_to_rank(const PermutationCombination& combination, int n);

/// Optional on-disk memo for generated polynomials; pass nullopt to disable.
void set_polynomial_cache_dir(std::optional<std::filesystem::path> dir);
/// Drops the in-memory memo (the disk cache, if any, is left alone).
void clear_polynomial_memo();

}  // namespace kdunkl
