#pragma once

#include "kdunkl/cone.hpp"
#include "kdunkl/ideal.hpp"
#include "kdunkl/perm.hpp"
#include "kdunkl/poly.hpp"
#include "kdunkl/quadspec.hpp"
#include "kdunkl/report.hpp"

#include <optional>
#include <set>
#include <vector>

namespace kdunkl {

enum class DunklFlavor { theta, kappa };

/// A Dunkl element of E_n together with its index.
struct DunklElement {
  FreeAlgebraElement element;
  int p = 0;
  int n = 0;
  DunklFlavor flavor = DunklFlavor::kappa;
};

/// pi(p, A) = [i_1 p][i_2 p] ... [i_k p] over A in circular order around p,
/// with [i p] = -[p i] for i > p.
FreeAlgebraElement pi_element(int p, const std::set<int>& A, int n);

/// kappa_p = -sum over nonempty A in [n] \ {p} of pi(p, A).
DunklElement kappa(int p, int n);
/// 1 - (1+[p-1,p]) ... (1+[1,p]) (1+[n,p]) ... (1+[p+1,p]), expanded.
FreeAlgebraElement kappa_product_form(int p, int n);
/// theta_p = -sum_{i<p} [ip] + sum_{k>p} [pk].
DunklElement theta(int p, int n);

/// Sum of [pi(p,A), pi(q,B)] over nonempty A, B with p not in A, q not in B,
/// X = (A u B) \ {p,q} and |A| + |B| = d. Requires p != q, nonempty X disjoint
/// from {p,q} and |X| <= d <= 2|X| + 2.
FreeAlgebraElement restricted_commutator(int p, int q, const std::set<int>& X, int d, int n);

/// Where the auxiliary algebra E_X sits: the circular orders of A and B are
/// taken around p and q inside [n].
struct EXContext {
  int p = 0;
  int q = 0;
  int n = 0;
};
/// p = max X + 1, q = max X + 2, n = q.
EXContext default_ex_context(const std::set<int>& X);

/// The same sum written in E_X: pi(A) = i_1 ... i_s and pi'(B) = j_1' ... j_t',
/// with q read as -* and p' read as +*.
FreeAlgebraElement sigma_sum_EX(const std::set<int>& X, int d, const EXContext& context);
FreeAlgebraElement sigma_sum_EX(const std::set<int>& X, int d);

/// i -> [ip], i' -> [iq], * -> [pq].
FreeAlgebraElement map_EX_to_En(const FreeAlgebraElement& e, const std::set<int>& X, const EXContext& context);

/// *i_1 i_1' ... i_s i_s'* (primed_first = false) or *i_1' i_1 ... i_s' i_s*.
FreeAlgebraElement starred_product(const std::vector<int>& indices, const std::set<int>& X, bool primed_first);

/// f(z_1, z_2, ...) in the free algebra; each monomial is multiplied in
/// increasing variable order.
FreeAlgebraElement evaluate_polynomial(const SparsePolynomial& f, const std::vector<FreeAlgebraElement>& values);

enum class CommutationMode { full, restricted };

struct VerifyOptions {
  MembershipOptions membership;
  /// Also re-expand every certificate.
  bool check_certificates = true;
  /// Relations of E_X used for the sums in E_X.
  EXRelations ex_relations = EXRelations::all;
};

/// Full mode: [kappa_p, kappa_q] in the ideal for every p < q. Restricted
/// mode: every restricted commutator (support relations only) and the
/// matching sum in E_X, plus a check that the pieces add up to the commutator.
Report verify_commutation(int n, CommutationMode mode, const VerifyOptions& options = {});
Report verify_sum_zero(int n, const VerifyOptions& options = {});
/// Sum in E_X for one (X, d) and context; all d in range when d is empty.
Report verify_lemma1(const std::set<int>& X, std::optional<int> d, const VerifyOptions& options = {});
/// Both starred products for every sequence of s distinct indices from {1..s}.
Report verify_starstar(int s, const VerifyOptions& options = {});
/// e_k(kappa_1, ..., kappa_n) with ascending factor order, plus a comparison
/// with the descending order modulo the ideal. Exploratory.
Report symmetric_probe(int k, int n, const VerifyOptions& options = {});

enum class Theory { k_theory, cohomology };

/// Cone membership of (-1)^{d - l(w)} times each degree-d piece of G_w(kappa)
/// (K-theory) or of S_w(theta) (cohomology), for w in S_n or one given w.
Report check_nonneg(int n, std::optional<Permutation> w, Theory theory, const ConeOptions& options = {});

}  // namespace kdunkl
