#include "kdunkl/dunkl.hpp"

#include "kdunkl/schubert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kdunkl {

namespace {

void check_index(int p, int n, const char* what) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  if (p < 1 || p > n) throw std::invalid_argument(std::string(what) + " must lie in 1.." + std::to_string(n));
}

std::vector<std::set<int>> nonempty_subsets(const std::vector<int>& ground) {
  std::vector<std::set<int>> result;
  const std::size_t m = ground.size();
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::set<int> s;
    for (std::size_t k = 0; k < m; ++k)
      if ((mask >> k) & 1ul) s.insert(ground[k]);
    result.push_back(std::move(s));
  }
  return result;
}

// Pairs (A, B) with A in X + {q}, B in X + {p}, both nonempty, covering X,
// with |A| + |B| = d.
std::vector<std::pair<std::set<int>, std::set<int>>> admissible_pairs(int p, int q, const std::set<int>& X, int d) {
  std::vector<int> a_ground(X.begin(), X.end()), b_ground(X.begin(), X.end());
  a_ground.push_back(q);
  b_ground.push_back(p);
  std::vector<std::pair<std::set<int>, std::set<int>>> pairs;
  for (const auto& A : nonempty_subsets(a_ground)) {
    for (const auto& B : nonempty_subsets(b_ground)) {
      if (static_cast<int>(A.size() + B.size()) != d) continue;
      if (!std::all_of(X.begin(), X.end(), [&](int x) { return A.count(x) || B.count(x); })) continue;
      pairs.emplace_back(A, B);
    }
  }
  return pairs;
}

void check_restricted(int p, int q, const std::set<int>& X, int d, int n) {
  if (p == q) throw std::invalid_argument("p and q must differ");
  if (p < 1 || q < 1 || p > n || q > n) throw std::invalid_argument("p and q must lie in 1..n");
  if (X.empty()) throw std::invalid_argument("X must be nonempty");
  for (int x : X)
    if (x < 1 || x > n || x == p || x == q) throw std::invalid_argument("X must be a subset of [n] \\ {p, q}");
  const int size = static_cast<int>(X.size());
  if (d < size || d > 2 * size + 2)
    throw std::invalid_argument("degree d=" + std::to_string(d) + " outside [" + std::to_string(size) + ", " +
                                std::to_string(2 * size + 2) + "]");
}

std::vector<FreeAlgebraElement> kappas(int n) {
  std::vector<FreeAlgebraElement> result;
  for (int p = 1; p <= n; ++p) result.push_back(kappa(p, n).element);
  return result;
}

nlohmann::json set_json(const std::set<int>& s) { return nlohmann::json(std::vector<int>(s.begin(), s.end())); }

CheckRecord membership_record(const std::string& check, nlohmann::json params, const FreeAlgebraElement& e,
                              const QuadraticAlgebraSpec& spec, const VerifyOptions& options,
                              MembershipScope scope = MembershipScope::all) {
  Stopwatch clock;
  CheckRecord record;
  record.check = check;
  record.params = std::move(params);
  MembershipOptions membership = options.membership;
  membership.scope = scope;
  const MembershipResult result = ideal_membership(e, spec, membership);
  record.status = to_string(result.status);
  record.ring = to_string(result.ring);
  record.detail = result.detail;
  if (result.certificate) {
    record.certificate_size = result.certificate->terms.size();
    if (options.check_certificates && !verify_certificate(*result.certificate, e, spec)) {
      record.status = "failed";
      record.detail = "certificate does not re-expand to the element";
    }
  }
  if (result.status == MembershipStatus::not_member) {
    std::string degrees;
    for (int d : result.failing_degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
    record.detail = "degrees not in the ideal: " + degrees;
  }
  if (scope == MembershipScope::support && result.status == MembershipStatus::member)
    record.detail = record.detail.empty() ? "support relations" : record.detail;
  record.elapsed_ms = clock.elapsed_ms();
  return record;
}

}  // namespace

FreeAlgebraElement pi_element(int p, const std::set<int>& A, int n) {
  check_index(p, n, "p");
  const std::vector<int> elements(A.begin(), A.end());
  const auto order = circular_sort(elements, p, n);
  FreeAlgebraElement result(1);
  for (int i : order.elements) result = result * en_generator(i, p, n);
  return result;
}

DunklElement kappa(int p, int n) {
  check_index(p, n, "p");
  std::vector<int> others;
  for (int i = 1; i <= n; ++i)
    if (i != p) others.push_back(i);
  DunklElement k{FreeAlgebraElement(), p, n, DunklFlavor::kappa};
  for (const auto& A : nonempty_subsets(others)) k.element -= pi_element(p, A, n);
  return k;
}

FreeAlgebraElement kappa_product_form(int p, int n) {
  check_index(p, n, "p");
  FreeAlgebraElement product(1);
  const FreeAlgebraElement one(1);
  for (int i = p - 1; i >= 1; --i) product = product * (one + en_generator(i, p, n));
  for (int i = n; i > p; --i) product = product * (one + en_generator(i, p, n));
  return one - product;
}

DunklElement theta(int p, int n) {
  check_index(p, n, "p");
  DunklElement t{FreeAlgebraElement(), p, n, DunklFlavor::theta};
  for (int i = 1; i < p; ++i) t.element -= en_generator(i, p, n);
  for (int k = p + 1; k <= n; ++k) t.element += en_generator(p, k, n);
  return t;
}

FreeAlgebraElement restricted_commutator(int p, int q, const std::set<int>& X, int d, int n) {
  check_restricted(p, q, X, d, n);
  FreeAlgebraElement sum;
  for (const auto& [A, B] : admissible_pairs(p, q, X, d)) sum += commutator(pi_element(p, A, n), pi_element(q, B, n));
  return sum;
}

EXContext default_ex_context(const std::set<int>& X) {
  if (X.empty()) throw std::invalid_argument("X must be nonempty");
  const int top = *X.rbegin();
  return EXContext{top + 1, top + 2, top + 2};
}

FreeAlgebraElement sigma_sum_EX(const std::set<int>& X, int d, const EXContext& context) {
  check_restricted(context.p, context.q, X, d, context.n);
  const EXLetters letters = ex_letters(std::vector<int>(X.begin(), X.end()), context.p, context.q);
  FreeAlgebraElement sum;
  for (const auto& [A, B] : admissible_pairs(context.p, context.q, X, d)) {
    FreeAlgebraElement left(1), right(1);
    const std::vector<int> a(A.begin(), A.end()), b(B.begin(), B.end());
    for (int i : circular_sort(a, context.p, context.n).elements)
      left = left * (i == context.q ? FreeAlgebraElement::letter(letters.star(), -1)
                                    : FreeAlgebraElement::letter(letters.plain(i)));
    for (int j : circular_sort(b, context.q, context.n).elements)
      right = right * (j == context.p ? FreeAlgebraElement::letter(letters.star())
                                      : FreeAlgebraElement::letter(letters.primed(j)));
    sum += commutator(left, right);
  }
  return sum;
}

FreeAlgebraElement sigma_sum_EX(const std::set<int>& X, int d) { return sigma_sum_EX(X, d, default_ex_context(X)); }

FreeAlgebraElement map_EX_to_En(const FreeAlgebraElement& e, const std::set<int>& X, const EXContext& context) {
  const std::vector<int> xs(X.begin(), X.end());
  const std::size_t m = xs.size();
  return e.substitute([&](Letter a) {
    if (a < m) return en_generator(xs[a], context.p, context.n);
    if (a < 2 * m) return en_generator(xs[a - m], context.q, context.n);
    if (a == 2 * m) return en_generator(context.p, context.q, context.n);
    throw std::invalid_argument("letter outside E_X");
  });
}

FreeAlgebraElement starred_product(const std::vector<int>& indices, const std::set<int>& X, bool primed_first) {
  const EXLetters letters = ex_letters(std::vector<int>(X.begin(), X.end()));
  Word w{letters.star()};
  for (int i : indices) {
    if (primed_first) {
      w.push_back(letters.primed(i));
      w.push_back(letters.plain(i));
    } else {
      w.push_back(letters.plain(i));
      w.push_back(letters.primed(i));
    }
  }
  w.push_back(letters.star());
  return FreeAlgebraElement::word(w);
}

FreeAlgebraElement evaluate_polynomial(const SparsePolynomial& f, const std::vector<FreeAlgebraElement>& values) {
  if (f.nvars() > static_cast<int>(values.size()))
    throw std::invalid_argument("polynomial uses more variables than values supplied");
  std::map<std::pair<int, int>, FreeAlgebraElement> powers;
  auto power = [&](int var, int e) -> const FreeAlgebraElement& {
    auto it = powers.find({var, e});
    if (it != powers.end()) return it->second;
    FreeAlgebraElement value(1);
    for (int k = 0; k < e; ++k) value = value * values[static_cast<std::size_t>(var)];
    return powers.emplace(std::make_pair(var, e), std::move(value)).first->second;
  };
  FreeAlgebraElement result;
  for (const auto& [exps, c] : f.terms()) {
    FreeAlgebraElement term(c);
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] > 0) term = term * power(static_cast<int>(v), exps[v]);
    result += term;
  }
  return result;
}

Report verify_commutation(int n, CommutationMode mode, const VerifyOptions& options) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  Report report;
  const auto spec = spec_En(n);
  const auto k = kappas(n);
  if (mode == CommutationMode::full) {
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q)
        report.add(membership_record("commute", {{"n", n}, {"p", p}, {"q", q}, {"mode", "full"}},
                                     commutator(k[static_cast<std::size_t>(p - 1)], k[static_cast<std::size_t>(q - 1)]),
                                     spec, options));
    return report;
  }

  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      if (p == q) continue;
      std::vector<int> rest;
      for (int i = 1; i <= n; ++i)
        if (i != p && i != q) rest.push_back(i);
      FreeAlgebraElement pieces =
          commutator(pi_element(p, {q}, n), pi_element(q, {p}, n));  // the X = {} part
      const EXContext context{p, q, n};
      for (const auto& X : nonempty_subsets(rest)) {
        const int size = static_cast<int>(X.size());
        const auto ex = spec_EX(std::vector<int>(X.begin(), X.end()), p, q, options.ex_relations);
        for (int d = size; d <= 2 * size + 2; ++d) {
          const nlohmann::json params = {{"n", n}, {"p", p}, {"q", q}, {"X", set_json(X)}, {"d", d}};
          const auto restricted = restricted_commutator(p, q, X, d, n);
          pieces += restricted;
          auto record = membership_record("restricted-commutator", params, restricted, spec, options,
                                          MembershipScope::support);
          const auto sigma = sigma_sum_EX(X, d, context);
          if (map_EX_to_En(sigma, X, context) != restricted) {
            record.status = "failed";
            record.detail = "E_X sum does not map to the restricted commutator";
          }
          report.add(std::move(record));
          report.add(membership_record("lemma1", params, sigma, ex, options));
        }
      }
      CheckRecord decomposition;
      decomposition.check = "decomposition";
      decomposition.params = {{"n", n}, {"p", p}, {"q", q}};
      decomposition.status =
          pieces == commutator(k[static_cast<std::size_t>(p - 1)], k[static_cast<std::size_t>(q - 1)]) ? "verified"
                                                                                                       : "failed";
      decomposition.detail = "restricted commutators add up to [kappa_p, kappa_q]";
      report.add(std::move(decomposition));
    }
  }
  return report;
}

Report verify_sum_zero(int n, const VerifyOptions& options) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  FreeAlgebraElement sum;
  for (const auto& k : kappas(n)) sum += k;
  Report report;
  report.add(membership_record("sum-zero", {{"n", n}}, sum, spec_En(n), options));
  return report;
}

Report verify_lemma1(const std::set<int>& X, std::optional<int> d, const VerifyOptions& options) {
  const EXContext context = default_ex_context(X);
  const auto spec = spec_EX(std::vector<int>(X.begin(), X.end()), context.p, context.q, options.ex_relations);
  const int size = static_cast<int>(X.size());
  const int lo = d ? *d : size, hi = d ? *d : 2 * size + 2;
  Report report;
  for (int k = lo; k <= hi; ++k)
    report.add(membership_record("lemma1",
                                 {{"X", set_json(X)},
                                  {"d", k},
                                  {"p", context.p},
                                  {"q", context.q},
                                  {"n", context.n},
                                  {"relations", options.ex_relations == EXRelations::all ? "all" : "mixed"}},
                                 sigma_sum_EX(X, k, context), spec, options));
  return report;
}

Report verify_starstar(int s, const VerifyOptions& options) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  std::set<int> X;
  std::vector<int> indices;
  for (int i = 1; i <= s; ++i) {
    X.insert(i);
    indices.push_back(i);
  }
  const auto spec = spec_EX(indices, 0, 0, options.ex_relations);
  Report report;
  do {
    for (bool primed_first : {false, true}) {
      report.add(membership_record("starstar",
                                   {{"s", s}, {"indices", indices}, {"form", primed_first ? "primed-first" : "plain-first"}},
                                   starred_product(indices, X, primed_first), spec, options));
    }
  } while (std::next_permutation(indices.begin(), indices.end()));
  return report;
}

Report symmetric_probe(int k, int n, const VerifyOptions& options) {
  if (n < 2 || k < 1 || k > n) throw std::invalid_argument("symmetric_probe needs 1 <= k <= n, n >= 2");
  const auto ks = kappas(n);
  std::vector<int> ground;
  for (int i = 1; i <= n; ++i) ground.push_back(i);
  FreeAlgebraElement ascending, descending;
  for (const auto& subset : nonempty_subsets(ground)) {
    if (static_cast<int>(subset.size()) != k) continue;
    FreeAlgebraElement up(1), down(1);
    for (int i : subset) up = up * ks[static_cast<std::size_t>(i - 1)];
    for (auto it = subset.rbegin(); it != subset.rend(); ++it) down = down * ks[static_cast<std::size_t>(*it - 1)];
    ascending += up;
    descending += down;
  }
  const auto spec = spec_En(n);
  Report report;
  report.add(membership_record("symmetric", {{"k", k}, {"n", n}, {"order", "ascending"}}, ascending, spec, options));
  auto order = membership_record("symmetric-order", {{"k", k}, {"n", n}}, ascending - descending, spec, options);
  order.detail = order.status == "member" ? "ascending and descending orders agree modulo the ideal"
                                          : "order-dependent modulo the ideal (" + order.detail + ")";
  report.add(std::move(order));
  return report;
}

Report check_nonneg(int n, std::optional<Permutation> w, Theory theory, const ConeOptions& options) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  std::vector<Permutation> targets;
  if (w) {
    if (!w->fits_rank(n)) throw std::invalid_argument("permutation " + w->to_string() + " is not in S_" + std::to_string(n));
    targets.push_back(w->trimmed().embed(std::max(n, w->trimmed().rank())).trimmed(n));
  } else {
    targets = all_permutations(n);
  }
  std::vector<FreeAlgebraElement> values;
  for (int p = 1; p < n; ++p)
    values.push_back(theory == Theory::k_theory ? kappa(p, n).element : theta(p, n).element);
  const auto spec = spec_En(n);
  Report report;
  for (const auto& target : targets) {
    Stopwatch clock;
    const int length = target.length();
    const auto f = theory == Theory::k_theory ? grothendieck(target) : schubert(target);
    const auto e = evaluate_polynomial(f, values);
    const auto sign = [&](int d) { return (d - length) % 2 == 0 ? 1 : -1; };
    const ConeResult cone = cone_membership(e, spec, sign, options);
    CheckRecord record;
    record.check = "nonneg";
    record.params = {{"n", n}, {"w", target.to_string()}, {"theory", theory == Theory::k_theory ? "k" : "cohomology"}};
    record.status = to_string(cone.status);
    bool integral = true;
    for (const auto& degree : cone.degrees) {
      record.certificate_size += degree.weights.size() + degree.ideal_part.terms.size();
      integral = integral && degree.integral;
      if (!verify_cone_certificate(degree, e, spec)) {
        record.status = "failed";
        record.detail = "cone certificate does not re-expand in degree " + std::to_string(degree.degree);
      }
    }
    if (cone.status == ConeStatus::certified) {
      record.ring = integral ? "integer" : "rational";
      if (record.detail.empty())
        record.detail = integral ? "integer cone certificate" : "rational cone certificate (no integer one found)";
    } else {
      record.detail = cone.detail;
    }
    record.elapsed_ms = clock.elapsed_ms();
    report.add(std::move(record));
  }
  return report;
}

}  // namespace kdunkl
