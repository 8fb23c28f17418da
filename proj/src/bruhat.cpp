#include "kdunkl/bruhat.hpp"

#include "kdunkl/dunkl.hpp"
#include "kdunkl/quadspec.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace kdunkl {

namespace {

void check_rank(const Permutation& w, int n) {
  if (!w.fits_rank(n))
    throw std::invalid_argument("permutation " + w.to_string() + " is not in S_" + std::to_string(n));
}

Permutation at_rank(const Permutation& w, int n) {
  check_rank(w, n);
  return w.trimmed().embed(n);
}

// Letter a of E_n is the generator [i j], i < j.
std::vector<std::pair<int, int>> en_pairs(int n) {
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs[en_letter(i, j, n)] = {i, j};
  return pairs;
}

int rank_of_alphabet(std::size_t letters, const GroupAlgebraVector& v) {
  const int n = v.rank();
  if (static_cast<std::size_t>(n * (n - 1) / 2) < letters)
    throw std::invalid_argument("element uses more generators than E_" + std::to_string(n) + " has");
  return n;
}

void apply_cover(GroupAlgebraVector& out, int i, int j, const Permutation& w, const Integer& c) {
  const Permutation u = w.right_transposition(i, j);
  if (is_cover(w, u)) out.add(u, c);
}

GroupAlgebraVector apply_letter(const std::pair<int, int>& pair, const GroupAlgebraVector& v) {
  GroupAlgebraVector out(v.rank());
  for (const auto& [w, c] : v.coefficients()) apply_cover(out, pair.first, pair.second, w, c);
  return out;
}

PermutationCombination within_rank(const PermutationCombination& combination, int n) {
  PermutationCombination result;
  for (const auto& [w, c] : combination)
    if (w.fits_rank(n)) result.emplace(w.trimmed(), c);
  return result;
}

struct OperatorCache {
  std::mutex mutex;
  std::map<int, std::vector<LinearOperator>> kappa;
  std::map<int, std::vector<LinearOperator>> theta;
  std::map<int, bool> kappa_commute;
};

OperatorCache& operator_cache() {
  static OperatorCache cache;
  return cache;
}

bool operators_commute(const std::vector<LinearOperator>& ops) {
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b)
      if (ops[a].after(ops[b]) != ops[b].after(ops[a])) return false;
  return true;
}

// Operators of kappa_1..kappa_n (or theta_1..theta_n) at rank n.
const std::vector<LinearOperator>& dunkl_operators(int n, DunklFlavor flavor) {
  auto& cache = operator_cache();
  std::lock_guard lock(cache.mutex);
  auto& table = flavor == DunklFlavor::kappa ? cache.kappa : cache.theta;
  auto it = table.find(n);
  if (it == table.end()) {
    std::vector<LinearOperator> ops;
    for (int p = 1; p <= n; ++p)
      ops.push_back(operator_of(flavor == DunklFlavor::kappa ? kappa(p, n).element : theta(p, n).element, n));
    it = table.emplace(n, std::move(ops)).first;
  }
  if (flavor == DunklFlavor::kappa) {
    auto [flag, inserted] = cache.kappa_commute.try_emplace(n, false);
    if (inserted) flag->second = operators_commute(it->second);
    if (!flag->second)
      throw std::runtime_error("kappa operators do not commute at rank " + std::to_string(n) +
                               "; polynomial evaluation is not well defined");
  }
  return it->second;
}

GroupAlgebraVector evaluate(const SparsePolynomial& f, const Permutation& v, int n, DunklFlavor flavor) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (f.nvars() > n - 1)
    throw std::invalid_argument("polynomial uses x_" + std::to_string(f.nvars()) + ", beyond rank " + std::to_string(n));
  const GroupAlgebraVector start = GroupAlgebraVector::basis(v, n);
  if (f.is_zero()) return GroupAlgebraVector(n);
  const auto& ops = dunkl_operators(n, flavor);
  GroupAlgebraVector result(n);
  for (const auto& [exps, c] : f.terms()) {
    GroupAlgebraVector x = start;
    for (std::size_t var = exps.size(); var-- > 0;)
      for (int k = 0; k < exps[var] && !x.is_zero(); ++k) x = ops[var].apply(x);
    x *= c;
    result += x;
  }
  return result;
}

CheckRecord record(const std::string& check, nlohmann::json params, bool ok, std::string detail, const Stopwatch& clock) {
  CheckRecord r;
  r.check = check;
  r.params = std::move(params);
  r.status = ok ? "verified" : "failed";
  r.detail = std::move(detail);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::string combination_string(const PermutationCombination& combination, int n) {
  GroupAlgebraVector v(n);
  for (const auto& [w, c] : combination)
    if (w.fits_rank(n)) v.add(w, c);
  return v.to_string();
}

std::optional<PermutationCombination> polynomial_monk(int p, const Permutation& w, int n) {
  const SparsePolynomial f = SparsePolynomial::variable(p) * grothendieck(w);
  for (int N = n + 1; N <= n + 3; ++N) {
    try {
      return expand_in_basis(f, Basis::grothendieck, N).coefficients;
    } catch (const RankTooSmall&) {
    }
  }
  return std::nullopt;
}

}  // namespace

bool LengthOrder::operator()(const Permutation& a, const Permutation& b) const {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.word() < b.word();
}

GroupAlgebraVector GroupAlgebraVector::basis(const Permutation& w, int n) {
  GroupAlgebraVector v(n);
  v.add(w, 1);
  return v;
}

Integer GroupAlgebraVector::coefficient(const Permutation& w) const {
  if (!w.fits_rank(n_)) return 0;
  const auto it = coefficients_.find(w.trimmed().embed(n_));
  return it == coefficients_.end() ? Integer(0) : it->second;
}

void GroupAlgebraVector::add(const Permutation& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(at_rank(w, n_), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coefficients_.erase(it);
  }
}

GroupAlgebraVector& GroupAlgebraVector::operator+=(const GroupAlgebraVector& other) {
  if (other.n_ != n_) throw std::invalid_argument("group algebra vectors of different rank");
  for (const auto& [w, c] : other.coefficients_) add(w, c);
  return *this;
}

GroupAlgebraVector& GroupAlgebraVector::operator*=(const Integer& scalar) {
  if (scalar == 0) coefficients_.clear();
  for (auto& [w, c] : coefficients_) c *= scalar;
  return *this;
}

PermutationCombination GroupAlgebraVector::combination() const {
  PermutationCombination result;
  for (const auto& [w, c] : coefficients_) result.emplace(w.trimmed(), c);
  return result;
}

std::string GroupAlgebraVector::to_string() const {
  if (coefficients_.empty()) return "0";
  std::map<Permutation, Integer, LengthOrder> sorted(coefficients_.begin(), coefficients_.end());
  std::string out;
  for (const auto& [w, c] : sorted) {
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    const Integer magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += w.to_string();
  }
  return out;
}

GroupAlgebraVector act_generator(int i, int j, const Permutation& w, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("generator [" + std::to_string(i) + "," + std::to_string(j) + "] is not in E_" +
                                std::to_string(n));
  GroupAlgebraVector out(n);
  apply_cover(out, std::min(i, j), std::max(i, j), at_rank(w, n), i < j ? Integer(1) : Integer(-1));
  return out;
}

GroupAlgebraVector act_element(const FreeAlgebraElement& e, const GroupAlgebraVector& v) {
  const int n = v.rank();
  const auto pairs = en_pairs(n);
  GroupAlgebraVector result(n);
  for (const auto& [word, c] : e.terms()) {
    GroupAlgebraVector x = v;
    for (Letter a : word) {
      if (a >= pairs.size()) rank_of_alphabet(static_cast<std::size_t>(a) + 1, v);
      x = apply_letter(pairs[a], x);
      if (x.is_zero()) break;
    }
    x *= c;
    result += x;
  }
  return result;
}

LinearOperator::LinearOperator(int n) : n_(n) {
  for (const auto& w : all_permutations(n)) images_.emplace(w, GroupAlgebraVector(n));
}

LinearOperator LinearOperator::identity(int n) {
  LinearOperator op(n);
  for (auto& [w, image] : op.images_) image = GroupAlgebraVector::basis(w, n);
  return op;
}

const GroupAlgebraVector& LinearOperator::image(const Permutation& w) const { return images_.at(at_rank(w, n_)); }

void LinearOperator::set_image(const Permutation& w, GroupAlgebraVector v) {
  if (v.rank() != n_) throw std::invalid_argument("image of the wrong rank");
  images_.at(at_rank(w, n_)) = std::move(v);
}

GroupAlgebraVector LinearOperator::apply(const GroupAlgebraVector& v) const {
  if (v.rank() != n_) throw std::invalid_argument("operator and vector of different rank");
  GroupAlgebraVector result(n_);
  for (const auto& [w, c] : v.coefficients()) {
    GroupAlgebraVector piece = images_.at(w);
    piece *= c;
    result += piece;
  }
  return result;
}

LinearOperator LinearOperator::after(const LinearOperator& first) const {
  if (first.n_ != n_) throw std::invalid_argument("operators of different rank");
  LinearOperator result(n_);
  for (const auto& [w, image] : first.images_) result.images_.at(w) = apply(image);
  return result;
}

LinearOperator LinearOperator::operator+(const LinearOperator& other) const {
  if (other.n_ != n_) throw std::invalid_argument("operators of different rank");
  LinearOperator result = *this;
  for (const auto& [w, image] : other.images_) result.images_.at(w) += image;
  return result;
}

LinearOperator operator_of(const FreeAlgebraElement& e, int n) {
  LinearOperator op(n);
  for (const auto& w : all_permutations(n)) op.set_image(w, act_element(e, GroupAlgebraVector::basis(w, n)));
  return op;
}

GroupAlgebraVector eval_at_kappa(const SparsePolynomial& f, const Permutation& v, int n) {
  return evaluate(f, v, n, DunklFlavor::kappa);
}

GroupAlgebraVector eval_at_theta(const SparsePolynomial& f, const Permutation& v, int n) {
  return evaluate(f, v, n, DunklFlavor::theta);
}

GroupAlgebraVector structure_constants_dunkl(const Permutation& u, const Permutation& v, int n) {
  check_rank(u, n);
  return eval_at_kappa(grothendieck(u), v, n);
}

GroupAlgebraVector structure_constants_cohomology(const Permutation& u, const Permutation& v, int n) {
  check_rank(u, n);
  const int length = u.length() + v.length();
  GroupAlgebraVector result(n);
  const GroupAlgebraVector full = eval_at_theta(schubert(u), v, n);
  for (const auto& [w, c] : full.coefficients())
    if (w.length() == length) result.add(w, c);
  return result;
}

nlohmann::json structure_constants_json(const Permutation& u, const Permutation& v, int n, const std::string& method,
                                        const GroupAlgebraVector& constants) {
  std::map<Permutation, Integer, LengthOrder> sorted(constants.coefficients().begin(), constants.coefficients().end());
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [w, c] : sorted) {
    nlohmann::json value = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
    list.push_back({{"w", w.to_string()}, {"c", value}});
  }
  return {{"u", u.to_string()}, {"v", v.to_string()}, {"n", n}, {"method", method}, {"constants", list}};
}

Report verify_rep(int n, const RepOptions& options) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  Report report;
  const auto spec = spec_En(n);
  const auto perms = all_permutations(n);

  {
    Stopwatch clock;
    std::size_t failures = 0;
    std::string first;
    for (const auto& relation : spec.relations) {
      for (const auto& w : perms) {
        if (!act_element(relation, GroupAlgebraVector::basis(w, n)).is_zero()) {
          if (failures++ == 0) first = spec.format(relation) + " on " + w.to_string();
        }
      }
    }
    report.add(record("rep-relations", {{"n", n}}, failures == 0,
                      failures == 0 ? std::to_string(spec.relations.size()) + " relations annihilate all " +
                                          std::to_string(perms.size()) + " permutations"
                                    : "relation acts nontrivially: " + first,
                      clock));
  }

  {
    Stopwatch clock;
    std::vector<FreeAlgebraElement> reversed;
    for (const auto& relation : spec.relations) reversed.push_back(relation.reversed());
    const auto a = dedupe_relations(spec.relations), b = dedupe_relations(reversed);
    const bool same = a.size() == b.size() && std::is_permutation(a.begin(), a.end(), b.begin(), b.end());
    report.add(record("rep-reversal", {{"n", n}}, same,
                      same ? "word reversal maps the relation set to itself" : "reversal changes the relation set",
                      clock));
  }

  std::vector<LinearOperator> kappas, thetas;
  for (int p = 1; p <= n; ++p) {
    kappas.push_back(operator_of(kappa(p, n).element, n));
    thetas.push_back(operator_of(theta(p, n).element, n));
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      Stopwatch clock;
      const auto& a = kappas[static_cast<std::size_t>(p - 1)];
      const auto& b = kappas[static_cast<std::size_t>(q - 1)];
      report.add(record("rep-commute", {{"n", n}, {"p", p}, {"q", q}}, a.after(b) == b.after(a),
                        "kappa operators commute on Z<S_n>", clock));
    }
  }

  for (int p = 1; p <= n; ++p) {
    Stopwatch clock;
    std::string mismatch;
    for (const auto& w : perms) {
      const auto action = kappas[static_cast<std::size_t>(p - 1)].image(w).combination();
      const auto chains = within_rank(kmonk_chains(p, w), n);
      if (action != chains) {
        mismatch = "kappa_" + std::to_string(p) + " " + w.to_string() + ": action " +
                   kappas[static_cast<std::size_t>(p - 1)].image(w).to_string() + ", chains " +
                   combination_string(chains, n);
        break;
      }
      if (options.polynomial_oracle) {
        const auto expansion = polynomial_monk(p, w, n);
        if (!expansion || within_rank(*expansion, n) != chains) {
          mismatch = "x_" + std::to_string(p) + " G_" + w.to_string() + " disagrees with the chain formula";
          break;
        }
      }
    }
    report.add(record("rep-kmonk", {{"n", n}, {"p", p}, {"polynomial_oracle", options.polynomial_oracle}},
                      mismatch.empty(), mismatch.empty() ? "kappa action matches the K-theoretic Monk rule" : mismatch,
                      clock));
  }

  for (int p = 1; p <= n; ++p) {
    Stopwatch clock;
    std::string mismatch;
    for (const auto& w : perms) {
      const auto action = thetas[static_cast<std::size_t>(p - 1)].image(w).combination();
      if (action != within_rank(monk_multiply(p, w), n)) {
        mismatch = "theta_" + std::to_string(p) + " " + w.to_string() + ": action " +
                   thetas[static_cast<std::size_t>(p - 1)].image(w).to_string();
        break;
      }
    }
    report.add(record("rep-monk", {{"n", n}, {"p", p}}, mismatch.empty(),
                      mismatch.empty() ? "theta action matches Monk's rule" : mismatch, clock));
  }
  return report;
}

}  // namespace kdunkl
