#include "kdunkl/schubert.hpp"

#include "kdunkl/lp.hpp"

#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace kdunkl {

std::string to_string(Basis basis) { return basis == Basis::schubert ? "schubert" : "grothendieck"; }

namespace {

constexpr int kCacheSchemaVersion = 1;

struct PolynomialMemo {
  std::shared_mutex mutex;
  std::unordered_map<Permutation, SparsePolynomial, PermutationHash> schubert;
  std::unordered_map<Permutation, SparsePolynomial, PermutationHash> grothendieck;
  std::optional<std::filesystem::path> cache_dir;

  auto& table(Basis kind) { return kind == Basis::schubert ? schubert : grothendieck; }
};

PolynomialMemo& memo() {
  static PolynomialMemo instance;
  return instance;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, Basis kind, const Permutation& w) {
  std::string name = to_string(kind) + "_";
  for (std::size_t i = 0; i < w.word().size(); ++i) {
    if (i > 0) name += '-';
    name += std::to_string(w.word()[i]);
  }
  return dir / (name + "_" + std::to_string(w.rank()) + ".json");
}

std::optional<SparsePolynomial> read_cache(const std::filesystem::path& dir, Basis kind, const Permutation& w) {
  std::ifstream in(cache_file(dir, kind, w));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion || j.at("kind").get<std::string>() != to_string(kind) ||
        j.at("perm").get<std::vector<int>>() != w.word() || j.at("rank").get<int>() != w.rank())
      return std::nullopt;
    return SparsePolynomial::from_json(j.at("poly"));
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entry: recompute
  }
}

void write_cache(const std::filesystem::path& dir, Basis kind, const Permutation& w, const SparsePolynomial& f) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto target = cache_file(dir, kind, w);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    const nlohmann::json j = {{"schema_version", kCacheSchemaVersion},
                              {"kind", to_string(kind)},
                              {"perm", w.word()},
                              {"rank", w.rank()},
                              {"poly", f.to_json()}};
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
}

SparsePolynomial generate(Basis kind, const Permutation& w);

SparsePolynomial lookup(Basis kind, const Permutation& w_any) {
  const Permutation w = w_any.trimmed();
  auto& m = memo();
  std::optional<std::filesystem::path> dir;
  {
    std::shared_lock lock(m.mutex);
    const auto& table = m.table(kind);
    if (auto it = table.find(w); it != table.end()) return it->second;
    dir = m.cache_dir;
  }
  std::optional<SparsePolynomial> value;
  if (dir) value = read_cache(*dir, kind, w);
  if (!value) {
    value = generate(kind, w);
    if (dir) write_cache(*dir, kind, w, *value);
  }
  std::unique_lock lock(m.mutex);
  return m.table(kind).try_emplace(w, std::move(*value)).first->second;
}

// Dominant permutations (weakly decreasing code) give the monomial x^code;
// this includes the longest element x_1^{m-1} ... x_{m-1}. Otherwise climb
// one step along an ascent towards a dominant permutation and apply the
// (isobaric) divided difference.
SparsePolynomial generate(Basis kind, const Permutation& w) {
  const auto code = w.lehmer_code();
  for (std::size_t i = 0; i + 1 < code.size(); ++i) {
    if (code[i] < code[i + 1]) {
      const int pos = static_cast<int>(i) + 1;
      const Permutation up = w.right_transposition(pos, pos + 1);
      const SparsePolynomial parent = lookup(kind, up);
      return kind == Basis::schubert ? divided_difference(parent, pos) : isobaric_divided_difference(parent, pos);
    }
  }
  return SparsePolynomial::monomial(Exponents(code.begin(), code.end()));
}

SparsePolynomial basis_polynomial(Basis kind, const Permutation& w) {
  return kind == Basis::schubert ? schubert(w) : grothendieck(w);
}

void enumerate_codes(int vars, int degree, int N, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(prefix.size());
  if (i == vars) {
    if (degree == 0) out.push_back(prefix);
    return;
  }
  const int cap = std::min(degree, N - (i + 1));
  for (int c = cap; c >= 0; --c) {
    prefix.push_back(c);
    enumerate_codes(vars, degree - c, N, prefix, out);
    prefix.pop_back();
  }
}

// Expands a homogeneous polynomial in x_1..x_vars over the Schubert
// polynomials S_w, w in S_N of length `degree` with descents in 1..vars.
PermutationCombination solve_schubert_component(const SparsePolynomial& h, int vars, int degree, int N) {
  PermutationCombination result;
  if (h.is_zero()) return result;
  if (vars == 0) {
    result[Permutation::identity(1)] = h.coefficient({});
    return result;
  }
  std::vector<std::vector<int>> codes;
  std::vector<int> prefix;
  enumerate_codes(vars, degree, N, prefix, codes);
  if (codes.empty()) throw RankTooSmall("no permutation of S_" + std::to_string(N) + " has the needed length");

  std::vector<Permutation> candidates;
  std::vector<SparsePolynomial> columns;
  std::map<Exponents, std::size_t, MonomialOrder> row_of;
  for (const auto& [exps, c] : h.terms()) row_of.try_emplace(exps, row_of.size());
  for (const auto& code : codes) {
    candidates.push_back(Permutation::from_code(code).trimmed());
    columns.push_back(schubert(candidates.back()));
    for (const auto& [exps, c] : columns.back().terms()) row_of.try_emplace(exps, row_of.size());
  }
  RationalMatrix a(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
  std::vector<Rational> b(row_of.size(), Rational(0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [exps, c] : columns[j].terms()) a[row_of.at(exps)][j] = Rational(c);
  for (const auto& [exps, c] : h.terms()) b[row_of.at(exps)] = Rational(c);

  const auto x = solve_linear_system(std::move(a), std::move(b));
  if (!x) throw RankTooSmall("residual is not spanned by S_" + std::to_string(N));
  for (std::size_t j = 0; j < x->size(); ++j) {
    if ((*x)[j] == 0) continue;
    if (!is_integral((*x)[j])) throw std::logic_error("non-integral Schubert coefficient");
    result[candidates[j]] = (*x)[j].get_num();
  }
  return result;
}

void accumulate(PermutationCombination& into, const Permutation& w, const Integer& c) {
  auto [it, inserted] = into.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

BasisExpansion adaptive_expansion(const SparsePolynomial& f, Basis basis, int start_rank) {
  const int cap = std::max(f.degree(), 0) + start_rank + 1;
  for (int N = std::max(start_rank, f.nvars() + 1); N <= cap; ++N) {
    try {
      return expand_in_basis(f, basis, N);
    } catch (const RankTooSmall&) {
    }
  }
  throw std::runtime_error("expansion did not terminate below rank " + std::to_string(cap));
}

}  // namespace

SparsePolynomial schubert(const Permutation& w) { return lookup(Basis::schubert, w); }
SparsePolynomial grothendieck(const Permutation& w) { return lookup(Basis::grothendieck, w); }

BasisExpansion expand_in_basis(const SparsePolynomial& f, Basis basis, int N) {
  BasisExpansion result{basis, {}};
  if (f.is_zero()) return result;
  const int vars = f.nvars();
  if (vars > N - 1) throw RankTooSmall("polynomial uses x_" + std::to_string(vars) + ", beyond S_" + std::to_string(N));

  if (basis == Basis::schubert) {
    std::set<int> degrees;
    for (const auto& [exps, c] : f.terms()) degrees.insert(total_degree(exps));
    for (int d : degrees)
      for (const auto& [w, c] : solve_schubert_component(f.homogeneous_component(d), vars, d, N))
        accumulate(result.coefficients, w, c);
    return result;
  }

  const int max_length = N * (N - 1) / 2;
  SparsePolynomial residual = f;
  while (!residual.is_zero()) {
    const int d = residual.lowest_degree();
    if (d > max_length) throw RankTooSmall("residual degree exceeds the length of w_0 in S_" + std::to_string(N));
    const auto slice = solve_schubert_component(residual.homogeneous_component(d), vars, d, N);
    for (const auto& [w, c] : slice) {
      residual -= grothendieck(w) * c;
      accumulate(result.coefficients, w, c);
    }
  }
  return result;
}

SparsePolynomial reconstruct(const BasisExpansion& expansion) {
  SparsePolynomial f;
  for (const auto& [w, c] : expansion.coefficients) f += basis_polynomial(expansion.basis, w) * c;
  return f;
}

PermutationCombination monk_multiply(int p, const Permutation& v) {
  if (p < 1) throw std::invalid_argument("monk_multiply needs p >= 1");
  const int M = std::max(v.rank(), p) + 1;
  const Permutation ve = v.embed(M);
  const int len = ve.length();
  PermutationCombination result;
  for (int i = 1; i <= M; ++i) {
    if (i == p) continue;
    const Permutation w = ve.right_transposition(i, p);
    if (w.length() == len + 1) accumulate(result, w.trimmed(), i < p ? Integer(-1) : Integer(1));
  }
  return result;
}

PermutationCombination kmonk_chains(int p, const Permutation& v) {
  if (p < 1) throw std::invalid_argument("kmonk_chains needs p >= 1");
  const int M = std::max(v.rank(), p) + 1;
  std::vector<int> labels;
  for (int i = p - 1; i >= 1; --i) labels.push_back(i);
  for (int i = M; i > p; --i) labels.push_back(i);

  PermutationCombination result;
  std::function<void(const Permutation&, int, std::size_t, int)> extend =
      [&](const Permutation& current, int len, std::size_t next, int above) {
        for (std::size_t k = next; k < labels.size(); ++k) {
          const int i = labels[k];
          const Permutation w = current.right_transposition(i, p);
          if (!is_cover(current, w)) continue;
          const int s = above + (i > p ? 1 : 0);
          accumulate(result, w.trimmed(), s % 2 == 1 ? Integer(1) : Integer(-1));
          extend(w, len + 1, k + 1, s);
        }
      };
  const Permutation start = v.embed(M);
  extend(start, start.length(), 0, 0);
  return result;
}

BasisExpansion structure_constants_poly(const Permutation& u, const Permutation& v) {
  return adaptive_expansion(grothendieck(u) * grothendieck(v), Basis::grothendieck, std::max(u.rank(), v.rank()));
}

BasisExpansion schubert_product(const Permutation& u, const Permutation& v) {
  return adaptive_expansion(schubert(u) * schubert(v), Basis::schubert, std::max(u.rank(), v.rank()));
}

PermutationCombination restrict_to_rank(const PermutationCombination& combination, int n) {
  PermutationCombination result;
  for (const auto& [w, c] : combination)
    if (w.fits_rank(n)) result.emplace(w.trimmed().embed(std::max(n, w.trimmed().rank())), c);
  return result;
}

void set_polynomial_cache_dir(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(memo().mutex);
  memo().cache_dir = std::move(dir);
}

void clear_polynomial_memo() {
  std::unique_lock lock(memo().mutex);
  memo().schubert.clear();
  memo().grothendieck.clear();
}

}  // namespace kdunkl
