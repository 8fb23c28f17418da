#include "kdunkl/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kdunkl {

std::string to_string(Ring ring) { return ring == Ring::integer ? "integer" : "rational"; }

std::string to_string(MembershipStatus status) {
  switch (status) {
    case MembershipStatus::member: return "member";
    case MembershipStatus::not_member: return "not-member";
    case MembershipStatus::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

// a - m * b for sorted sparse vectors.
SparseVector subtract_multiple(const SparseVector& a, const Rational& m, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -m * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - m * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector linear_combination(const Rational& x, const SparseVector& a, const Rational& y, const SparseVector& b) {
  SparseVector out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::size_t col;
    Rational v;
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      col = a[i].first;
      v = x * a[i++].second;
    } else if (i == a.size() || b[j].first < a[i].first) {
      col = b[j].first;
      v = y * b[j++].second;
    } else {
      col = a[i].first;
      v = x * a[i++].second + y * b[j++].second;
    }
    if (v != 0) out.emplace_back(col, std::move(v));
  }
  return out;
}

SparseVector to_sparse(const std::map<std::size_t, Rational>& acc) {
  SparseVector out;
  out.reserve(acc.size());
  for (const auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

template <class Map, class Key>
void accumulate(Map& map, const Key& key, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = map.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) map.erase(it);
  }
}

using RationalElement = std::map<Word, Rational, WordOrder>;

}  // namespace

QuadraticIdeal::QuadraticIdeal(std::size_t alphabet_size, std::vector<FreeAlgebraElement> relations, bool integral,
                               IdealLimits limits)
    : letters_(alphabet_size), relations_(std::move(relations)), integral_start_(integral), limits_(limits) {
  if (letters_ == 0 || letters_ > 256) throw std::invalid_argument("alphabet size must be in 1..256");
  for (const auto& r : relations_) {
    if (r.is_zero() || !r.is_homogeneous() || r.degree() != 2)
      throw std::invalid_argument("ideal generators must be nonzero and quadratic");
    std::vector<std::tuple<Letter, Letter, Integer>> terms;
    for (const auto& [w, c] : r.terms()) {
      if (w[0] >= letters_ || w[1] >= letters_) throw std::invalid_argument("relation letter outside the alphabet");
      terms.emplace_back(w[0], w[1], c);
    }
    rel_terms_.push_back(std::move(terms));
  }
}

void QuadraticIdeal::ensure_degree(int d) {
  std::lock_guard lock(mutex_);
  if (d < 0) return;
  while (static_cast<int>(degrees_.size()) <= d) build_degree(static_cast<int>(degrees_.size()));
}

const std::vector<Word>& QuadraticIdeal::standard_words(int d) {
  std::lock_guard lock(mutex_);
  ensure_degree(d);
  return degrees_[static_cast<std::size_t>(d)].standard;
}

std::size_t QuadraticIdeal::dimension(int d) { return standard_words(d).size(); }

Ring QuadraticIdeal::ring(int d) {
  std::lock_guard lock(mutex_);
  ensure_degree(std::max(d, 0));
  return degrees_[static_cast<std::size_t>(std::max(d, 0))].integral ? Ring::integer : Ring::rational;
}

void QuadraticIdeal::build_degree(int d) {
  Degree D;
  const std::size_t L = letters_;
  if (d == 0) {
    D.standard = {Word{}};
    D.integral = integral_start_;
    degrees_.push_back(std::move(D));
    return;
  }
  if (d == 1) {
    D.integral = integral_start_;
    for (std::size_t a = 0; a < L; ++a) {
      D.standard.push_back(Word{static_cast<Letter>(a)});
      D.pivot_of_column.push_back(-1);
      D.column_nf.push_back(SparseVector{{a, Rational(1)}});
      D.standard_of_column.push_back(a);
    }
    degrees_.push_back(std::move(D));
    return;
  }

  const Degree& prev = degrees_[static_cast<std::size_t>(d - 1)];
  const Degree& prev2 = degrees_[static_cast<std::size_t>(d - 2)];
  const std::size_t columns = prev.standard.size() * L;
  if (columns > limits_.max_dimension)
    throw ResourceCapExceeded("degree " + std::to_string(d) + " needs " + std::to_string(columns) +
                              " columns (cap " + std::to_string(limits_.max_dimension) + ")");
  D.integral = prev.integral;
  D.pivot_of_column.assign(columns, -1);
  std::size_t entries = 0;
  auto charge = [&](std::size_t n) {
    entries += n;
    if (entries > limits_.max_entries)
      throw ResourceCapExceeded("degree " + std::to_string(d) + " exceeds " + std::to_string(limits_.max_entries) +
                                " stored entries");
  };
  auto new_node = [&](std::vector<std::pair<long, Rational>> refs) {
    D.nodes.push_back(Node{std::move(refs)});
    return static_cast<long>(D.nodes.size()) - 1;
  };

  const std::size_t R = relations_.size();
  for (std::size_t s = 0; s < prev2.standard.size(); ++s) {
    for (std::size_t r = 0; r < R; ++r) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [a, b, c] : rel_terms_[r]) {
        for (const auto& [t, lambda] : prev.column_nf[s * L + a]) acc[t * L + b] += Rational(c) * lambda;
      }
      SparseVector row = to_sparse(acc);
      std::vector<std::pair<long, Rational>> refs{{-1 - static_cast<long>(s * R + r), Rational(1)}};
      while (!row.empty()) {
        const std::size_t col = row.back().first;
        const Rational lead = row.back().second;
        const long pi = D.pivot_of_column[col];
        if (pi < 0) {
          Rational scale = 1;
          if (!D.integral) scale = 1 / lead;
          else if (lead < 0) scale = -1;
          if (scale != 1) {
            for (auto& [k, v] : row) v *= scale;
            for (auto& [k, v] : refs) v *= scale;
          }
          charge(row.size());
          D.pivots.push_back(Pivot{std::move(row), new_node(std::move(refs))});
          D.pivot_of_column[col] = static_cast<long>(D.pivots.size()) - 1;
          break;
        }
        Pivot& P = D.pivots[static_cast<std::size_t>(pi)];
        const Rational plead = P.row.back().second;
        if (!D.integral || mpz_divisible_p(lead.get_num_mpz_t(), plead.get_num_mpz_t())) {
          const Rational m = lead / plead;
          row = subtract_multiple(row, m, P.row);
          refs.emplace_back(P.node, -m);
          continue;
        }
        // Extended gcd step: replace the pivot by the gcd combination and keep
        // reducing the complementary row; the 2x2 transform is unimodular.
        Integer g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), plead.get_num_mpz_t(), lead.get_num_mpz_t());
        const long row_node = new_node(std::move(refs));
        const long old_node = P.node;
        const Rational a_g(Integer(lead.get_num() / g)), p_g(Integer(plead.get_num() / g));
        SparseVector pivot_row = linear_combination(Rational(x), P.row, Rational(y), row);
        SparseVector rest = linear_combination(a_g, P.row, -p_g, row);
        charge(pivot_row.size());
        P.row = std::move(pivot_row);
        P.node = new_node({{old_node, Rational(x)}, {row_node, Rational(y)}});
        row = std::move(rest);
        refs = {{old_node, a_g}, {row_node, -p_g}};
      }
    }
  }

  // A pivot that is not a unit means the quotient may have torsion in this
  // degree; continue over Q from here on.
  for (auto& P : D.pivots) {
    if (P.row.back().second != 1) {
      D.integral = false;
      const Rational inv = 1 / P.row.back().second;
      for (auto& [k, v] : P.row) v *= inv;
      P.node = new_node({{P.node, inv}});
    }
  }

  D.standard_of_column.assign(columns, 0);
  for (std::size_t c = 0; c < columns; ++c) {
    if (D.pivot_of_column[c] >= 0) continue;
    D.standard_of_column[c] = D.standard.size();
    Word w = prev.standard[c / L];
    w.push_back(static_cast<Letter>(c % L));
    D.standard.push_back(std::move(w));
  }
  D.column_nf.resize(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    const long pi = D.pivot_of_column[c];
    if (pi < 0) {
      D.column_nf[c] = SparseVector{{D.standard_of_column[c], Rational(1)}};
      continue;
    }
    const SparseVector& row = D.pivots[static_cast<std::size_t>(pi)].row;
    std::map<std::size_t, Rational> acc;
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      for (const auto& [t, lambda] : D.column_nf[row[k].first]) acc[t] -= row[k].second * lambda;
    D.column_nf[c] = to_sparse(acc);
    charge(D.column_nf[c].size());
  }
  degrees_.push_back(std::move(D));
}

SparseVector QuadraticIdeal::combine_columns(int d, const SparseVector& prefix_nf, Letter last) {
  const Degree& D = degrees_[static_cast<std::size_t>(d)];
  std::map<std::size_t, Rational> acc;
  for (const auto& [t, lambda] : prefix_nf)
    for (const auto& [u, mu] : D.column_nf[t * letters_ + last]) acc[u] += lambda * mu;
  return to_sparse(acc);
}

const SparseVector& QuadraticIdeal::word_nf(const Word& w) {
  if (auto it = nf_memo_.find(w); it != nf_memo_.end()) return it->second;
  SparseVector value;
  if (w.empty()) {
    value = {{0, Rational(1)}};
  } else if (w.size() == 1) {
    if (w[0] >= letters_) throw std::invalid_argument("letter outside the alphabet");
    value = {{w[0], Rational(1)}};
  } else {
    if (w.back() >= letters_) throw std::invalid_argument("letter outside the alphabet");
    const Word prefix(w.begin(), w.end() - 1);
    const SparseVector prefix_nf = word_nf(prefix);
    value = combine_columns(static_cast<int>(w.size()), prefix_nf, w.back());
  }
  return nf_memo_.emplace(w, std::move(value)).first->second;
}

SparseVector QuadraticIdeal::normal_form(const Word& w) {
  std::lock_guard lock(mutex_);
  ensure_degree(static_cast<int>(w.size()));
  return word_nf(w);
}

SparseVector QuadraticIdeal::normal_form(const FreeAlgebraElement& e) {
  std::lock_guard lock(mutex_);
  if (e.is_zero()) return {};
  if (!e.is_homogeneous()) throw std::invalid_argument("normal_form needs a homogeneous element");
  ensure_degree(e.degree());
  std::map<std::size_t, Rational> acc;
  for (const auto& [w, c] : e.terms())
    for (const auto& [t, lambda] : word_nf(w)) acc[t] += Rational(c) * lambda;
  return to_sparse(acc);
}

void QuadraticIdeal::reduce_to_zero(int d, SparseVector z, std::map<long, Rational>& node_coeffs) const {
  const Degree& D = degrees_[static_cast<std::size_t>(d)];
  while (!z.empty()) {
    const long pi = D.pivot_of_column[z.back().first];
    if (pi < 0) throw std::logic_error("element is not in the ideal");
    const Pivot& P = D.pivots[static_cast<std::size_t>(pi)];
    const Rational m = z.back().second;  // pivot leads are 1
    z = subtract_multiple(z, m, P.row);
    accumulate(node_coeffs, P.node, m);
  }
}

std::map<long, Rational> QuadraticIdeal::expand_nodes(int d, std::map<long, Rational> node_coeffs) const {
  const Degree& D = degrees_[static_cast<std::size_t>(d)];
  std::map<long, Rational> generators;
  // Nodes only reference earlier nodes, so expanding from the top collects
  // every contribution to a node before it is itself expanded.
  while (!node_coeffs.empty()) {
    const auto top = std::prev(node_coeffs.end());
    const long node = top->first;
    const Rational c = top->second;
    node_coeffs.erase(top);
    for (const auto& [ref, v] : D.nodes[static_cast<std::size_t>(node)].refs) {
      if (ref >= 0) accumulate(node_coeffs, ref, c * v);
      else accumulate(generators, -1 - ref, c * v);
    }
  }
  return generators;
}

std::vector<CertificateTerm> QuadraticIdeal::certify(const FreeAlgebraElement& e) {
  std::lock_guard lock(mutex_);
  std::vector<CertificateTerm> terms;
  if (e.is_zero()) return terms;
  if (!e.is_homogeneous()) throw std::invalid_argument("certify needs a homogeneous element");
  const int k = e.degree();
  ensure_degree(k);
  const std::size_t L = letters_, R = relations_.size();

  // pending[suffix] = Y means Y * suffix still has to be written as an ideal
  // combination; every Y lies in the ideal of the current degree.
  std::map<Word, RationalElement, WordOrder> pending;
  for (const auto& [w, c] : e.terms()) pending[Word{}][w] = Rational(c);

  for (int j = k; j >= 2; --j) {
    const Degree& lower = degrees_[static_cast<std::size_t>(j - 1)];
    const Degree& lower2 = degrees_[static_cast<std::size_t>(j - 2)];
    std::map<Word, RationalElement, WordOrder> next;
    for (const auto& [suffix, Y] : pending) {
      if (Y.empty()) continue;
      std::map<std::size_t, Rational> z;
      for (const auto& [u, c] : Y) {
        const Letter g = u.back();
        const Word prefix(u.begin(), u.end() - 1);
        Word shifted = suffix;
        shifted.insert(shifted.begin(), g);
        RationalElement& target = next[shifted];
        accumulate(target, prefix, c);
        for (const auto& [t, lambda] : word_nf(prefix)) {
          accumulate(target, lower.standard[t], -c * lambda);
          z[t * L + g] += c * lambda;
        }
      }
      std::map<long, Rational> node_coeffs;
      reduce_to_zero(j, to_sparse(z), node_coeffs);
      for (const auto& [gen, lambda] : expand_nodes(j, std::move(node_coeffs))) {
        const std::size_t s = static_cast<std::size_t>(gen) / R, r = static_cast<std::size_t>(gen) % R;
        const Word& left = lower2.standard[s];
        terms.push_back(CertificateTerm{left, r, suffix, lambda});
        for (const auto& [a, b, c] : rel_terms_[r]) {
          Word u = left;
          u.push_back(a);
          Word shifted = suffix;
          shifted.insert(shifted.begin(), b);
          RationalElement& target = next[shifted];
          const Rational weight = lambda * Rational(c);
          accumulate(target, u, -weight);
          for (const auto& [t, mu] : lower.column_nf[s * L + a]) accumulate(target, lower.standard[t], weight * mu);
        }
      }
    }
    pending = std::move(next);
  }
  for (const auto& [suffix, Y] : pending)
    if (!Y.empty()) throw std::logic_error("certificate construction left a nonzero remainder");
  return terms;
}

namespace {

struct EngineKey {
  std::string text;
  bool operator<(const EngineKey& other) const { return text < other.text; }
};

std::string engine_key(std::size_t letters, const std::vector<FreeAlgebraElement>& relations, RingMode mode,
                       const IdealLimits& limits) {
  std::ostringstream out;
  out << letters << '|' << static_cast<int>(mode) << '|' << limits.max_entries << '|' << limits.max_dimension;
  for (const auto& r : relations) {
    out << ';';
    for (const auto& [w, c] : r.terms()) out << int(w[0]) << ',' << int(w[1]) << ':' << c.get_str() << ' ';
  }
  return out.str();
}

std::shared_ptr<QuadraticIdeal> cached_engine(std::size_t letters, const std::vector<FreeAlgebraElement>& relations,
                                              RingMode mode, const IdealLimits& limits) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<QuadraticIdeal>> cache;
  const std::string key = engine_key(letters, relations, mode, limits);
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_shared<QuadraticIdeal>(letters, relations, mode == RingMode::integer_with_fallback, limits);
  return slot;
}

}  // namespace

std::shared_ptr<QuadraticIdeal> ideal_engine(const QuadraticAlgebraSpec& spec, RingMode mode, IdealLimits limits) {
  return cached_engine(spec.size(), spec.relations, mode, limits);
}

MembershipResult ideal_membership(const FreeAlgebraElement& e, const QuadraticAlgebraSpec& spec,
                                  const MembershipOptions& options) {
  spec.check_alphabet(e);
  MembershipResult result;
  if (e.is_zero()) {
    result.status = MembershipStatus::member;
    result.certificate = MembershipCertificate{Ring::integer, {}};
    result.detail = "identically zero";
    return result;
  }

  // Letter translation for the chosen scope.
  std::vector<Letter> letters;  // local -> spec
  if (options.scope == MembershipScope::support) letters = e.support();
  else
    for (std::size_t a = 0; a < spec.size(); ++a) letters.push_back(static_cast<Letter>(a));
  std::vector<int> local(spec.size(), -1);
  for (std::size_t k = 0; k < letters.size(); ++k) local[letters[k]] = static_cast<int>(k);
  std::vector<std::size_t> relation_index;  // local -> spec
  std::vector<FreeAlgebraElement> relations;
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    const auto support = spec.relations[r].support();
    if (std::any_of(support.begin(), support.end(), [&](Letter a) { return local[a] < 0; })) continue;
    relation_index.push_back(r);
    relations.push_back(spec.relations[r].substitute(
        [&](Letter a) { return FreeAlgebraElement::letter(static_cast<Letter>(local[a])); }));
  }
  if (letters.empty()) letters.push_back(0);  // constants only
  const auto engine = cached_engine(letters.size(), relations, options.ring, options.limits);
  const FreeAlgebraElement translated =
      e.substitute([&](Letter a) { return FreeAlgebraElement::letter(static_cast<Letter>(local[a])); });

  try {
    Ring ring = Ring::integer;
    for (int d : translated.degrees()) {
      if (!engine->normal_form(translated.graded_component(d)).empty()) result.failing_degrees.push_back(d);
      if (engine->ring(d) == Ring::rational) ring = Ring::rational;
    }
    result.ring = ring;
    if (!result.failing_degrees.empty()) {
      result.status = MembershipStatus::not_member;
      return result;
    }
    result.status = MembershipStatus::member;
    if (!options.want_certificate) return result;
    MembershipCertificate certificate{ring, {}};
    for (int d : translated.degrees()) {
      for (auto& term : engine->certify(translated.graded_component(d))) {
        for (auto& a : term.left) a = letters[a];
        for (auto& a : term.right) a = letters[a];
        term.relation = relation_index[term.relation];
        if (!is_integral(term.coeff)) certificate.ring = Ring::rational;
        certificate.terms.push_back(std::move(term));
      }
    }
    result.ring = certificate.ring;
    result.certificate = std::move(certificate);
  } catch (const ResourceCapExceeded& cap) {
    result.status = MembershipStatus::undecided;
    result.certificate.reset();
    result.detail = cap.what();
  }
  return result;
}

bool verify_certificate(const MembershipCertificate& certificate, const FreeAlgebraElement& e,
                        const QuadraticAlgebraSpec& spec) {
  RationalElement total;
  for (const auto& term : certificate.terms) {
    if (term.relation >= spec.relations.size()) return false;
    if (certificate.ring == Ring::integer && !is_integral(term.coeff)) return false;
    for (const auto& [w, c] : spec.relations[term.relation].terms()) {
      Word word = concat(concat(term.left, w), term.right);
      accumulate(total, word, term.coeff * Rational(c));
    }
  }
  for (const auto& [w, c] : e.terms()) accumulate(total, w, -Rational(c));
  return total.empty();
}

}  // namespace kdunkl
