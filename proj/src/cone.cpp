#include "kdunkl/cone.hpp"

#include <algorithm>
#include <set>

namespace kdunkl {

std::string to_string(ConeStatus status) {
  switch (status) {
    case ConeStatus::certified: return "certified";
    case ConeStatus::no_certificate: return "no-certificate";
    case ConeStatus::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

std::vector<Word> all_words(std::size_t letters, int degree) {
  std::vector<Word> words{Word{}};
  for (int k = 0; k < degree; ++k) {
    std::vector<Word> next;
    next.reserve(words.size() * letters);
    for (const auto& w : words)
      for (std::size_t a = 0; a < letters; ++a) {
        Word x = w;
        x.push_back(static_cast<Letter>(a));
        next.push_back(std::move(x));
      }
    words = std::move(next);
  }
  return words;
}

double power(std::size_t base, int exp) {
  double r = 1;
  for (int k = 0; k < exp; ++k) r *= static_cast<double>(base);
  return r;
}

// Certifies sign * e_d - sum weights in the ideal, clearing denominators first.
std::optional<MembershipCertificate> ideal_part(const FreeAlgebraElement& target,
                                                const std::map<Word, Rational, WordOrder>& weights,
                                                const QuadraticAlgebraSpec& spec, const MembershipOptions& options,
                                                std::string& detail) {
  Integer denominator = 1;
  for (const auto& [w, c] : weights) denominator = lcm(denominator, c.get_den());
  FreeAlgebraElement residual = target * denominator;
  for (const auto& [w, c] : weights) residual.add_term(w, -Integer(c * Rational(denominator)));
  const auto result = ideal_membership(residual, spec, options);
  if (result.status != MembershipStatus::member) {
    detail = result.detail.empty() ? "ideal part not certified" : result.detail;
    return std::nullopt;
  }
  MembershipCertificate certificate = *result.certificate;
  for (auto& term : certificate.terms) term.coeff /= Rational(denominator);
  if (std::any_of(certificate.terms.begin(), certificate.terms.end(),
                  [](const CertificateTerm& t) { return !is_integral(t.coeff); }))
    certificate.ring = Ring::rational;
  return certificate;
}

using DirectionKey = std::vector<std::pair<std::size_t, std::string>>;

// The vector scaled so that its first entry is +1 or -1.
DirectionKey direction(const SparseVector& v) {
  const Rational scale = abs(v.front().second);
  DirectionKey key;
  key.reserve(v.size());
  for (const auto& [t, c] : v) key.emplace_back(t, Rational(c / scale).get_str());
  return key;
}

// One witness word per ray of the cone spanned by the images of all words of
// degree d. Right multiplication by a letter is linear modulo the ideal, so
// the images of (witnesses of degree d-1) * letter span the degree-d cone.
std::optional<std::vector<Word>> cone_rays(QuadraticIdeal& engine, std::size_t letters, int degree,
                                           std::size_t max_rays) {
  std::vector<Word> rays{Word{}};
  for (int k = 1; k <= degree; ++k) {
    std::vector<Word> next;
    std::set<DirectionKey> seen;
    for (const auto& u : rays) {
      for (std::size_t a = 0; a < letters; ++a) {
        Word w = u;
        w.push_back(static_cast<Letter>(a));
        const SparseVector nf = engine.normal_form(w);
        if (nf.empty() || !seen.insert(direction(nf)).second) continue;
        next.push_back(std::move(w));
        if (next.size() > max_rays) return std::nullopt;
      }
    }
    rays = std::move(next);
  }
  return rays;
}

}  // namespace

ConeResult cone_membership(const FreeAlgebraElement& e, const QuadraticAlgebraSpec& spec,
                           const std::function<int(int)>& sign_profile, const ConeOptions& options) {
  spec.check_alphabet(e);
  ConeResult result;
  result.status = ConeStatus::certified;
  const auto engine = ideal_engine(spec, options.membership.ring, options.membership.limits);
  for (int d : e.degrees()) {
    const int sign = sign_profile(d) < 0 ? -1 : 1;
    const FreeAlgebraElement target = e.graded_component(d) * sign;
    DegreeConeCertificate certificate;
    certificate.degree = d;
    certificate.sign = sign;
    try {
      const SparseVector b = engine->normal_form(target);
      const auto& standard = engine->standard_words(d);
      const bool trivially_nonnegative =
          std::all_of(b.begin(), b.end(), [](const auto& entry) { return entry.second > 0; });
      if (trivially_nonnegative) {
        for (const auto& [t, c] : b) certificate.weights[standard[t]] = c;
      } else {
        std::vector<Word> candidates;
        if (power(spec.size(), d) <= static_cast<double>(options.max_words)) {
          candidates = all_words(spec.size(), d);
        } else {
          auto rays = cone_rays(*engine, spec.size(), d, options.max_rays);
          if (!rays) {
            result.status = ConeStatus::undecided;
            result.failing_degree = d;
            result.detail = "more than " + std::to_string(options.max_rays) + " cone rays in degree " + std::to_string(d);
            return result;
          }
          candidates = std::move(*rays);
        }
        // Columns are normal forms; identical columns are interchangeable.
        std::vector<Word> column_word;
        std::vector<SparseVector> columns;
        std::set<std::vector<std::pair<std::size_t, std::string>>> seen;
        std::set<std::size_t> rows_used;
        for (const auto& [t, c] : b) rows_used.insert(t);
        for (const auto& w : candidates) {
          SparseVector nf = engine->normal_form(w);
          if (nf.empty()) continue;
          std::vector<std::pair<std::size_t, std::string>> key;
          for (const auto& [t, c] : nf) key.emplace_back(t, c.get_str());
          if (!seen.insert(std::move(key)).second) continue;
          for (const auto& [t, c] : nf) rows_used.insert(t);
          column_word.push_back(w);
          columns.push_back(std::move(nf));
        }
        std::map<std::size_t, std::size_t> row_of;
        for (std::size_t t : rows_used) row_of.emplace(t, row_of.size());
        RationalMatrix a(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
        std::vector<Rational> rhs(row_of.size(), Rational(0));
        for (std::size_t j = 0; j < columns.size(); ++j)
          for (const auto& [t, c] : columns[j]) a[row_of.at(t)][j] = c;
        for (const auto& [t, c] : b) rhs[row_of.at(t)] = c;
        const auto lp = find_nonnegative_solution(a, rhs, options.simplex);
        if (lp.status == FeasibilityStatus::pivot_limit) {
          result.status = ConeStatus::undecided;
          result.failing_degree = d;
          result.detail = "simplex pivot limit reached in degree " + std::to_string(d);
          return result;
        }
        if (lp.status == FeasibilityStatus::infeasible) {
          result.status = ConeStatus::no_certificate;
          result.failing_degree = d;
          result.detail = "no nonnegative combination in degree " + std::to_string(d);
          return result;
        }
        for (std::size_t j = 0; j < columns.size(); ++j)
          if (lp.x[j] != 0) certificate.weights[column_word[j]] = lp.x[j];
      }
      std::string detail;
      auto part = ideal_part(target, certificate.weights, spec, options.membership, detail);
      if (!part) {
        result.status = ConeStatus::undecided;
        result.failing_degree = d;
        result.detail = detail;
        return result;
      }
      certificate.ideal_part = std::move(*part);
    } catch (const ResourceCapExceeded& cap) {
      result.status = ConeStatus::undecided;
      result.failing_degree = d;
      result.detail = cap.what();
      return result;
    }
    certificate.integral =
        certificate.ideal_part.ring == Ring::integer &&
        std::all_of(certificate.weights.begin(), certificate.weights.end(),
                    [](const auto& entry) { return is_integral(entry.second); });
    result.degrees.push_back(std::move(certificate));
  }
  return result;
}

bool verify_cone_certificate(const DegreeConeCertificate& certificate, const FreeAlgebraElement& e,
                             const QuadraticAlgebraSpec& spec) {
  std::map<Word, Rational, WordOrder> total;
  auto add = [&](const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = total.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) total.erase(it);
    }
  };
  for (const auto& [w, c] : certificate.weights) {
    if (c < 0 || static_cast<int>(w.size()) != certificate.degree) return false;
    add(w, c);
  }
  for (const auto& term : certificate.ideal_part.terms) {
    if (term.relation >= spec.relations.size()) return false;
    for (const auto& [w, c] : spec.relations[term.relation].terms())
      add(concat(concat(term.left, w), term.right), term.coeff * Rational(c));
  }
  const FreeAlgebraElement piece = e.graded_component(certificate.degree);
  for (const auto& [w, c] : piece.terms()) add(w, -Rational(c * certificate.sign));
  return total.empty();
}

}  // namespace kdunkl
