#include "kdunkl/freealg.hpp"

#include <set>
#include <stdexcept>

namespace kdunkl {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

FreeAlgebraElement::FreeAlgebraElement(const Integer& scalar) {
  if (scalar != 0) terms_.emplace(Word{}, scalar);
}

FreeAlgebraElement FreeAlgebraElement::word(Word w, const Integer& coeff) {
  FreeAlgebraElement e;
  e.add_term(w, coeff);
  return e;
}

FreeAlgebraElement FreeAlgebraElement::letter(Letter a, const Integer& coeff) { return word(Word{a}, coeff); }

Integer FreeAlgebraElement::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void FreeAlgebraElement::add_term(const Word& w, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int FreeAlgebraElement::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

int FreeAlgebraElement::lowest_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

bool FreeAlgebraElement::is_homogeneous() const { return degree() == lowest_degree(); }

FreeAlgebraElement FreeAlgebraElement::graded_component(int d) const {
  FreeAlgebraElement result;
  if (d < 0) return result;
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == d) result.terms_.emplace_hint(result.terms_.end(), w, c);
  return result;
}

std::vector<int> FreeAlgebraElement::degrees() const {
  std::vector<int> result;
  for (const auto& [w, c] : terms_)
    if (result.empty() || result.back() != static_cast<int>(w.size())) result.push_back(static_cast<int>(w.size()));
  return result;
}

std::vector<Letter> FreeAlgebraElement::support() const {
  std::set<Letter> letters;
  for (const auto& [w, c] : terms_) letters.insert(w.begin(), w.end());
  return {letters.begin(), letters.end()};
}

FreeAlgebraElement FreeAlgebraElement::reversed() const {
  FreeAlgebraElement result;
  for (const auto& [w, c] : terms_) result.add_term(Word(w.rbegin(), w.rend()), c);
  return result;
}

FreeAlgebraElement FreeAlgebraElement::substitute(const std::function<FreeAlgebraElement(Letter)>& image) const {
  std::map<Letter, FreeAlgebraElement> cache;
  FreeAlgebraElement result;
  for (const auto& [w, c] : terms_) {
    FreeAlgebraElement term(c);
    for (Letter a : w) {
      auto it = cache.find(a);
      if (it == cache.end()) it = cache.emplace(a, image(a)).first;
      term = term * it->second;
    }
    result += term;
  }
  return result;
}

FreeAlgebraElement& FreeAlgebraElement::operator+=(const FreeAlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator-=(const FreeAlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  FreeAlgebraElement result;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) result.add_term(concat(wa, wb), ca * cb);
  return result;
}

FreeAlgebraElement FreeAlgebraElement::operator-() const {
  FreeAlgebraElement result = *this;
  for (auto& [w, c] : result.terms_) c = -c;
  return result;
}

FreeAlgebraElement commutator(const FreeAlgebraElement& a, const FreeAlgebraElement& b) { return a * b - b * a; }

FreeAlgebraElement graded_component(const FreeAlgebraElement& e, int d) { return e.graded_component(d); }

FreeAlgebraElement product(std::span<const FreeAlgebraElement> factors) {
  FreeAlgebraElement result(1);
  for (const auto& f : factors) result = result * f;
  return result;
}

Lemma2Sides lemma2_expand(std::span<const std::pair<FreeAlgebraElement, FreeAlgebraElement>> factors,
                          std::span<const FreeAlgebraElement> interleave) {
  const std::size_t m = factors.size();
  if (interleave.size() != m + 1) throw std::invalid_argument("lemma2_expand needs m+1 interleaving blocks");
  if (m >= 8 * sizeof(unsigned long) - 1) throw std::invalid_argument("too many factors");

  // choice[k]: 0 -> v_k, 1 -> u_k, 2 -> x_k
  auto interleaved = [&](const std::vector<int>& choice) {
    FreeAlgebraElement result = interleave[0];
    for (std::size_t k = 0; k < m; ++k) {
      const auto& [u, v] = factors[k];
      const FreeAlgebraElement factor = choice[k] == 0 ? v : choice[k] == 1 ? u : u + v;
      result = result * factor * interleave[k + 1];
    }
    return result;
  };

  Lemma2Sides sides;
  sides.lhs = interleaved(std::vector<int>(m, 2));
  sides.rhs = interleaved(std::vector<int>(m, 0));
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<int> choice(m);
    int size = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const bool in = (mask >> k) & 1ul;
      choice[k] = in ? 1 : 2;
      size += in;
    }
    const FreeAlgebraElement term = interleaved(choice);
    if (size % 2 == 1) sides.rhs += term;
    else sides.rhs -= term;
  }
  return sides;
}

}  // namespace kdunkl
