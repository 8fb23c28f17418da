#include "kdunkl/quadspec.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace kdunkl {

std::pair<Letter, int> QuadraticAlgebraSpec::lookup(std::string_view symbol) const {
  for (std::size_t k = 0; k < alphabet.size(); ++k)
    if (alphabet[k] == symbol) return {static_cast<Letter>(k), 1};
  if (const auto it = aliases.find(std::string(symbol)); it != aliases.end()) return it->second;
  throw std::invalid_argument("unknown generator [" + std::string(symbol) + "] in " + name);
}

std::string QuadraticAlgebraSpec::format_word(const Word& w) const {
  std::string out;
  for (Letter a : w) out += "[" + alphabet.at(a) + "]";
  return out;
}

std::string QuadraticAlgebraSpec::format(const FreeAlgebraElement& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    const Integer magnitude = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (w.empty()) out += magnitude.get_str();
    else if (magnitude == 1) out += format_word(w);
    else out += magnitude.get_str() + "*" + format_word(w);
  }
  return out;
}

FreeAlgebraElement QuadraticAlgebraSpec::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty element");
  if (s == "0") return {};
  FreeAlgebraElement result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' at offset " + std::to_string(pos));
    }
    Integer coeff = sign;
    const std::size_t digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const bool has_number = pos > digits_start;
    if (has_number) {
      coeff *= parse_integer(std::string_view(s).substr(digits_start, pos - digits_start));
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    Word w;
    bool has_letter = false;
    while (pos < s.size() && s[pos] == '[') {
      const std::size_t close = s.find(']', pos);
      if (close == std::string::npos) throw std::invalid_argument("unterminated '['");
      const auto [letter, letter_sign] = lookup(std::string_view(s).substr(pos + 1, close - pos - 1));
      w.push_back(letter);
      coeff *= letter_sign;
      has_letter = true;
      pos = close + 1;
    }
    if (!has_number && !has_letter) throw std::invalid_argument("malformed term at offset " + std::to_string(pos));
    result.add_term(w, coeff);
  }
  return result;
}

nlohmann::json QuadraticAlgebraSpec::to_json(const FreeAlgebraElement& e) const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : e.terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (Letter a : w) word.push_back(alphabet.at(a));
    terms.push_back({{"coeff", c.get_str()}, {"word", word}});
  }
  return {{"terms", terms}};
}

FreeAlgebraElement QuadraticAlgebraSpec::from_json(const nlohmann::json& j) const {
  FreeAlgebraElement result;
  for (const auto& term : j.at("terms")) {
    Integer coeff = parse_integer(term.at("coeff").get<std::string>());
    Word w;
    for (const auto& symbol : term.at("word")) {
      const auto [letter, sign] = lookup(symbol.get<std::string>());
      w.push_back(letter);
      coeff *= sign;
    }
    result.add_term(w, coeff);
  }
  return result;
}

void QuadraticAlgebraSpec::check_alphabet(const FreeAlgebraElement& e) const {
  for (const auto& [w, c] : e.terms())
    for (Letter a : w)
      if (a >= alphabet.size()) throw std::invalid_argument("letter outside the alphabet of " + name);
}

FreeAlgebraElement normalize_relation(const FreeAlgebraElement& r) {
  if (r.is_zero()) return r;
  Integer content = 0;
  for (const auto& [w, c] : r.terms()) content = gcd(content, c);
  if (r.terms().begin()->second < 0) content = -content;
  FreeAlgebraElement result;
  for (const auto& [w, c] : r.terms()) result.add_term(w, c / content);
  return result;
}

std::vector<FreeAlgebraElement> dedupe_relations(const std::vector<FreeAlgebraElement>& relations) {
  std::vector<FreeAlgebraElement> result;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous() || r.degree() != 2) throw std::invalid_argument("relations must be quadratic");
    auto n = normalize_relation(r);
    if (std::find(result.begin(), result.end(), n) == result.end()) result.push_back(std::move(n));
  }
  return result;
}

Letter en_letter(int i, int j, int n) {
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("generator [" + std::to_string(i) + "," +
                                                            std::to_string(j) + "] invalid for n=" + std::to_string(n));
  // pairs (1,2),(1,3),...,(1,n),(2,3),...
  const int before = (i - 1) * n - (i - 1) * i / 2;
  return static_cast<Letter>(before + (j - i - 1));
}

FreeAlgebraElement en_generator(int i, int j, int n) {
  if (i == j) throw std::invalid_argument("generator [i,i] does not exist");
  return i < j ? FreeAlgebraElement::letter(en_letter(i, j, n)) : FreeAlgebraElement::letter(en_letter(j, i, n), -1);
}

QuadraticAlgebraSpec spec_En(int n) {
  if (n < 2) throw std::invalid_argument("E_n needs n >= 2");
  if (n * (n - 1) / 2 > 255) throw std::invalid_argument("E_n alphabet too large");
  QuadraticAlgebraSpec spec;
  spec.name = "E_" + std::to_string(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      spec.alphabet.push_back(std::to_string(i) + "," + std::to_string(j));
      spec.aliases[std::to_string(j) + "," + std::to_string(i)] = {en_letter(i, j, n), -1};
    }
  }
  std::vector<FreeAlgebraElement> relations;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) relations.push_back(en_generator(i, j, n) * en_generator(i, j, n));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        if (a == b || b == c || a == c) continue;
        relations.push_back(en_generator(a, b, n) * en_generator(b, c, n) +
                            en_generator(b, c, n) * en_generator(c, a, n) +
                            en_generator(c, a, n) * en_generator(a, b, n));
      }
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (i == k || i == l || j == k || j == l || en_letter(i, j, n) >= en_letter(k, l, n)) continue;
          relations.push_back(commutator(en_generator(i, j, n), en_generator(k, l, n)));
        }
  spec.relations = dedupe_relations(relations);
  return spec;
}

Letter EXLetters::plain(int i) const {
  const auto it = std::find(X.begin(), X.end(), i);
  if (it == X.end()) throw std::invalid_argument(std::to_string(i) + " is not in X");
  return static_cast<Letter>(it - X.begin());
}

Letter EXLetters::primed(int i) const { return static_cast<Letter>(plain(i) + X.size()); }

EXLetters ex_letters(const std::vector<int>& X, int p, int q) {
  if (X.empty()) throw std::invalid_argument("E_X needs a nonempty X");
  EXLetters letters;
  letters.X = X;
  std::sort(letters.X.begin(), letters.X.end());
  if (std::adjacent_find(letters.X.begin(), letters.X.end()) != letters.X.end())
    throw std::invalid_argument("X has repeated elements");
  if (2 * letters.X.size() + 1 > 255) throw std::invalid_argument("X too large");
  letters.p = p != 0 ? p : letters.X.back() + 1;
  letters.q = q != 0 ? q : letters.p + 1;
  for (int v : {letters.p, letters.q})
    if (std::find(letters.X.begin(), letters.X.end(), v) != letters.X.end())
      throw std::invalid_argument("p and q must lie outside X");
  if (letters.p == letters.q) throw std::invalid_argument("p and q must differ");
  return letters;
}

QuadraticAlgebraSpec spec_EX(const std::vector<int>& X, int p, int q, EXRelations which) {
  const EXLetters letters = ex_letters(X, p, q);
  QuadraticAlgebraSpec spec;
  spec.name = which == EXRelations::all ? "E_X" : "E_X (mixed relations)";
  for (int i : letters.X) spec.alphabet.push_back(std::to_string(i));
  for (int i : letters.X) spec.alphabet.push_back(std::to_string(i) + "'");
  spec.alphabet.push_back("*");
  spec.aliases[std::to_string(letters.p) + "'"] = {letters.star(), 1};
  spec.aliases[std::to_string(letters.q)] = {letters.star(), -1};

  using E = FreeAlgebraElement;
  const E star = E::letter(letters.star());
  std::vector<E> relations;
  if (which == EXRelations::all)
    for (std::size_t k = 0; k < spec.alphabet.size(); ++k)
      relations.push_back(E::word({static_cast<Letter>(k), static_cast<Letter>(k)}));
  for (int i : letters.X) {
    const E a = E::letter(letters.plain(i)), b = E::letter(letters.primed(i));
    relations.push_back(a * b - star * a + b * star);
    relations.push_back(b * a - a * star + star * b);
  }
  for (int i : letters.X)
    for (int j : letters.X)
      if (i != j) relations.push_back(E::letter(letters.plain(i)) * E::letter(letters.primed(j)) -
                                      E::letter(letters.primed(j)) * E::letter(letters.plain(i)));
  spec.relations = dedupe_relations(relations);
  return spec;
}

}  // namespace kdunkl
