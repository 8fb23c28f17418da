#include "kdunkl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kdunkl {

Integer parse_integer(std::string_view text) {
  Integer z;
  if (text.empty() || z.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  return z;
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

namespace {

void trim(Exponents& exps) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

int exponent(const Exponents& exps, int var) {
  return var <= static_cast<int>(exps.size()) ? exps[static_cast<std::size_t>(var - 1)] : 0;
}

void set_exponent(Exponents& exps, int var, int value) {
  if (static_cast<int>(exps.size()) < var) exps.resize(static_cast<std::size_t>(var), 0);
  exps[static_cast<std::size_t>(var - 1)] = value;
}

}  // namespace

int total_degree(const Exponents& exps) {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    const int ea = k < a.size() ? a[k] : 0;
    const int eb = k < b.size() ? b[k] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

SparsePolynomial::SparsePolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

SparsePolynomial SparsePolynomial::variable(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  Exponents exps(static_cast<std::size_t>(i), 0);
  exps.back() = 1;
  return monomial(std::move(exps));
}

SparsePolynomial SparsePolynomial::monomial(Exponents exps, const Integer& coeff) {
  SparsePolynomial p;
  p.add_term(std::move(exps), coeff);
  return p;
}

Integer SparsePolynomial::coefficient(const Exponents& exps) const {
  Exponents key = exps;
  trim(key);
  const auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePolynomial::add_term(Exponents exps, const Integer& coeff) {
  if (coeff == 0) return;
  trim(exps);
  auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int SparsePolynomial::nvars() const {
  int n = 0;
  for (const auto& [exps, c] : terms_) n = std::max(n, static_cast<int>(exps.size()));
  return n;
}

int SparsePolynomial::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

int SparsePolynomial::lowest_degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

SparsePolynomial SparsePolynomial::homogeneous_component(int d) const {
  SparsePolynomial result;
  for (const auto& [exps, c] : terms_)
    if (total_degree(exps) == d) result.terms_.emplace_hint(result.terms_.end(), exps, c);
  return result;
}

bool SparsePolynomial::is_homogeneous() const { return terms_.empty() || degree() == lowest_degree(); }

SparsePolynomial SparsePolynomial::swap_variables(int i) const {
  SparsePolynomial result;
  for (const auto& [exps, c] : terms_) {
    Exponents e = exps;
    const int a = exponent(e, i), b = exponent(e, i + 1);
    set_exponent(e, i, b);
    set_exponent(e, i + 1, a);
    result.add_term(std::move(e), c);
  }
  return result;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, c] : terms_) c *= scalar;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial result;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      result.add_term(std::move(e), ca * cb);
    }
  }
  return result;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial result = *this;
  for (auto& [exps, c] : result.terms_) c = -c;
  return result;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, c] : terms_) {
    std::string monomial;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += "x" + std::to_string(k + 1);
      if (exps[k] > 1) monomial += "^" + std::to_string(exps[k]);
    }
    const Integer magnitude = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (monomial.empty()) out += magnitude.get_str();
    else if (magnitude == 1) out += monomial;
    else out += magnitude.get_str() + "*" + monomial;
  }
  return out;
}

SparsePolynomial SparsePolynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  SparsePolynomial result;
  std::size_t pos = 0;
  auto read_number = [&](std::size_t& p) {
    const std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return s.substr(start, p - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in polynomial at offset " + std::to_string(pos));
    }
    Integer coeff = 1;
    Exponents exps;
    bool have_factor = false;
    const std::string digits = read_number(pos);
    if (!digits.empty()) {
      coeff = parse_integer(digits);
      have_factor = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    while (pos < s.size() && s[pos] == 'x') {
      ++pos;
      const std::string index = read_number(pos);
      if (index.empty()) throw std::invalid_argument("variable without index");
      const int var = std::stoi(index);
      if (var < 1) throw std::invalid_argument("variable index must be >= 1");
      int power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string p = read_number(pos);
        if (p.empty()) throw std::invalid_argument("missing exponent");
        power = std::stoi(p);
      }
      set_exponent(exps, var, exponent(exps, var) + power);
      have_factor = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (!have_factor) throw std::invalid_argument("malformed polynomial term at offset " + std::to_string(pos));
    result.add_term(std::move(exps), coeff * sign);
  }
  return result;
}

nlohmann::json SparsePolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exps, c] : terms_) terms.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  return terms;
}

SparsePolynomial SparsePolynomial::from_json(const nlohmann::json& j) {
  SparsePolynomial result;
  for (const auto& term : j) {
    auto exps = term.at("exps").get<Exponents>();
    if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; }))
      throw std::invalid_argument("negative exponent");
    result.add_term(std::move(exps), parse_integer(term.at("coeff").get<std::string>()));
  }
  return result;
}

SparsePolynomial divided_difference(const SparsePolynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("divided difference index must be >= 1");
  SparsePolynomial result;
  for (const auto& [exps, c] : f.terms()) {
    const int a = exponent(exps, i), b = exponent(exps, i + 1);
    if (a == b) continue;
    // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
    //   = sign * (x_i x_{i+1})^lo * sum_{k} x_i^{gap-1-k} x_{i+1}^k
    const int lo = std::min(a, b), gap = std::abs(a - b);
    const Integer coeff = a > b ? c : Integer(-c);
    for (int k = 0; k < gap; ++k) {
      Exponents e = exps;
      set_exponent(e, i, lo + gap - 1 - k);
      set_exponent(e, i + 1, lo + k);
      result.add_term(std::move(e), coeff);
    }
  }
  return result;
}

SparsePolynomial isobaric_divided_difference(const SparsePolynomial& f, int i) {
  const SparsePolynomial shifted = f - f * SparsePolynomial::variable(i + 1);
  return divided_difference(shifted, i);
}

}  // namespace kdunkl
