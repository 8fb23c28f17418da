#include "kdunkl/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kdunkl {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int value : word_) {
    if (value < 1 || value > rank() || seen[static_cast<std::size_t>(value)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(rank()));
    seen[static_cast<std::size_t>(value)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> word(static_cast<std::size_t>(m));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::longest(int m) {
  std::vector<int> word(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) word[static_cast<std::size_t>(i)] = m - i;
  return Permutation(std::move(word));
}

Permutation Permutation::from_code(std::span<const int> code, int m) {
  int needed = 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] < 0) throw std::invalid_argument("negative code entry");
    if (code[i] > 0) needed = std::max(needed, static_cast<int>(i) + 1 + code[i]);
  }
  const int rank = std::max({needed, m, 1});
  std::vector<int> available(static_cast<std::size_t>(rank));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    if (c >= static_cast<int>(available.size())) throw std::invalid_argument("invalid Lehmer code");
    word.push_back(available[static_cast<std::size_t>(c)]);
    available.erase(available.begin() + c);
  }
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view token = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
        throw std::invalid_argument("bad permutation entry '" + std::string(token) + "'");
      word.push_back(value);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
      word.push_back(c - '0');
    }
  }
  if (word.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(word));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inversions;
  return inversions;
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(word_.size(), 0);
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[j] < word_[i]) ++code[i];
  return code;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> result;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i)
    if (word_[i] > word_[i + 1]) result.push_back(static_cast<int>(i) + 1);
  return result;
}

bool Permutation::is_dominant() const {
  const auto code = lehmer_code();
  return std::is_sorted(code.begin(), code.end(), std::greater<>());
}

Permutation Permutation::right_transposition(int i, int j) const {
  if (i < 1 || j < 1 || i > rank() || j > rank())
    throw std::out_of_range("transposition index out of range");
  if (i == j) throw std::invalid_argument("transposition needs distinct indices");
  Permutation result = *this;
  std::swap(result.word_[static_cast<std::size_t>(i - 1)], result.word_[static_cast<std::size_t>(j - 1)]);
  return result;
}

Permutation Permutation::embed(int m) const {
  if (m < rank()) throw std::invalid_argument("cannot embed into a smaller rank");
  Permutation result = *this;
  for (int k = rank() + 1; k <= m; ++k) result.word_.push_back(k);
  return result;
}

Permutation Permutation::trimmed(int min_rank) const {
  Permutation result = *this;
  while (result.rank() > min_rank && result.word_.back() == result.rank()) result.word_.pop_back();
  return result;
}

bool Permutation::fits_rank(int m) const {
  for (int k = m + 1; k <= rank(); ++k)
    if (word_[static_cast<std::size_t>(k - 1)] != k) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  const int m = std::max(rank(), other.rank());
  std::vector<int> word(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) word[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(word));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = rank() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.word()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

std::optional<std::pair<int, int>> is_cover(const Permutation& v, const Permutation& w) {
  if (v.rank() != w.rank()) return std::nullopt;
  int first = 0, second = 0, differences = 0;
  for (int k = 1; k <= v.rank(); ++k) {
    if (v(k) != w(k)) {
      ++differences;
      if (differences == 1) first = k;
      else if (differences == 2) second = k;
    }
  }
  if (differences != 2 || v(first) != w(second) || v(second) != w(first)) return std::nullopt;
  if (v(first) > v(second)) return std::nullopt;
  for (int k = first + 1; k < second; ++k)
    if (v(k) > v(first) && v(k) < v(second)) return std::nullopt;
  return std::make_pair(first, second);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> result;
  do {
    result.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  std::stable_sort(result.begin(), result.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  return result;
}

CircularSequence circular_sort(std::span<const int> elements, int pivot, int n) {
  if (elements.empty()) throw std::invalid_argument("circular_sort needs a nonempty set");
  std::set<int> distinct;
  for (int i : elements) {
    if (i == pivot) throw std::invalid_argument("pivot belongs to the set");
    if (i < 1 || i > n) throw std::invalid_argument("element out of range 1..n");
    if (!distinct.insert(i).second) throw std::invalid_argument("repeated element");
  }
  CircularSequence result{{distinct.begin(), distinct.end()}, pivot, n};
  auto key = [&](int i) { return ((pivot - i) % n + n) % n; };
  std::sort(result.elements.begin(), result.elements.end(), [&](int a, int b) { return key(a) < key(b); });
  return result;
}

bool is_circular_order(std::span<const int> sequence, int pivot) {
  std::size_t k = 0;
  while (k < sequence.size() && sequence[k] < pivot) {
    if (k > 0 && sequence[k] >= sequence[k - 1]) return false;
    ++k;
  }
  const std::size_t split = k;
  while (k < sequence.size()) {
    if (sequence[k] <= pivot) return false;
    if (k > split && sequence[k] >= sequence[k - 1]) return false;
    ++k;
  }
  return true;
}

}  // namespace kdunkl
