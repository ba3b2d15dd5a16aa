#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace schubert {

namespace {

PermutationError bad_token(std::string_view text, std::string_view token) {
  return PermutationError("invalid permutation '" + std::string(text) +
                          "': bad token '" + std::string(token) + "'");
}

int parse_entry(std::string_view text, std::string_view token) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value <= 0)
    throw bad_token(text, token);
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  trim();
}

void Permutation::trim() {
  while (!word_.empty() && word_.back() == static_cast<int>(word_.size()))
    word_.pop_back();
}

Permutation Permutation::from_one_line(std::span<const int> entries) {
  const int m = static_cast<int>(entries.size());
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int e : entries) {
    if (e < 1 || e > m)
      throw PermutationError("entry " + std::to_string(e) +
                             " outside 1.." + std::to_string(m));
    if (seen[static_cast<std::size_t>(e)])
      throw PermutationError("duplicate entry " + std::to_string(e));
    seen[static_cast<std::size_t>(e)] = true;
  }
  return Permutation(std::vector<int>(entries.begin(), entries.end()));
}

Permutation Permutation::parse(std::string_view text) {
  std::string_view body = strip(text);
  if (body.empty() || body == "id") return Permutation();
  std::vector<int> entries;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      if (comma == std::string_view::npos) comma = body.size();
      entries.push_back(
          parse_entry(text, strip(body.substr(start, comma - start))));
      start = comma + 1;
    }
  } else {
    for (std::size_t k = 0; k < body.size(); ++k) {
      char c = body[k];
      if (c >= '1' && c <= '9') {
        entries.push_back(c - '0');
      } else if (c == '(') {
        std::size_t close = body.find(')', k);
        if (close == std::string_view::npos) throw bad_token(text, body.substr(k));
        entries.push_back(parse_entry(text, body.substr(k + 1, close - k - 1)));
        k = close;
      } else {
        throw bad_token(text, body.substr(k, 1));
      }
    }
  }
  try {
    return from_one_line(entries);
  } catch (const PermutationError& e) {
    throw PermutationError("invalid permutation '" + std::string(text) +
                           "': " + e.what());
  }
}

Permutation Permutation::from_lehmer_code(std::span<const int> code) {
  const int m = static_cast<int>(code.size());
  std::vector<int> available(static_cast<std::size_t>(m));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    int c = code[static_cast<std::size_t>(k)];
    if (c < 0 || c > m - 1 - k)
      throw PermutationError("infeasible Lehmer code: entry " +
                             std::to_string(k + 1) + " is " +
                             std::to_string(c));
    word.push_back(available[static_cast<std::size_t>(c)]);
    available.erase(available.begin() + c);
  }
  return Permutation(std::move(word));
}

Permutation Permutation::simple(int i) { return transposition(i, i + 1); }

Permutation Permutation::transposition(int i, int j) {
  if (i < 1 || j < 1) throw PermutationError("transposition index below 1");
  std::vector<int> word(static_cast<std::size_t>(std::max(i, j)));
  std::iota(word.begin(), word.end(), 1);
  std::swap(word[static_cast<std::size_t>(i - 1)],
            word[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(word));
}

Permutation Permutation::long_element(int n) {
  if (n < 1) throw PermutationError("long_element requires n >= 1");
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) word[static_cast<std::size_t>(k)] = n - k;
  return Permutation(std::move(word));
}

std::vector<int> Permutation::word(int n) const {
  std::vector<int> out(word_);
  for (int k = size() + 1; k <= n; ++k) out.push_back(k);
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < word_.size(); ++a)
    for (std::size_t b = a + 1; b < word_.size(); ++b)
      if (word_[a] > word_[b]) ++inv;
  return inv;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i)
    if (has_descent(i)) out.push_back(i);
  return out;
}

bool Permutation::has_left_descent(int i) const {
  // w^{-1}(i) > w^{-1}(i+1) iff the letter i+1 appears before the letter i.
  if (i >= size()) return false;
  for (int v : word_) {
    if (v == i + 1) return true;
    if (v == i) return false;
  }
  return false;
}

std::vector<int> Permutation::left_descents() const {
  return inverse().descents();
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t k = 0; k < word_.size(); ++k)
    inv[static_cast<std::size_t>(word_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(word_.size(), 0);
  for (std::size_t a = 0; a < word_.size(); ++a)
    for (std::size_t b = a + 1; b < word_.size(); ++b)
      if (word_[b] < word_[a]) ++code[a];
  return code;
}

std::string Permutation::to_string() const {
  if (word_.empty()) return "1";
  const bool compact =
      std::all_of(word_.begin(), word_.end(), [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += std::to_string(word_[k]);
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int m = std::max(u.size(), v.size());
  std::vector<int> word(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) word[static_cast<std::size_t>(k - 1)] = u(v(k));
  return Permutation(std::move(word));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  const int m = std::max(a.size(), b.size());
  for (int k = 1; k <= m; ++k)
    if (auto c = a(k) <=> b(k); c != 0) return c;
  return std::strong_ordering::equal;
}

Permutation left_s(int i, const Permutation& w) {
  if (i < 1) throw PermutationError("simple reflection index below 1");
  std::vector<int> word = w.word(std::max(w.size(), i + 1));
  for (int& v : word) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation::from_one_line(word);
}

Permutation right_s(const Permutation& w, int i) {
  if (i < 1) throw PermutationError("simple reflection index below 1");
  std::vector<int> word = w.word(std::max(w.size(), i + 1));
  std::swap(word[static_cast<std::size_t>(i - 1)],
            word[static_cast<std::size_t>(i)]);
  return Permutation::from_one_line(word);
}

int maj(const Permutation& w) {
  int total = 0;
  for (int d : w.descents()) total += d;
  return total;
}

Permutation one_times(const Permutation& w) {
  if (w.is_identity()) return w;
  std::vector<int> word{1};
  for (int v : w.word()) word.push_back(v + 1);
  return Permutation::from_one_line(word);
}

bool is_grassmannian(const Permutation& w) { return w.descents().size() == 1; }

bool is_inverse_grassmannian(const Permutation& w) {
  return w.left_descents().size() == 1;
}

bool left_weak_leq(const Permutation& u, const Permutation& w) {
  return (w * u.inverse()).length() + u.length() == w.length();
}

namespace {

void collect_reduced_words(const Permutation& w, std::vector<int>& suffix,
                           std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  // A reduced word of w ends in a iff a is a right descent of w.
  for (int a : w.descents()) {
    suffix.push_back(a);
    collect_reduced_words(right_s(w, a), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation from_word(std::span<const int> letters) {
  Permutation w;
  for (int a : letters) w = right_s(w, a);
  return w;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace schubert

std::size_t std::hash<schubert::Permutation>::operator()(
    const schubert::Permutation& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : w.word())
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
