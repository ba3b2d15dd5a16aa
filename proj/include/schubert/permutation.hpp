#pragma once

// Finitary permutations of {1, 2, 3, ...} in trimmed one-line notation.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of S_infinity.
///
/// The one-line word w(1)...w(m) is stored with trailing fixed points
/// removed, so S_n sits inside S_{n+1} without any bookkeeping: 132 and 1324
/// are the same object, and the identity is the empty word.  Composition
/// follows (uv)(k) = u(v(k)).
class Permutation {
 public:
  Permutation() = default;

  /// Accepts any bijection of {1..m}; rejects duplicates and out-of-range
  /// entries.
  static Permutation from_one_line(std::span<const int> entries);
  static Permutation from_one_line(std::initializer_list<int> entries) {
    return from_one_line(std::span<const int>(entries.begin(), entries.size()));
  }

  /// Parses "14253", "4,7,9,3,1,2,5,6,8,10" or "37(10)4125689".
  /// "id" and "" denote the identity.
  static Permutation parse(std::string_view text);

  /// Inverse of lehmer_code(): code[k-1] = #{j > k : w(j) < w(k)}.
  /// The ambient rank is code.size(); code[k-1] must not exceed size-k.
  static Permutation from_lehmer_code(std::span<const int> code);

  static Permutation simple(int i);
  /// t_{i,j}: swaps i and j.
  static Permutation transposition(int i, int j);
  /// w0 = n(n-1)...1 in S_n.
  static Permutation long_element(int n);

  /// w(k) for any positive k; fixed beyond the stored word.
  int operator()(int k) const {
    return k <= size() ? word_[static_cast<std::size_t>(k - 1)] : k;
  }

  /// Largest non-fixed point (0 for the identity).
  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  /// One-line word padded with fixed points to length n (n >= size()).
  std::vector<int> word(int n) const;
  bool is_identity() const { return word_.empty(); }

  /// Number of inversions, which is the Coxeter length.
  int length() const;
  /// Right descents {i : w(i) > w(i+1)}, ascending.
  std::vector<int> descents() const;
  /// {i : w^{-1}(i) > w^{-1}(i+1)}, ascending.
  std::vector<int> left_descents() const;
  bool has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  bool has_left_descent(int i) const;

  Permutation inverse() const;

  /// Lehmer code of length size().
  std::vector<int> lehmer_code() const;

  /// Compact digits when every entry is at most 9, commas otherwise.  The
  /// identity renders as "1".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order on the infinite one-line words.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  explicit Permutation(std::vector<int> word);
  void trim();

  std::vector<int> word_;
};

/// s_i w: swaps the letters i and i+1.
Permutation left_s(int i, const Permutation& w);
/// w s_i: swaps the entries in positions i and i+1.
Permutation right_s(const Permutation& w, int i);

inline int length(const Permutation& w) { return w.length(); }
inline Permutation inverse(const Permutation& w) { return w.inverse(); }
inline std::vector<int> descents(const Permutation& w) { return w.descents(); }
inline std::vector<int> left_descents(const Permutation& w) {
  return w.left_descents();
}
inline std::vector<int> lehmer_code(const Permutation& w) {
  return w.lehmer_code();
}

/// Sum of the descents of w.
int maj(const Permutation& w);

/// 1 x w: fixes 1 and shifts w up by one.
Permutation one_times(const Permutation& w);

bool is_grassmannian(const Permutation& w);
bool is_inverse_grassmannian(const Permutation& w);

/// u <=_L w, i.e. w = v u with l(v) + l(u) = l(w).
bool left_weak_leq(const Permutation& u, const Permutation& w);

/// Every reduced word of w, in lexicographic order.  The count grows
/// exponentially with length(w).
std::vector<std::vector<int>> reduced_words(const Permutation& w);

/// Product s_{a_1} ... s_{a_k}.
Permutation from_word(std::span<const int> letters);

/// All of S_n (trimmed), in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schubert

template <>
struct std::hash<schubert::Permutation> {
  std::size_t operator()(const schubert::Permutation& w) const noexcept;
};
