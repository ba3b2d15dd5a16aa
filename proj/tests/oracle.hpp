#pragma once

// Reference implementations used as test oracles.  They share no code with
// the library: permutations are plain padded one-line vectors, polynomials
// are std::map from padded exponent vectors to int64, and every quantity is
// computed straight from its definition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "schubert/polynomial.hpp"

namespace oracle {

using Word = std::vector<int>;  // w(1), ..., w(n)
using Poly = std::map<std::vector<int>, std::int64_t>;

inline Word identity(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline Word pad(Word w, int n) {
  for (int k = static_cast<int>(w.size()) + 1; k <= n; ++k) w.push_back(k);
  return w;
}

inline int inversions(const Word& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  return count;
}

inline Word compose(const Word& a, const Word& b) {  // (ab)(k) = a(b(k))
  Word out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[static_cast<std::size_t>(b[k] - 1)];
  return out;
}

inline Word inverse(const Word& w) {
  Word out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[static_cast<std::size_t>(w[k] - 1)] = int(k) + 1;
  return out;
}

inline std::vector<int> descents(const Word& w) {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] > w[k + 1]) out.push_back(int(k) + 1);
  return out;
}

inline std::vector<int> left_descents(const Word& w) { return descents(inverse(w)); }

inline std::vector<int> lehmer(const Word& w) {
  std::vector<int> code(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) code[i] += w[j] < w[i];
  return code;
}

inline Word swap_positions(Word w, int i) {
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return w;
}

/// Drops trailing fixed points.
inline Word trim(Word w) {
  while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
  return w;
}

inline Word long_element(int n) {
  Word w = identity(n);
  std::reverse(w.begin(), w.end());
  return w;
}

/// u <=_L w iff l(w u^{-1}) + l(u) = l(w).
inline bool left_weak_leq(const Word& u, const Word& w) {
  return inversions(compose(w, inverse(u))) + inversions(u) == inversions(w);
}

/// Tableau criterion: u <= w iff every sorted prefix of u is entrywise
/// below the sorted prefix of w.
inline bool bruhat_leq(const Word& u, const Word& w) {
  for (std::size_t k = 1; k <= u.size(); ++k) {
    Word a(u.begin(), u.begin() + static_cast<long>(k));
    Word b(w.begin(), w.begin() + static_cast<long>(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < k; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

/// All words a_1..a_l with s_{a_1}...s_{a_l} = w and l = l(w).
inline std::vector<std::vector<int>> reduced_words(const Word& w) {
  const int n = static_cast<int>(w.size());
  const int target = inversions(w);
  std::vector<std::vector<int>> out;
  std::vector<int> letters;
  auto dfs = [&](auto&& self, const Word& p) -> void {
    if (static_cast<int>(letters.size()) == target) {
      if (p == w) out.push_back(letters);
      return;
    }
    for (int a = 1; a < n; ++a) {
      Word q = swap_positions(p, a);
      if (inversions(q) != int(letters.size()) + 1) continue;
      // Prune: q must stay below w in right weak order.
      if (inversions(compose(inverse(q), w)) + inversions(q) != target) continue;
      letters.push_back(a);
      self(self, q);
      letters.pop_back();
    }
  };
  dfs(dfs, identity(n));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials in x_1..x_nv

inline void add_to(Poly& f, const std::vector<int>& m, std::int64_t c) {
  if ((f[m] += c) == 0) f.erase(m);
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      add_to(out, m, ca * cb);
    }
  return out;
}

inline Poly monomial(std::vector<int> exps, std::int64_t c = 1) {
  Poly p;
  if (c != 0) p[std::move(exps)] = c;
  return p;
}

/// N_i on each monomial via
/// (x^a y^b - x^b y^a)/(x - y) = sum_{t=0}^{a-b-1} x^{a-1-t} y^{b+t} for a > b.
inline Poly divided_difference(int i, const Poly& f) {
  Poly out;
  const auto xi = static_cast<std::size_t>(i - 1);
  for (const auto& [m, c] : f) {
    const int a = m[xi], b = m[xi + 1];
    if (a == b) continue;
    const int hi = std::max(a, b), lo = std::min(a, b);
    const std::int64_t sign = a > b ? 1 : -1;
    for (int t = 0; t < hi - lo; ++t) {
      std::vector<int> e = m;
      e[xi] = hi - 1 - t;
      e[xi + 1] = lo + t;
      add_to(out, e, sign * c);
    }
  }
  return out;
}

inline Poly isobaric(int i, const Poly& f, std::size_t nv) {
  Poly factor = monomial(std::vector<int>(nv, 0));
  std::vector<int> e(nv, 0);
  e[static_cast<std::size_t>(i)] = 1;
  add_to(factor, e, -1);
  return divided_difference(i, multiply(factor, f));
}

/// Letters L with w0 = w s_{L_last} ... s_{L_first}, found by peeling right
/// descents off y = w^{-1} w0.  Applying N_{L_first}, N_{L_second}, ... to
/// the w0 polynomial walks down to w.
inline std::vector<int> descent_path(const Word& w) {
  const int n = static_cast<int>(w.size());
  Word y = compose(inverse(w), long_element(n));
  std::vector<int> path;
  while (inversions(y) > 0) {
    const int i = descents(y).front();
    path.push_back(i);
    y = swap_positions(y, i);
  }
  return path;
}

/// Top-down recursion from the staircase monomial of S_n (n >= size of w).
inline Poly schubert(const Word& w, bool isobaric_step = false) {
  const int n = std::max<int>(1, static_cast<int>(w.size()));
  const auto nv = static_cast<std::size_t>(n);
  std::vector<int> staircase(nv);
  for (int k = 0; k < n; ++k) staircase[static_cast<std::size_t>(k)] = n - 1 - k;
  Poly f = monomial(staircase);
  for (int i : descent_path(pad(w, n)))
    f = isobaric_step ? isobaric(i, f, nv) : divided_difference(i, f);
  return f;
}

inline Poly grothendieck(const Word& w) { return schubert(w, true); }

inline schubert::IntPoly to_library(const Poly& f) {
  std::vector<schubert::IntPoly::Term> terms;
  for (const auto& [m, c] : f) terms.emplace_back(schubert::Monomial(m), schubert::Integer(c));
  return schubert::IntPoly::from_terms(std::move(terms));
}

/// G^b_w = (-b)^{-l(w)} G_w(-b x): a term c x^a picks up (-b)^{|a| - l(w)}.
inline schubert::BetaPolynomial beta_grothendieck(const Word& w) {
  const int len = inversions(w);
  std::vector<schubert::BetaPolynomial::Term> terms;
  for (const auto& [m, c] : grothendieck(w)) {
    const int excess = std::accumulate(m.begin(), m.end(), 0) - len;
    const std::int64_t signed_c = excess % 2 == 0 ? c : -c;
    terms.emplace_back(schubert::Monomial(m),
                       schubert::BetaPoly::term(schubert::Integer(signed_c), excess));
  }
  return schubert::BetaPolynomial::from_terms(std::move(terms));
}

/// Permutation of S_n with the given Lehmer code, by choosing the
/// (code_k + 1)-th smallest unused letter at each position.
inline Word from_code(const std::vector<int>& code, int n) {
  Word w;
  std::vector<int> unused(static_cast<std::size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);
  for (int k = 0; k < n; ++k) {
    const int c = k < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(k)] : 0;
    w.push_back(unused.at(static_cast<std::size_t>(c)));
    unused.erase(unused.begin() + c);
  }
  return w;
}

/// Schubert expansion of a homogeneous polynomial in nv variables.  The
/// lex-smallest monomial of S_w is x^{code(w)}; repeatedly strip it.
inline std::map<Word, std::int64_t> expand(Poly f, std::size_t nv) {
  std::map<Word, std::int64_t> out;
  while (!f.empty()) {
    const auto [m, c] = *f.begin();
    int n = static_cast<int>(nv);
    for (std::size_t k = 0; k < m.size(); ++k) n = std::max(n, int(k) + 1 + m[k]);
    const Word w = trim(from_code(m, n));
    Poly s = schubert(w);
    // Re-embed s into nv variables (extra trailing variables are absent).
    Poly shifted;
    for (const auto& [e, d] : s) {
      std::vector<int> padded = e;
      padded.resize(std::max(nv, e.size()), 0);
      for (std::size_t k = nv; k < padded.size(); ++k)
        if (padded[k] != 0) throw std::logic_error("oracle expansion needs more variables");
      padded.resize(nv);
      add_to(shifted, padded, d);
    }
    for (const auto& [e, d] : shifted) add_to(f, e, -c * d);
    out[w] = c;
  }
  return out;
}

/// S_u * S_v in the Schubert basis, with u, v in S_n; products land in
/// S_{2n} at most, so everything is computed in 2n variables.
inline std::map<Word, std::int64_t> product(const Word& u, const Word& v) {
  const std::size_t nv = 2 * std::max({u.size(), v.size(), std::size_t{1}});
  auto embed = [nv](const Poly& p) {
    Poly out;
    for (const auto& [e, c] : p) {
      std::vector<int> padded = e;
      padded.resize(nv, 0);
      out[padded] = c;
    }
    return out;
  };
  return expand(multiply(embed(schubert(u)), embed(schubert(v))), nv);
}

}  // namespace oracle
