#pragma once

// Sparse multivariate polynomials in x_1, x_2, ... over Z or Z[b], and the
// divided-difference and differential operators acting on them.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include "schubert/coefficient.hpp"

namespace schubert {

template <typename C>
concept CoefficientRing = std::same_as<C, Integer> || std::same_as<C, BetaPoly>;

/// Raised when an exact division leaves a remainder.  Seeing one means the
/// arithmetic is broken; it is never an input error.
class ArithmeticIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponent vector over x_1, x_2, ... with trailing zeros trimmed.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(int i, int power = 1);

  /// Exponent of x_i (1-based); zero beyond the stored range.
  int exponent(int i) const {
    return i >= 1 && i <= num_vars() ? exps_[static_cast<std::size_t>(i - 1)] : 0;
  }
  /// Index of the last variable with nonzero exponent.
  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }
  std::vector<int> exponents() const { return {exps_.begin(), exps_.end()}; }

  Monomial operator*(const Monomial& o) const;
  /// Same monomial with the exponent of x_i replaced by e.
  Monomial with_exponent(int i, int e) const;
  /// Swaps the exponents of x_i and x_{i+1}.
  Monomial swapped(int i) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  /// Plain lexicographic comparison of exponent vectors.
  friend bool lex_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(),
                                        b.exps_.begin(), b.exps_.end());
  }
  friend std::size_t hash_value(const Monomial& m) {
    return boost::hash_range(m.exps_.begin(), m.exps_.end());
  }

 private:
  void trim();
  boost::container::small_vector<Exponent, 10> exps_;
  int degree_ = 0;
};

/// Storage and printing order: ascending total degree, then descending
/// lexicographic order within a degree (x1^2*x2 before x1*x3).
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_less(b, a);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return hash_value(m); }
};

template <CoefficientRing C>
class Polynomial {
 public:
  using Coefficient = C;
  using Term = std::pair<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(const C& constant) {
    if (!schubert::is_zero(constant)) terms_.emplace_back(Monomial(), constant);
  }

  static Polynomial monomial(const Monomial& m, const C& c = C(1)) {
    Polynomial p;
    if (!schubert::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  static Polynomial variable(int i) { return monomial(Monomial::variable(i)); }

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return CanonicalOrder{}(a.first, b.first);
    });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (schubert::is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!schubert::is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.back().first.degree(); }
  int min_degree() const {
    return terms_.empty() ? -1 : terms_.front().first.degree();
  }
  /// Largest i such that x_i occurs.
  int num_vars() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.num_vars());
    return n;
  }
  bool is_homogeneous() const { return is_zero() || min_degree() == degree(); }

  C coeff(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return CanonicalOrder{}(t.first, key); });
    return it != terms_.end() && it->first == m ? it->second : C();
  }

  Polynomial homogeneous_component(int d) const {
    Polynomial p;
    for (const auto& t : terms_)
      if (t.first.degree() == d) p.terms_.push_back(t);
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, true);
  }
  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
    if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!schubert::is_zero(c)) terms.emplace_back(m, std::move(c));
    return from_terms(std::move(terms));
  }
  friend Polynomial operator*(Polynomial a, const C& c) {
    if (schubert::is_zero(c)) return {};
    for (auto& t : a.terms_) t.second *= c;
    return a;
  }
  friend Polynomial operator*(const C& c, Polynomial a) { return std::move(a) * c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    CanonicalOrder less;
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && less(ia->first, ib->first))) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || less(ib->first, ia->first)) {
        out.terms_.emplace_back(ib->first, subtract ? C(-ib->second) : ib->second);
        ++ib;
      } else {
        C c = subtract ? C(ia->second - ib->second) : C(ia->second + ib->second);
        if (!schubert::is_zero(c)) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

using IntPoly = Polynomial<Integer>;
using BetaPolynomial = Polynomial<BetaPoly>;

/// s_i . f: swaps x_i and x_{i+1}.
template <CoefficientRing C>
Polynomial<C> swap_variables(const Polynomial<C>& f, int i) {
  std::vector<typename Polynomial<C>::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m.swapped(i), c);
  return Polynomial<C>::from_terms(std::move(terms));
}

/// Exact quotient g / (x_i - x_{i+1}); throws ArithmeticIntegrityError if
/// the division leaves a remainder.
template <CoefficientRing C>
Polynomial<C> divide_by_difference(const Polynomial<C>& g, int i) {
  // Long division in x_i, fibre by fibre over the remaining variables.
  using Fibre = std::map<std::pair<int, int>, C, std::greater<>>;
  std::unordered_map<Monomial, Fibre, MonomialHash> fibres;
  for (const auto& [m, c] : g.terms()) {
    Monomial rest = m.with_exponent(i, 0).with_exponent(i + 1, 0);
    fibres[rest][{m.exponent(i), m.exponent(i + 1)}] += c;
  }
  std::vector<typename Polynomial<C>::Term> quotient;
  for (auto& [rest, fibre] : fibres) {
    while (!fibre.empty()) {
      auto top = fibre.begin();
      auto [p, q] = top->first;
      C c = top->second;
      fibre.erase(top);
      if (schubert::is_zero(c)) continue;
      if (p == 0)
        throw ArithmeticIntegrityError(
            "division by (x_" + std::to_string(i) + " - x_" + std::to_string(i + 1) +
            ") left a remainder");
      quotient.emplace_back(rest.with_exponent(i, p - 1).with_exponent(i + 1, q), c);
      auto& next = fibre[{p - 1, q + 1}];
      next += c;
    }
  }
  return Polynomial<C>::from_terms(std::move(quotient));
}

/// N_i(f) = (f - s_i f) / (x_i - x_{i+1}).
template <CoefficientRing C>
Polynomial<C> divided_difference(int i, const Polynomial<C>& f) {
  if (i < 1) throw std::invalid_argument("divided difference index below 1");
  return divide_by_difference(f - swap_variables(f, i), i);
}

/// N_i((1 - x_{i+1}) f).
IntPoly isobaric_divided_difference(int i, const IntPoly& f);

/// N_i((1 + b x_{i+1}) f), the operator generating beta-Grothendieck
/// polynomials.
BetaPolynomial beta_divided_difference(int i, const BetaPolynomial& f);

/// Sum over i of d/dx_i.
template <CoefficientRing C>
Polynomial<C> nabla(const Polynomial<C>& f) {
  std::vector<typename Polynomial<C>::Term> terms;
  for (const auto& [m, c] : f.terms())
    for (int i = 1; i <= m.num_vars(); ++i)
      if (int e = m.exponent(i); e > 0)
        terms.emplace_back(m.with_exponent(i, e - 1), c * C(e));
  return Polynomial<C>::from_terms(std::move(terms));
}

/// Sum over i of x_i d/dx_i; scales each monomial by its x-degree.
template <CoefficientRing C>
Polynomial<C> euler(const Polynomial<C>& f) {
  std::vector<typename Polynomial<C>::Term> terms;
  for (const auto& [m, c] : f.terms())
    if (m.degree() > 0) terms.emplace_back(m, c * C(m.degree()));
  return Polynomial<C>::from_terms(std::move(terms));
}

/// nabla + b^2 d/db, with d/db acting on the coefficients only.
BetaPolynomial nabla_beta(const BetaPolynomial& f);

/// f(1, 1, ...).
template <CoefficientRing C>
C specialize_ones(const Polynomial<C>& f) {
  C total{};
  for (const auto& [m, c] : f.terms()) total += c;
  return total;
}

/// Substitutes b -> value.
IntPoly specialize_beta(const BetaPolynomial& f, const Integer& value);

/// Embeds Z[x] into Z[b][x].
BetaPolynomial lift_to_beta(const IntPoly& f);

/// Converts a b-free polynomial back to Z[x]; throws std::domain_error if
/// any coefficient involves b.
IntPoly drop_beta(const BetaPolynomial& f);

template <CoefficientRing C>
C coeff_of(const Polynomial<C>& f, const Monomial& m) {
  return f.coeff(m);
}

/// f(0, x_1, x_2, ...): keeps the terms free of x_1 and shifts indices down.
template <CoefficientRing C>
Polynomial<C> substitute_zero_and_shift(const Polynomial<C>& f) {
  std::vector<typename Polynomial<C>::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m.exponent(1) != 0) continue;
    std::vector<int> exps = m.exponents();
    if (!exps.empty()) exps.erase(exps.begin());
    terms.emplace_back(Monomial(exps), c);
  }
  return Polynomial<C>::from_terms(std::move(terms));
}

}  // namespace schubert
