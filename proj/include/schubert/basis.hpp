#pragma once

// Schubert, Grothendieck and beta-Grothendieck polynomials, expansion of
// arbitrary polynomials in those bases, and the resulting structure
// coefficients.

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

enum class Basis { schubert, grothendieck, beta_grothendieck };

std::string_view basis_name(Basis basis);
std::optional<Basis> parse_basis(std::string_view name);

/// Raised when basis elimination cannot make progress.  Indicates a broken
/// term-order assumption, never bad input.
class ExpansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f = sum of coefficient * basis polynomial, with only nonzero
/// coefficients stored.
template <CoefficientRing C>
struct SchubertExpansion {
  Basis basis = Basis::schubert;
  std::map<Permutation, C> terms;

  C coefficient(const Permutation& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? C() : it->second;
  }
  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
  friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;
};

using Expansion = SchubertExpansion<Integer>;
using BetaExpansion = SchubertExpansion<BetaPoly>;

/// Lexicographically smallest exponent vector in the lowest-degree
/// component.  For a Schubert polynomial this is x^{code(w)}.
template <CoefficientRing C>
Monomial elimination_leading_monomial(const Polynomial<C>& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
  const int d = f.min_degree();
  const auto& terms = f.terms();
  std::size_t k = 0;
  while (k + 1 < terms.size() && terms[k + 1].first.degree() == d) ++k;
  return terms[k].first;
}

/// Permutation whose Lehmer code is the exponent vector of m.
Permutation permutation_of_code(const Monomial& m);

/// Trimmed Lehmer code, the cache key of a basis polynomial.
std::vector<int> code_key(const Permutation& w);

/// Memoising calculator.  Basis polynomials and product expansions are
/// cached; lookups may run concurrently with each other and with insertion.
class Engine {
 public:
  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const IntPoly& schubert(const Permutation& w);
  const IntPoly& grothendieck(const Permutation& w);
  const BetaPolynomial& beta_grothendieck(const Permutation& w);

  Expansion expand_in_schubert(const IntPoly& f);
  BetaExpansion expand_in_schubert(const BetaPolynomial& f);
  Expansion expand_in_grothendieck(const IntPoly& f);
  /// Expansion in the beta-Grothendieck basis.
  BetaExpansion expand_in_grothendieck(const BetaPolynomial& f);

  IntPoly recompose(const Expansion& e);
  BetaPolynomial recompose(const BetaExpansion& e);

  /// S_u * S_v in the Schubert basis.
  const Expansion& product_expansion(const Permutation& u, const Permutation& v);
  Integer structure_coeff(const Permutation& u, const Permutation& v,
                          const Permutation& w);
  /// product_expansion() by value.  With retention off the result is
  /// computed without being stored, so long sweeps stay within memory.
  Expansion product_by_value(const Permutation& u, const Permutation& v);
  void set_product_retention(bool retain) { retain_products_ = retain; }

  /// G_u * G_v in the Grothendieck basis.
  const Expansion& k_product_expansion(const Permutation& u, const Permutation& v);
  /// G^b_u * G^b_v in the beta-Grothendieck basis.
  const BetaExpansion& k_product_expansion_beta(const Permutation& u,
                                                const Permutation& v);
  Integer k_coeff(const Permutation& u, const Permutation& v, const Permutation& w);
  BetaPoly k_coeff_beta(const Permutation& u, const Permutation& v,
                        const Permutation& w);

  /// Cached basis polynomials keyed by trimmed Lehmer code.
  std::map<std::vector<int>, IntPoly> cached(Basis basis) const;
  std::map<std::vector<int>, BetaPolynomial> cached_beta() const;
  void preload(Basis basis, const std::vector<int>& code, IntPoly poly);
  void preload_beta(const std::vector<int>& code, BetaPolynomial poly);

  /// Visit every memoised product expansion together with its factors.
  template <typename F>
  void for_each_product(F&& f) const {
    products_.for_each([&](const PairKey& k, const Expansion& e) { f(k.first, k.second, e); });
  }
  template <typename F>
  void for_each_k_product(F&& f) const {
    k_products_.for_each([&](const PairKey& k, const Expansion& e) { f(k.first, k.second, e); });
  }
  template <typename F>
  void for_each_beta_product(F&& f) const {
    beta_products_.for_each(
        [&](const PairKey& k, const BetaExpansion& e) { f(k.first, k.second, e); });
  }

  /// Number of basis polynomials computed (not preloaded) by this engine.
  std::size_t generated_count() const;

 private:
  template <typename Key, typename Value, typename Hash = boost::hash<Key>>
  class Memo {
   public:
    const Value* find(const Key& key) const {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      return it == map_.end() ? nullptr : it->second.get();
    }
    // First insertion wins; later racers get the stored value.
    const Value& insert(const Key& key, Value value) {
      std::unique_lock lock(mutex_);
      auto [it, fresh] = map_.try_emplace(key, nullptr);
      if (fresh) it->second = std::make_unique<const Value>(std::move(value));
      return *it->second;
    }
    template <typename F>
    void for_each(F&& f) const {
      std::shared_lock lock(mutex_);
      for (const auto& [k, v] : map_) f(k, *v);
    }

   private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, std::unique_ptr<const Value>, Hash> map_;
  };

  using CodeKey = std::vector<int>;
  using PairKey = std::pair<Permutation, Permutation>;
  struct PairHash {
    std::size_t operator()(const PairKey& k) const {
      std::size_t h = std::hash<Permutation>{}(k.first);
      boost::hash_combine(h, std::hash<Permutation>{}(k.second));
      return h;
    }
  };

  template <CoefficientRing C>
  SchubertExpansion<C> eliminate_schubert(const Polynomial<C>& f);
  template <CoefficientRing C>
  SchubertExpansion<C> peel_grothendieck(const Polynomial<C>& f, Basis basis);
  template <CoefficientRing C>
  const Polynomial<C>& k_basis(const Permutation& w);

  Memo<CodeKey, IntPoly> schubert_;
  Memo<CodeKey, IntPoly> grothendieck_;
  Memo<CodeKey, BetaPolynomial> beta_;
  Memo<PairKey, Expansion, PairHash> products_;
  Memo<PairKey, Expansion, PairHash> k_products_;
  Memo<PairKey, BetaExpansion, PairHash> beta_products_;
  std::atomic<std::size_t> generated_{0};
  std::atomic<bool> retain_products_{true};
};

/// Process-wide engine used by the free functions below.
Engine& default_engine();

inline const IntPoly& schubert_poly(const Permutation& w) {
  return default_engine().schubert(w);
}
inline const IntPoly& grothendieck_poly(const Permutation& w) {
  return default_engine().grothendieck(w);
}
inline const BetaPolynomial& beta_grothendieck_poly(const Permutation& w) {
  return default_engine().beta_grothendieck(w);
}
inline Integer structure_coeff(const Permutation& u, const Permutation& v,
                               const Permutation& w) {
  return default_engine().structure_coeff(u, v, w);
}

/// (-b)^{-l(w)} G_w(-b x_1, -b x_2, ...), computed from G_w directly.
BetaPolynomial beta_grothendieck_by_rescaling(const IntPoly& grothendieck, int length);

}  // namespace schubert
