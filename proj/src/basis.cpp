#include "schubert/basis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "schubert/polynomial_text.hpp"

namespace schubert {

std::string_view basis_name(Basis basis) {
  switch (basis) {
    case Basis::schubert:
      return "schubert";
    case Basis::grothendieck:
      return "grothendieck";
    case Basis::beta_grothendieck:
      return "beta-grothendieck";
  }
  return "?";
}

std::optional<Basis> parse_basis(std::string_view name) {
  if (name == "schubert") return Basis::schubert;
  if (name == "grothendieck") return Basis::grothendieck;
  if (name == "beta-grothendieck" || name == "grothendieck-beta")
    return Basis::beta_grothendieck;
  return std::nullopt;
}

Permutation permutation_of_code(const Monomial& m) {
  std::vector<int> code = m.exponents();
  // Smallest rank n with code[k-1] <= n - k for every k.
  int n = static_cast<int>(code.size());
  for (int k = 1; k <= static_cast<int>(code.size()); ++k)
    n = std::max(n, k + code[static_cast<std::size_t>(k - 1)]);
  code.resize(static_cast<std::size_t>(n), 0);
  return Permutation::from_lehmer_code(code);
}

std::vector<int> code_key(const Permutation& w) {
  std::vector<int> code = w.lehmer_code();
  while (!code.empty() && code.back() == 0) code.pop_back();
  return code;
}

namespace {

// First i with code[i] < code[i+1] (1-based); 0 when the code is weakly
// decreasing, i.e. the permutation is dominant and its basis polynomial is
// the monomial x^code.
int first_code_ascent(const std::vector<int>& code) {
  for (std::size_t k = 0; k + 1 < code.size(); ++k)
    if (code[k] < code[k + 1]) return static_cast<int>(k) + 1;
  return 0;
}

template <CoefficientRing C>
Polynomial<C> scaled(const IntPoly& f, const C& a) {
  if constexpr (std::is_same_v<C, Integer>) {
    return f * a;
  } else {
    return lift_to_beta(f) * a;
  }
}

// Number of monomials of degree d in n variables, saturating.
std::size_t monomial_count(int d, int n) {
  if (n <= 0) return d == 0 ? 1 : 0;
  double count = 1;
  for (int k = 1; k <= n - 1; ++k) count = count * (d + k) / k;
  if (count > 1e18) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::llround(count));
}

}  // namespace

const IntPoly& Engine::schubert(const Permutation& w) {
  CodeKey key = code_key(w);
  if (const IntPoly* hit = schubert_.find(key)) return *hit;
  // S_w = N_i S_{w s_i} for an ascent i of w; climbing ascents of the code
  // ends at a dominant permutation.
  IntPoly poly;
  if (int i = first_code_ascent(key); i == 0)
    poly = IntPoly::monomial(Monomial(key));
  else
    poly = divided_difference(i, schubert(right_s(w, i)));
  ++generated_;
  return schubert_.insert(key, std::move(poly));
}

const IntPoly& Engine::grothendieck(const Permutation& w) {
  CodeKey key = code_key(w);
  if (const IntPoly* hit = grothendieck_.find(key)) return *hit;
  IntPoly poly;
  if (int i = first_code_ascent(key); i == 0)
    poly = IntPoly::monomial(Monomial(key));
  else
    poly = isobaric_divided_difference(i, grothendieck(right_s(w, i)));
  ++generated_;
  return grothendieck_.insert(key, std::move(poly));
}

const BetaPolynomial& Engine::beta_grothendieck(const Permutation& w) {
  CodeKey key = code_key(w);
  if (const BetaPolynomial* hit = beta_.find(key)) return *hit;
  BetaPolynomial poly;
  if (int i = first_code_ascent(key); i == 0)
    poly = BetaPolynomial::monomial(Monomial(key), BetaPoly(1));
  else
    poly = beta_divided_difference(i, beta_grothendieck(right_s(w, i)));
  ++generated_;
  return beta_.insert(key, std::move(poly));
}

template <CoefficientRing C>
SchubertExpansion<C> Engine::eliminate_schubert(const Polynomial<C>& f) {
  SchubertExpansion<C> out;
  out.basis = Basis::schubert;
  Polynomial<C> residual = f;
  const int vars = f.num_vars();
  int current_degree = -1;
  std::size_t steps = 0;
  Monomial previous;
  while (!residual.is_zero()) {
    const Monomial lead = elimination_leading_monomial(residual);
    const int d = lead.degree();
    if (d != current_degree) {
      if (d < current_degree)
        throw ExpansionError("Schubert elimination reintroduced degree " +
                             std::to_string(d));
      current_degree = d;
      steps = 0;
    } else if (!lex_less(previous, lead)) {
      throw ExpansionError("Schubert elimination stalled at " + to_string(lead));
    }
    if (++steps > monomial_count(d, vars))
      throw ExpansionError("Schubert elimination exceeded its bound in degree " +
                           std::to_string(d));
    previous = lead;

    const C a = residual.coeff(lead);
    const Permutation w = permutation_of_code(lead);
    const IntPoly& basis_poly = schubert(w);
    if (elimination_leading_monomial(basis_poly) != lead || basis_poly.coeff(lead) != 1)
      throw ExpansionError("leading monomial of S_" + w.to_string() +
                           " is not x^code");
    residual -= scaled<C>(basis_poly, a);
    if (!out.terms.emplace(w, a).second)
      throw ExpansionError("S_" + w.to_string() + " selected twice");
  }
  return out;
}

template <CoefficientRing C>
const Polynomial<C>& Engine::k_basis(const Permutation& w) {
  if constexpr (std::is_same_v<C, Integer>) {
    return grothendieck(w);
  } else {
    return beta_grothendieck(w);
  }
}

template <CoefficientRing C>
SchubertExpansion<C> Engine::peel_grothendieck(const Polynomial<C>& f, Basis basis) {
  SchubertExpansion<C> out;
  out.basis = basis;
  Polynomial<C> residual = f;
  const int span = f.num_vars() + std::max(f.degree(), 0) + 1;
  const int bound = span * (span - 1) / 2;
  while (!residual.is_zero()) {
    const int d = residual.min_degree();
    if (d > bound)
      throw ExpansionError("Grothendieck peeling passed degree bound " +
                           std::to_string(bound));
    // The lowest component of G_w is S_w, so the lowest component of the
    // residual fixes the coefficients of length d.
    SchubertExpansion<C> layer = eliminate_schubert(residual.homogeneous_component(d));
    for (const auto& [w, a] : layer.terms) {
      residual -= k_basis<C>(w) * a;
      if (!out.terms.emplace(w, a).second)
        throw ExpansionError("G_" + w.to_string() + " selected twice");
    }
    if (!residual.is_zero() && residual.min_degree() <= d)
      throw ExpansionError("Grothendieck peeling did not clear degree " +
                           std::to_string(d));
  }
  return out;
}

Expansion Engine::expand_in_schubert(const IntPoly& f) { return eliminate_schubert(f); }

BetaExpansion Engine::expand_in_schubert(const BetaPolynomial& f) {
  return eliminate_schubert(f);
}

Expansion Engine::expand_in_grothendieck(const IntPoly& f) {
  return peel_grothendieck(f, Basis::grothendieck);
}

BetaExpansion Engine::expand_in_grothendieck(const BetaPolynomial& f) {
  return peel_grothendieck(f, Basis::beta_grothendieck);
}

IntPoly Engine::recompose(const Expansion& e) {
  IntPoly total;
  for (const auto& [w, a] : e.terms)
    total += (e.basis == Basis::schubert ? schubert(w) : grothendieck(w)) * a;
  return total;
}

BetaPolynomial Engine::recompose(const BetaExpansion& e) {
  BetaPolynomial total;
  for (const auto& [w, a] : e.terms)
    total += (e.basis == Basis::schubert ? lift_to_beta(schubert(w)) : beta_grothendieck(w)) * a;
  return total;
}

namespace {

std::pair<Permutation, Permutation> ordered(const Permutation& u, const Permutation& v) {
  return v < u ? std::pair{v, u} : std::pair{u, v};
}

}  // namespace

const Expansion& Engine::product_expansion(const Permutation& u, const Permutation& v) {
  auto key = ordered(u, v);
  if (const Expansion* hit = products_.find(key)) return *hit;
  return products_.insert(key, expand_in_schubert(schubert(u) * schubert(v)));
}

Expansion Engine::product_by_value(const Permutation& u, const Permutation& v) {
  if (retain_products_) return product_expansion(u, v);
  if (const Expansion* hit = products_.find(ordered(u, v))) return *hit;
  return expand_in_schubert(schubert(u) * schubert(v));
}

Integer Engine::structure_coeff(const Permutation& u, const Permutation& v,
                                const Permutation& w) {
  return product_expansion(u, v).coefficient(w);
}

const Expansion& Engine::k_product_expansion(const Permutation& u, const Permutation& v) {
  auto key = ordered(u, v);
  if (const Expansion* hit = k_products_.find(key)) return *hit;
  return k_products_.insert(key, expand_in_grothendieck(grothendieck(u) * grothendieck(v)));
}

const BetaExpansion& Engine::k_product_expansion_beta(const Permutation& u,
                                                      const Permutation& v) {
  auto key = ordered(u, v);
  if (const BetaExpansion* hit = beta_products_.find(key)) return *hit;
  return beta_products_.insert(
      key, expand_in_grothendieck(beta_grothendieck(u) * beta_grothendieck(v)));
}

Integer Engine::k_coeff(const Permutation& u, const Permutation& v, const Permutation& w) {
  return k_product_expansion(u, v).coefficient(w);
}

BetaPoly Engine::k_coeff_beta(const Permutation& u, const Permutation& v,
                              const Permutation& w) {
  return k_product_expansion_beta(u, v).coefficient(w);
}

std::map<std::vector<int>, IntPoly> Engine::cached(Basis basis) const {
  std::map<std::vector<int>, IntPoly> out;
  const auto& memo = basis == Basis::schubert ? schubert_ : grothendieck_;
  if (basis == Basis::beta_grothendieck)
    throw std::invalid_argument("use cached_beta() for the beta-Grothendieck basis");
  memo.for_each([&](const CodeKey& k, const IntPoly& p) { out.emplace(k, p); });
  return out;
}

std::map<std::vector<int>, BetaPolynomial> Engine::cached_beta() const {
  std::map<std::vector<int>, BetaPolynomial> out;
  beta_.for_each([&](const CodeKey& k, const BetaPolynomial& p) { out.emplace(k, p); });
  return out;
}

void Engine::preload(Basis basis, const std::vector<int>& code, IntPoly poly) {
  switch (basis) {
    case Basis::schubert:
      schubert_.insert(code, std::move(poly));
      break;
    case Basis::grothendieck:
      grothendieck_.insert(code, std::move(poly));
      break;
    case Basis::beta_grothendieck:
      throw std::invalid_argument("use preload_beta() for the beta-Grothendieck basis");
  }
}

void Engine::preload_beta(const std::vector<int>& code, BetaPolynomial poly) {
  beta_.insert(code, std::move(poly));
}

std::size_t Engine::generated_count() const { return generated_.load(); }

Engine& default_engine() {
  static Engine engine;
  return engine;
}

BetaPolynomial beta_grothendieck_by_rescaling(const IntPoly& grothendieck, int length) {
  std::vector<BetaPolynomial::Term> terms;
  for (const auto& [m, c] : grothendieck.terms()) {
    const int excess = m.degree() - length;
    if (excess < 0)
      throw std::invalid_argument("Grothendieck polynomial has a term below degree " +
                                  std::to_string(length));
    terms.emplace_back(m, BetaPoly::term(excess % 2 == 0 ? c : Integer(-c), excess));
  }
  return BetaPolynomial::from_terms(std::move(terms));
}

}  // namespace schubert
