#include "schubert/polynomial.hpp"

namespace schubert {

Monomial::Monomial(std::span<const int> exponents) {
  for (int e : exponents) {
    if (e < 0 || e > 0xffff)
      throw std::invalid_argument("exponent out of range: " + std::to_string(e));
    exps_.push_back(static_cast<Exponent>(e));
    degree_ += e;
  }
  trim();
}

Monomial Monomial::variable(int i, int power) {
  if (i < 1) throw std::invalid_argument("variable index below 1");
  std::vector<int> exps(static_cast<std::size_t>(i), 0);
  exps.back() = power;
  return Monomial(exps);
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = exps_.size() >= o.exps_.size() ? *this : o;
  const Monomial& small = exps_.size() >= o.exps_.size() ? o : *this;
  for (std::size_t k = 0; k < small.exps_.size(); ++k) out.exps_[k] += small.exps_[k];
  out.degree_ = degree_ + o.degree_;
  return out;
}

Monomial Monomial::with_exponent(int i, int e) const {
  Monomial out = *this;
  if (out.num_vars() < i) {
    if (e == 0) return out;
    out.exps_.resize(static_cast<std::size_t>(i), 0);
  }
  auto& slot = out.exps_[static_cast<std::size_t>(i - 1)];
  out.degree_ += e - slot;
  slot = static_cast<Exponent>(e);
  out.trim();
  return out;
}

Monomial Monomial::swapped(int i) const {
  const int a = exponent(i);
  const int b = exponent(i + 1);
  if (a == b) return *this;
  return with_exponent(i + 1, a).with_exponent(i, b);
}

IntPoly isobaric_divided_difference(int i, const IntPoly& f) {
  const IntPoly factor = IntPoly(Integer(1)) - IntPoly::variable(i + 1);
  return divided_difference(i, factor * f);
}

BetaPolynomial beta_divided_difference(int i, const BetaPolynomial& f) {
  const BetaPolynomial factor =
      BetaPolynomial(BetaPoly(1)) +
      BetaPolynomial::monomial(Monomial::variable(i + 1), BetaPoly::beta());
  return divided_difference(i, factor * f);
}

BetaPolynomial nabla_beta(const BetaPolynomial& f) {
  std::vector<BetaPolynomial::Term> terms;
  const BetaPoly beta_squared = BetaPoly::term(1, 2);
  for (const auto& [m, c] : f.terms()) {
    BetaPoly d = c.derivative();
    if (!d.is_zero()) terms.emplace_back(m, beta_squared * d);
  }
  return nabla(f) + BetaPolynomial::from_terms(std::move(terms));
}

IntPoly specialize_beta(const BetaPolynomial& f, const Integer& value) {
  std::vector<IntPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.evaluate(value));
  return IntPoly::from_terms(std::move(terms));
}

BetaPolynomial lift_to_beta(const IntPoly& f) {
  std::vector<BetaPolynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, BetaPoly(c));
  return BetaPolynomial::from_terms(std::move(terms));
}

IntPoly drop_beta(const BetaPolynomial& f) {
  std::vector<IntPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, to_integer(c));
  return IntPoly::from_terms(std::move(terms));
}

}  // namespace schubert
