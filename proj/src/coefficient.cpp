#include "schubert/coefficient.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

BetaPoly::BetaPoly(const Integer& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

BetaPoly::BetaPoly(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

BetaPoly BetaPoly::term(const Integer& c, int k) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs[static_cast<std::size_t>(k)] = c;
  return BetaPoly(std::move(coeffs));
}

void BetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Integer BetaPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::size_t BetaPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return !c.is_zero(); }));
}

BetaPoly BetaPoly::derivative() const {
  std::vector<Integer> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out.push_back(coeffs_[k] * static_cast<long long>(k));
  return BetaPoly(std::move(out));
}

Integer BetaPoly::evaluate(const Integer& b) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * b + *it;
  return acc;
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BetaPoly(std::move(out));
}

BetaPoly& BetaPoly::operator*=(const BetaPoly& o) { return *this = *this * o; }

BetaPoly operator-(BetaPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string BetaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    const Integer mag = negative ? Integer(-c) : c;
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "b";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Integer to_integer(const BetaPoly& c) {
  if (c.degree() > 0)
    throw std::domain_error("coefficient " + c.to_string() + " depends on b");
  return c[0];
}

}  // namespace schubert
