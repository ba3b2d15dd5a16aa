#pragma once

// Coefficient rings: Z (arbitrary precision) and Z[b] for the
// beta-Grothendieck deformation.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace schubert {

using Integer = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in beta with Integer coefficients.  No
/// trailing zero coefficients are stored.
class BetaPoly {
 public:
  BetaPoly() = default;
  BetaPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  BetaPoly(long long constant) : BetaPoly(Integer(constant)) {}  // NOLINT
  explicit BetaPoly(std::vector<Integer> coefficients);

  /// c * beta^k.
  static BetaPoly term(const Integer& c, int k);
  static BetaPoly beta() { return term(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of beta^k (zero outside the stored range).
  Integer operator[](int k) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Number of nonzero beta-coefficients.
  std::size_t term_count() const;

  BetaPoly derivative() const;
  Integer evaluate(const Integer& b) const;

  BetaPoly& operator+=(const BetaPoly& o);
  BetaPoly& operator-=(const BetaPoly& o);
  BetaPoly& operator*=(const BetaPoly& o);
  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
  friend BetaPoly operator-(BetaPoly a);
  friend bool operator==(const BetaPoly&, const BetaPoly&) = default;

  /// "1+2*b-b^2"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

inline bool is_zero(const Integer& c) { return c.is_zero(); }
inline bool is_zero(const BetaPoly& c) { return c.is_zero(); }

inline std::string to_string(const Integer& c) { return c.str(); }
inline std::string to_string(const BetaPoly& c) { return c.to_string(); }

/// Collapses a beta-free Z[b] value to Z; throws std::domain_error otherwise.
Integer to_integer(const BetaPoly& c);

}  // namespace schubert
