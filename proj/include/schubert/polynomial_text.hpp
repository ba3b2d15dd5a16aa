#pragma once

// Canonical text form of polynomials, e.g. "x1^2*x2 + 3*x1*x3" over Z and
// "x1 + x2 + b*x1*x2 + (1+2*b)*x3" over Z[b].

#include <stdexcept>
#include <string>
#include <string_view>

#include "schubert/polynomial.hpp"

namespace schubert {

class PolynomialParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const Monomial& m);
std::string to_string(const IntPoly& f);
std::string to_string(const BetaPolynomial& f);

/// Parses the canonical form (and any reasonable variant of it: spacing,
/// repeated factors, unnormalised order).
IntPoly parse_int_poly(std::string_view text);
BetaPolynomial parse_beta_poly(std::string_view text);

}  // namespace schubert
