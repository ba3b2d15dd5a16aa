#include <gtest/gtest.h>

#include "oracle.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/polynomial_text.hpp"

using namespace schubert;

namespace {

IntPoly F(const char* text) { return parse_int_poly(text); }
BetaPolynomial B(const char* text) { return parse_beta_poly(text); }

}  // namespace

TEST(BetaPoly, ArithmeticAndRendering) {
  const BetaPoly b = BetaPoly::beta();
  EXPECT_EQ((1 + 2 * b - b * b).to_string(), "1+2*b-b^2");
  EXPECT_EQ(BetaPoly().to_string(), "0");
  EXPECT_EQ((b * b * b).derivative(), 3 * b * b);
  EXPECT_EQ((1 + b).evaluate(-1), 0);
  EXPECT_EQ(to_integer(BetaPoly(7)), 7);
  EXPECT_THROW(to_integer(b), std::domain_error);
  EXPECT_TRUE((b - b).is_zero());
}

TEST(Polynomial, CanonicalOrderIsDegreeThenReverseLex) {
  const IntPoly f = F("x1*x3 + x1^2*x2 + 1 + x2");
  EXPECT_EQ(to_string(f), "1 + x2 + x1*x3 + x1^2*x2");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.min_degree(), 0);
  EXPECT_EQ(f.num_vars(), 3);
  EXPECT_EQ(to_string(IntPoly()), "0");
  EXPECT_EQ(to_string(F("x1 + x2 - x1*x2")), "x1 + x2 - x1*x2");
}

TEST(Polynomial, AddMultiplyScale) {
  EXPECT_EQ(F("x1 + x2") * F("x1 - x2"), F("x1^2 - x2^2"));
  EXPECT_EQ(F("x1") + F("-x1"), IntPoly());
  EXPECT_EQ(F("x1 + 1") * Integer(3), F("3*x1 + 3"));
  EXPECT_EQ(F("x1") * IntPoly(), IntPoly());
  EXPECT_EQ(coeff_of(F("2*x1^2*x3 + x2"), Monomial({2, 0, 1})), 2);
  EXPECT_EQ(coeff_of(F("x2"), Monomial({1})), 0);
}

TEST(Polynomial, ParseErrorsReportPosition) {
  try {
    F("x1 + * x2");
    FAIL();
  } catch (const PolynomialParseError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 5"), std::string::npos) << e.what();
  }
  EXPECT_THROW(F("x0"), PolynomialParseError);
  EXPECT_THROW(F("b*x1"), PolynomialParseError);
  EXPECT_THROW(F("x1 +"), PolynomialParseError);
}

TEST(Polynomial, BetaTextRoundTrip) {
  for (const char* text : {"x1 + x2 + b*x1*x2", "(1+2*b)*x3 - b^2", "0", "1", "-b*x1^3*x7"}) {
    const BetaPolynomial f = B(text);
    EXPECT_EQ(B(to_string(f).c_str()), f) << text;
  }
  EXPECT_EQ(to_string(B("x1*b + x1*b^2")), "(b+b^2)*x1");
}

TEST(DividedDifference, SmallCases) {
  EXPECT_EQ(divided_difference(1, F("x1")), F("1"));
  EXPECT_EQ(divided_difference(1, F("x1^2")), F("x1 + x2"));
  EXPECT_EQ(divided_difference(2, F("x1")), IntPoly());
  EXPECT_EQ(divided_difference(1, F("x1^2*x2")), F("x1*x2"));
  EXPECT_EQ(divided_difference(2, F("x1^2*x2")), F("x1^2"));
  EXPECT_THROW(divide_by_difference(F("x1"), 1), ArithmeticIntegrityError);
  EXPECT_THROW(divided_difference(0, F("x1")), std::invalid_argument);
}

TEST(DividedDifference, AgreesWithMonomialFormula) {
  const IntPoly f = F("3*x1^4*x2 - x2^3*x3^2 + 5*x1*x3 + 7 - x1^2*x2^2*x3^5");
  oracle::Poly g;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e = m.exponents();
    e.resize(4, 0);
    g[e] = static_cast<std::int64_t>(c);
  }
  for (int i = 1; i <= 3; ++i)
    EXPECT_EQ(divided_difference(i, f), oracle::to_library(oracle::divided_difference(i, g)));
}

TEST(DividedDifference, IsobaricAndBetaVariants) {
  EXPECT_EQ(isobaric_divided_difference(1, F("x1")), F("1"));
  EXPECT_EQ(isobaric_divided_difference(1, F("x1^2")), F("x1 + x2 - x1*x2"));
  EXPECT_EQ(beta_divided_difference(1, B("x1^2")), B("x1 + x2 + b*x1*x2"));
  EXPECT_EQ(beta_divided_difference(1, B("x1")), B("1"));
}

TEST(Operators, NablaEulerAndBeta) {
  EXPECT_EQ(nabla(F("x1^2*x2")), F("2*x1*x2 + x1^2"));
  EXPECT_EQ(nabla(F("7")), IntPoly());
  EXPECT_EQ(euler(F("x1^2*x2 + x1 + 4")), F("3*x1^2*x2 + x1"));
  EXPECT_EQ(nabla_beta(B("b*x1")), B("b + b^2*x1"));
  EXPECT_EQ(nabla_beta(B("b^2")), B("2*b^3"));
}

TEST(Operators, Specialisations) {
  EXPECT_EQ(specialize_ones(F("x1 + x2 - x1*x2")), 1);
  EXPECT_EQ(specialize_ones(B("x1 + b*x2")), BetaPoly(1) + BetaPoly::beta());
  EXPECT_EQ(specialize_beta(B("x1 + x2 + b*x1*x2"), -1), F("x1 + x2 - x1*x2"));
  EXPECT_EQ(specialize_beta(B("x1 + b*x1*x2"), 0), F("x1"));
  EXPECT_EQ(drop_beta(lift_to_beta(F("x1 - 3*x2^2"))), F("x1 - 3*x2^2"));
  EXPECT_THROW(drop_beta(B("b*x1")), std::domain_error);
  EXPECT_EQ(substitute_zero_and_shift(F("x1*x2 + x2^2*x3 + x2")), F("x1^2*x2 + x1"));
}
