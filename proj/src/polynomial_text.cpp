#include "schubert/polynomial_text.hpp"

#include <cctype>

namespace schubert {

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 1; i <= m.num_vars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Appends one term given its sign and the unsigned coefficient text ("" for
// a unit coefficient).
void append_term(std::string& out, bool negative, const std::string& magnitude,
                 const Monomial& m) {
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (m.is_one()) {
    out += magnitude.empty() ? "1" : magnitude;
  } else {
    if (!magnitude.empty()) out += magnitude + "*";
    out += to_string(m);
  }
}

}  // namespace

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    append_term(out, negative, mag == 1 ? "" : mag.str(), m);
  }
  return out;
}

std::string to_string(const BetaPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (c.term_count() == 1) {
      const int k = c.degree();
      const Integer lead = c[k];
      const bool negative = lead < 0;
      const Integer mag = negative ? Integer(-lead) : lead;
      std::string text;
      if (k == 0) {
        text = mag == 1 ? "" : mag.str();
      } else {
        if (mag != 1) text = mag.str() + "*";
        text += "b";
        if (k > 1) text += "^" + std::to_string(k);
      }
      append_term(out, negative, text, m);
    } else {
      append_term(out, false, "(" + c.to_string() + ")", m);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BetaPolynomial parse_all() {
    BetaPolynomial result = expression(true);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected token");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])))
      ++end;
    std::string token(text_.substr(pos_, end - pos_));
    throw PolynomialParseError("cannot parse polynomial '" + std::string(text_) +
                               "': " + what + " at offset " + std::to_string(pos_) +
                               (token.empty() ? " (end of input)" : " ('" + token + "')"));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("exponent or index too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  BetaPolynomial expression(bool allow_x) {
    BetaPolynomial sum;
    bool negative = accept('-');
    if (!negative) accept('+');
    while (true) {
      BetaPolynomial t = term(allow_x);
      sum = negative ? sum - t : sum + t;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        break;
    }
    return sum;
  }

  BetaPolynomial term(bool allow_x) {
    BetaPolynomial product = factor(allow_x);
    while (accept('*')) product = product * factor(allow_x);
    return product;
  }

  BetaPolynomial factor(bool allow_x) {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a factor");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return BetaPolynomial(BetaPoly(value));
    }
    if (c == 'b') {
      ++pos_;
      int power = accept('^') ? number() : 1;
      return BetaPolynomial(BetaPoly::term(1, power));
    }
    if (c == 'x') {
      if (!allow_x) fail("x variable inside a b-coefficient");
      ++pos_;
      int index = number();
      if (index < 1) fail("variable index below 1");
      int power = accept('^') ? number() : 1;
      return BetaPolynomial::monomial(Monomial::variable(index, power), BetaPoly(1));
    }
    if (c == '(') {
      ++pos_;
      BetaPolynomial inner = expression(false);
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected token");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BetaPolynomial parse_beta_poly(std::string_view text) { return Parser(text).parse_all(); }

IntPoly parse_int_poly(std::string_view text) {
  BetaPolynomial f = parse_beta_poly(text);
  try {
    return drop_beta(f);
  } catch (const std::domain_error&) {
    throw PolynomialParseError("polynomial '" + std::string(text) +
                               "' has b-dependent coefficients in ring Z");
  }
}

}  // namespace schubert
