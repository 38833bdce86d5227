#include "mzspace/element_literal.hpp"

#include <cctype>
#include <limits>

#include "mzspace/errors.hpp"

namespace mzspace {

namespace {

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  std::vector<LiteralTerm> run() {
    std::vector<LiteralTerm> terms;
    skip_space();
    if (at_end()) fail("empty literal");
    terms.push_back(term(false));
    for (;;) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      LiteralTerm t = term(true);
      if (op == '-') t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) {
      if (at_end()) fail("expected digits, found end of literal");
      fail(std::string("expected digits, found '") + peek() + "'");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    std::size_t column = pos_ + 1;
    std::string d = digits();
    Integer value(d);
    if (value > std::numeric_limits<unsigned>::max() / 2) {
      throw ParseError("exponent out of range", 0, column);
    }
    return static_cast<unsigned>(value.get_ui());
  }

  LiteralTerm term(bool after_operator) {
    skip_space();
    LiteralTerm t;
    t.column = pos_ + 1;
    if (at_end()) fail(after_operator ? "expected term after operator" : "empty literal");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
      if (at_end()) fail("expected digits or z after '-'");
    }
    if (peek() == 'z' || peek() == 'Z') {
      ++pos_;
      t.uses_z = true;
      t.coefficient = negative ? -1 : 1;
      t.exponent = exponent();
      return t;
    }
    Integer numerator(digits());
    if (negative) numerator = -numerator;
    Integer denominator = 1;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      std::size_t column = pos_ + 1;
      denominator = Integer(digits());
      if (denominator == 0) throw ParseError("zero denominator", 0, column);
    }
    t.coefficient = Rational(numerator, denominator);
    t.coefficient.canonicalize();
    skip_space();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      if (at_end() || (peek() != 'z' && peek() != 'Z')) fail("expected 'z' after '*'");
      ++pos_;
      t.uses_z = true;
      t.exponent = exponent();
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<LiteralTerm> parse_literal(std::string_view text) { return LiteralScanner(text).run(); }

std::string format_polynomial_literal(const std::vector<Rational>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational magnitude = abs(c);
    std::string body;
    if (i == 0) {
      body = magnitude.get_str();
    } else {
      if (magnitude != 1) body = magnitude.get_str() + "*";
      body += "z";
      if (i > 1) body += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace mzspace
