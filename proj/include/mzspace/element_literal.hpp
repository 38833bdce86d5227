#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mzspace/rational.hpp"

namespace mzspace {

/// One summand of a field-element literal: coefficient * z^exponent.
/// A term without `z` has exponent 0 and uses_z == false.
struct LiteralTerm {
  Rational coefficient;
  unsigned exponent = 0;
  bool uses_z = false;
  std::size_t column = 0;  // 1-based start of the term
};

/// Tokenizes an element literal:
///
///   integer  ::= [-]digits
///   rational ::= integer ["/" digits]
///   term     ::= rational | rational "*" "z" ["^" digits] | "z" ["^" digits]
///   element  ::= term { ("+"|"-") term }
///
/// Whitespace is insignificant. A leading '-' is also accepted directly before `z`
/// so that formatted output such as "-z^2" reads back. Throws ParseError.
std::vector<LiteralTerm> parse_literal(std::string_view text);

/// Renders ascending-power coefficients as a literal ("1/2 - 3*z + z^2"); "0" when all vanish.
std::string format_polynomial_literal(const std::vector<Rational>& coefficients);

}  // namespace mzspace
