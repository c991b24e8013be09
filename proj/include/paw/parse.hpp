#ifndef PAW_PARSE_HPP
#define PAW_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paw/syntax.hpp"

namespace paw {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct ParseError {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;
};

using ParseResult = std::variant<Formula, ParseError>;
using TermParseResult = std::variant<Term, ParseError>;

// Concrete syntax, ASCII only:
//   terms     0, variables, postfix ', infix + and * (with ' > * > +)
//   atoms     t1 = t2, relation atoms @name(t1,...,tk)
//   formulas  ~F, F -> G (right assoc), F & G, F | G, (Ax1)F, (Ex1)F
// with precedence = > ~ > & > | > ->. The parser returns a fully
// desugared tree: (Ex)F, F & G and F | G never survive parsing.
//
// Variables are written as a lowercase letter with an optional positive
// number (bare letter means 1). Canonical names are x1, x2, ...; other
// letters are input aliases resolved as index = number + offset with
// offsets x=0, y=1, z=2, a=3, ..., w=25, so y1 and x2 denote the same
// variable.
ParseResult parse_formula(std::string_view text);
TermParseResult parse_term(std::string_view text);

}  // namespace paw

#endif  // PAW_PARSE_HPP
