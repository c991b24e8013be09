#ifndef PAW_PRINT_HPP
#define PAW_PRINT_HPP

#include <string>

#include "paw/syntax.hpp"

namespace paw {

enum class PrintMode { Primitive, Sugared };

struct PrintOptions {
  PrintMode mode = PrintMode::Primitive;
  bool unicode = false;  // render A/E/~/->/&/| as logical symbols
};

std::string variable_name(Variable v);

std::string print_term(const Term& t);

// Deterministic rendering; identical trees produce identical text, and
// parse_formula(print_formula(f, opts)) == f for ASCII output in both
// modes. Sugared mode re-introduces (Ex), & and | wherever the stored
// tree is the image of a desugaring.
std::string print_formula(const Formula& f, const PrintOptions& opts = {});

}  // namespace paw

#endif  // PAW_PRINT_HPP
