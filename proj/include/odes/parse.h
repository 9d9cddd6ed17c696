#ifndef ODES_PARSE_H
#define ODES_PARSE_H

#include <string>
#include "odes/expr.h"

namespace odes {

// Parses the expression grammar used by the CLI and reports:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' exponent)?
//   base   := rational | 'x' | '(' expr ')' | 'ln(' shift ')' | 'sqrt(' power-of-shift ')'
//           | 'exp(' k '*'? shift ')' | 'e^' factor | 'sin(' m '*'? 'x' ')' | 'cos(' ... ')'
// Division is permitted only by rationals or by single-term powers of
// the shifted base. The center fixes which shift x-c0 is the base u.
expr parse(const std::string& text, const rational& center = rational(0));

} // namespace odes

#endif
