#ifndef ODES_EVAL_H
#define ODES_EVAL_H

#include "odes/bigfloat.h"
#include "odes/expr.h"

namespace odes {

// eval() stays exact (rational) whenever every term allows it:
// integer powers of a rational shift, no log/exp/trig. Otherwise it
// falls back to high-precision floats at the requested digit count.
struct eval_result {
    bool exact = false;
    rational rat;   // valid when exact
    bigfloat app;   // always valid
};

eval_result eval(const expr& e, const rational& x0, unsigned digits = 80);

// Float-only convenience wrapper.
bigfloat eval_f(const expr& e, const rational& x0, unsigned digits = 80);
bigfloat eval_f(const expr& e, const bigfloat& x0);

double eval_d(const expr& e, double x0);

} // namespace odes

#endif
