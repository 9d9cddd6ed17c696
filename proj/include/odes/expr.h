#ifndef ODES_EXPR_H
#define ODES_EXPR_H

#include <string>
#include <vector>
#include "odes/rational.h"

namespace odes {

// Canonical closed family of terms
//
//     coeff * u^pow * ln(u)^logq * e^(expk*u) * trig(trigm*x),   u = x - center
//
// with at most one transcendental factor per term, and pow a
// non-negative integer whenever an exp or trig factor is present
// (that keeps the family closed under antiderivatives).
enum class trig_kind { none, sin, cos };

struct term {
    rational coeff{0};
    rational pow{0};
    int logq = 0;
    rational expk{0};
    trig_kind trig = trig_kind::none;
    rational trigm{0};

    bool same_signature(const term& o) const;
    bool is_const() const;
};

struct expr {
    rational center{0};
    std::vector<term> terms; // canonical order, like terms merged

    bool is_zero() const { return terms.empty(); }
    bool is_single_term() const { return terms.size() == 1; }
};

// Construction helpers.
expr make_zero(const rational& center = rational(0));
expr make_const(const rational& c, const rational& center = rational(0));
expr make_term(const term& t, const rational& center = rational(0));
// u^1, i.e. x - center.
expr make_u(const rational& center = rational(0));
// The independent variable x itself (u + center).
expr make_x(const rational& center = rational(0));

// Validates the term invariants and produces the canonical form:
// terms sorted, like signatures merged, zero coefficients dropped.
expr normalize(expr e);

expr add(const expr& a, const expr& b);
expr sub(const expr& a, const expr& b);
expr negate(const expr& a);
expr scale(const expr& a, const rational& c);
expr mul(const expr& a, const expr& b);
expr expr_pow(const expr& a, unsigned n);

// Exact division by a single invertible term (no log, no trig).
expr div_single(const expr& num, const expr& den);

expr differentiate(const expr& e, unsigned times = 1);
// Canonical antiderivative, no integration constants anywhere.
expr antiderivative(const expr& e);
expr antiderivative(const expr& e, unsigned times);
// n >= 0: differentiate n times; n < 0: antiderivative |n| times.
expr dn(long n, const expr& e);

bool operator==(const expr& a, const expr& b);
inline bool operator!=(const expr& a, const expr& b) { return !(a == b); }

inline expr operator+(const expr& a, const expr& b) { return add(a, b); }
inline expr operator-(const expr& a, const expr& b) { return sub(a, b); }
inline expr operator*(const expr& a, const expr& b) { return mul(a, b); }
inline expr operator-(const expr& a) { return negate(a); }

enum class format_style { text, latex };
std::string format(const expr& e, format_style style = format_style::text);

// Rational coefficient of the term with the given signature (zero if absent).
rational coefficient(const expr& e, const term& signature);

} // namespace odes

#endif
