#include "odes/eval.h"
#include "odes/errors.h"

namespace odes {

// Exact rational value of one term, when one exists: integer powers of
// a rational shift, plus the special points where the transcendental
// factors take rational values (u = 0, u = 1, trig argument 0).
static bool term_exact_value(const term& t, const rational& u, const rational& x0,
                             rational& out) {
    rational v = t.coeff;
    if (t.pow != 0) {
        if (u == 0 && t.pow > 0) {
            out = rational(0);
            return true;
        }
        if (is_integer(t.pow) && fits_long(t.pow) && u != 0)
            v *= rat_pow(u, to_long(t.pow));
        else if (u == 1)
            ; // u^r = 1
        else
            return false;
    }
    if (t.logq > 0) {
        if (u != 1)
            return false;
        out = rational(0); // ln(1) = 0
        return true;
    }
    if (t.expk != 0 && u != 0)
        return false;
    if (t.trig != trig_kind::none) {
        if (x0 != 0)
            return false;
        if (t.trig == trig_kind::sin) {
            out = rational(0);
            return true;
        }
    }
    out = v;
    return true;
}

static void check_domain(const term& t, const rational& u) {
    if (t.logq > 0 && u <= 0)
        throw domain_error("log at or left of the center");
    if (!is_integer(t.pow) && u < 0)
        throw domain_error("fractional power left of the center");
    if (t.pow < 0 && u == 0)
        throw domain_error("negative power at the center");
}

static bigfloat term_value(const term& t, const bigfloat& u, const bigfloat& x,
                           mpfr_prec_t bits) {
    bigfloat v = bigfloat::from(t.coeff, bits);
    if (t.pow != 0)
        v = v * pow(u, t.pow);
    if (t.logq > 0)
        v = v * pow(log(u), rational(t.logq));
    if (t.expk != 0)
        v = v * exp(bigfloat::from(t.expk, bits) * u);
    if (t.trig == trig_kind::sin)
        v = v * sin(bigfloat::from(t.trigm, bits) * x);
    else if (t.trig == trig_kind::cos)
        v = v * cos(bigfloat::from(t.trigm, bits) * x);
    return v;
}

eval_result eval(const expr& e, const rational& x0, unsigned digits) {
    if (digits < 30)
        digits = 30;
    mpfr_prec_t bits = bigfloat::digits10(digits);
    rational u = x0 - e.center;

    bool exact = true;
    rational sum(0);
    for (const term& t : e.terms) {
        check_domain(t, u);
        rational v;
        if (term_exact_value(t, u, x0, v))
            sum += v;
        else
            exact = false;
    }

    eval_result r;
    if (exact) {
        r.exact = true;
        r.rat = sum;
        r.app = bigfloat::from(sum, bits);
        return r;
    }

    bigfloat uf = bigfloat::from(u, bits);
    bigfloat xf = bigfloat::from(x0, bits);
    bigfloat fsum(bits);
    for (const term& t : e.terms)
        fsum += term_value(t, uf, xf, bits);
    r.exact = false;
    r.app = fsum;
    return r;
}

bigfloat eval_f(const expr& e, const rational& x0, unsigned digits) {
    return eval(e, x0, digits).app;
}

bigfloat eval_f(const expr& e, const bigfloat& x0) {
    mpfr_prec_t bits = x0.prec();
    bigfloat u = x0 - bigfloat::from(e.center, bits);
    for (const term& t : e.terms) {
        if (t.logq > 0 && u.sign() <= 0)
            throw domain_error("log at or left of the center");
        if (!is_integer(t.pow) && u.sign() < 0)
            throw domain_error("fractional power left of the center");
        if (t.pow < 0 && u.is_zero())
            throw domain_error("negative power at the center");
    }
    bigfloat sum(bits);
    for (const term& t : e.terms)
        sum += term_value(t, u, x0, bits);
    return sum;
}

double eval_d(const expr& e, double x0) {
    return eval_f(e, bigfloat::from(x0, bigfloat::digits10(30))).to_double();
}

} // namespace odes
