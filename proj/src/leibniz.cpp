#include "odes/leibniz.h"
#include "odes/errors.h"

namespace odes {

weight_spec weight_spec::ipow(unsigned k) {
    weight_spec w;
    w.k = kind::power;
    w.power_k = k;
    return w;
}

weight_spec weight_spec::binom(long z, unsigned k) {
    weight_spec w;
    w.k = kind::binom;
    w.binom_z = z;
    w.binom_k = k;
    return w;
}

static rational weight_value(const weight_spec& w, unsigned i) {
    switch (w.k) {
        case weight_spec::kind::one:
            return rational(1);
        case weight_spec::kind::power:
            return rat_pow(rational((long)i), (long)w.power_k); // 0^0 = 1
        case weight_spec::kind::binom:
            return gbinom(rational((long)i - w.binom_z), w.binom_k);
    }
    return rational(0);
}

expr leibniz_sum(const weight_spec& w, const expr& u, const expr& v, unsigned n) {
    expr acc = make_zero(u.center);
    for (unsigned i = 0; i <= n; i++) {
        rational c = weight_value(w, i) * binom((long)n, (long)i);
        if (c == 0)
            continue;
        acc = add(acc, scale(mul(differentiate(u, i), differentiate(v, n - i)), c));
    }
    return acc;
}

expr L_power_closed(unsigned k, const expr& u, const expr& v, unsigned n) {
    expr acc = make_zero(u.center);
    for (unsigned i = 0; i <= k && i <= n; i++) {
        rational inner(0);
        for (unsigned s = 0; s <= i; s++) {
            // s^k with the 0^0 = 1 convention
            rational sk = rat_pow(rational((long)s), (long)k);
            rational denom(factorial(i - s) * factorial(s));
            rational sign = ((s + i) % 2 == 0) ? rational(1) : rational(-1);
            inner += sk * sign / denom;
        }
        if (inner == 0)
            continue;
        rational c = inner * binom((long)n, (long)i) * rational(factorial(i));
        acc = add(acc, scale(differentiate(mul(differentiate(u, i), v), n - i), c));
    }
    return acc;
}

std::vector<rational> vieta_coeffs(unsigned k) {
    if (k < 1)
        throw kernel_error("vieta_coeffs requires k >= 1");
    // expand t(t-1)...(t-k+1); poly[j] = coefficient of t^j
    std::vector<rational> poly{rational(1)};
    for (unsigned root = 0; root < k; root++) {
        std::vector<rational> next(poly.size() + 1, rational(0));
        for (std::size_t j = 0; j < poly.size(); j++) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * rational((long)root);
        }
        poly = std::move(next);
    }
    // r_s multiplies t^{k+1-s}, s = 1..k+1
    std::vector<rational> r(k + 1);
    for (unsigned s = 1; s <= k + 1; s++)
        r[s - 1] = poly[k + 1 - s];
    return r;
}

expr L_binom_closed(long z, unsigned k, const expr& u, const expr& v, unsigned n) {
    if (k == 0)
        return differentiate(mul(u, v), n);
    std::vector<rational> r = vieta_coeffs(k);
    expr acc = make_zero(u.center);
    rational kfac(factorial(k));
    for (unsigned s = 1; s <= k + 1; s++) {
        if (r[s - 1] == 0)
            continue;
        unsigned deg = k + 1 - s;
        for (unsigned l = 0; l <= deg; l++) {
            rational c = r[s - 1] * binom((long)deg, (long)l) *
                         rat_pow(rational(-z), (long)(deg - l)) / kfac;
            if (c == 0)
                continue;
            acc = add(acc, scale(L_power_closed(l, u, v, n), c));
        }
    }
    return acc;
}

std::pair<expr, expr> nested_identity(const std::vector<expr>& b, unsigned k0,
                                      unsigned n, unsigned m) {
    if (b.size() < m)
        throw kernel_error("nested_identity needs at least m sequence entries");
    rational center = b.empty() ? rational(0) : b.front().center;
    expr lhs = make_zero(center);
    for (unsigned i0 = 0; i0 < m; i0++) {
        expr u = antiderivative(b[i0], i0 + k0);
        lhs = add(lhs, leibniz_sum(weight_spec::binom((long)k0, i0), u, b[k0], n));
    }
    expr rhs = make_zero(center);
    for (unsigned i1 = 0; i1 < m; i1++) {
        for (unsigned i0 = 0; i0 + i1 < m; i0++) {
            rational c = binom((long)(k0 - 1 + i0), (long)(k0 - 1)) *
                         binom((long)n, (long)i1);
            if (i0 % 2 == 1)
                c = -c;
            if (c == 0)
                continue;
            expr inner = mul(antiderivative(b[i1 + i0], i0 + k0), b[k0]);
            rhs = add(rhs, scale(differentiate(inner, n - i1), c));
        }
    }
    return {lhs, rhs};
}

} // namespace odes
