#include "odes/verify.h"
#include "odes/errors.h"
#include "odes/eval.h"

#include <algorithm>

namespace odes {

std::vector<rational> make_grid(const rational& lo, const rational& hi, unsigned count) {
    if (count < 2)
        throw kernel_error("grid needs at least 2 points");
    std::vector<rational> g;
    rational step = (hi - lo) / rational((long)(count - 1));
    for (unsigned i = 0; i < count; i++)
        g.push_back(lo + step * rational((long)i));
    return g;
}

static residual_report residual_impl(const std::vector<expr>& a, const expr& Y,
                                     const std::vector<rational>& grid,
                                     unsigned digits, unsigned truncation,
                                     const std::string& label) {
    unsigned m = (unsigned)a.size();
    expr numer = differentiate(Y, m);
    for (unsigned p = 1; p <= m; p++) {
        if (a[p - 1].is_zero())
            continue;
        numer = sub(numer, mul(a[p - 1], differentiate(Y, m - p)));
    }
    const expr& am = a[m - 1];

    residual_report rep;
    rep.problem = label;
    rep.truncation = truncation;
    std::vector<rational> pts = grid;
    std::sort(pts.begin(), pts.end());
    for (const rational& x : pts) {
        residual_sample s;
        s.x = bigfloat::from(x, bigfloat::digits10(30)).to_double();
        try {
            bigfloat denom = eval_f(am, x, digits) * eval_f(Y, x, digits);
            if (denom.is_zero()) {
                s.defined = false;
            } else {
                bigfloat d = abs(eval_f(numer, x, digits) / denom);
                s.delta = d.to_double();
                rep.max_delta = std::max(rep.max_delta, s.delta);
            }
        } catch (const domain_error&) {
            s.defined = false;
        }
        rep.samples.push_back(s);
    }
    return rep;
}

residual_report residual_report_for(const ode_m& ode, const expr& Y,
                                    const std::vector<rational>& grid,
                                    unsigned digits, unsigned truncation) {
    return residual_impl(ode.a, Y, grid, digits, truncation,
                         "order-" + std::to_string(ode.m) + " ODE");
}

residual_report residual_report_for(const reduced_ode2& ode, const expr& Y,
                                    const std::vector<rational>& grid,
                                    unsigned digits, unsigned truncation) {
    std::vector<expr> a{make_zero(ode.a.center), ode.a};
    return residual_impl(a, Y, grid, digits, truncation, "y'' = a y");
}

std::pair<std::vector<bigint>, std::vector<bigint>> airy_oracle(unsigned K) {
    std::vector<bigint> B{bigint(1)}, H{bigint(1)};
    for (unsigned k = 0; k < K; k++) {
        bigint kk((long)k);
        B.push_back((9 * (kk + 1) * (kk + 1) - 3 * kk - 3) * B.back());
        H.push_back((3 * kk + 3 + 9 * (kk + 1) * (kk + 1)) * H.back());
    }
    return {B, H};
}

std::pair<std::vector<rational>, std::vector<rational>> exp_oracle(unsigned K) {
    std::vector<rational> B, F;
    for (unsigned k = 0; k <= K; k++) {
        rational fac(factorial(k));
        B.push_back(fac * fac);
        F.push_back(rational(2) * harmonic(k) / (fac * fac));
    }
    return {B, F};
}

expr euler_series(unsigned N) {
    if (N < 2)
        throw kernel_error("euler_series needs N >= 2");
    std::vector<rational> b(N + 1);
    b[0] = rational(871);
    b[1] = rational(481);
    for (unsigned i = 2; i <= N; i++) {
        rational ii((long)i);
        // i(i-1) b_i + (1-i) b_{i-1} - b_{i-2} = 0
        b[i] = ((ii - 1) * b[i - 1] + b[i - 2]) / (ii * (ii - 1));
    }
    rational center(-1);
    expr out = make_zero(center);
    for (unsigned i = 0; i <= N; i++) {
        term t;
        t.coeff = b[i];
        t.logq = (int)i;
        out = add(out, make_term(t, center));
    }
    return out;
}

bool crosscheck_m2(const expr& a, unsigned N) {
    xi_table2 table(a);
    adjoint_coeffs b;
    b.m = 2;
    b.b = {make_zero(a.center), a};
    xi_matrix matrix(std::move(b));
    for (unsigned s = 0; s <= N; s++) {
        const auto& pair2 = table.xi_neg(s);
        if (matrix.entry(s, 1) != pair2.first)
            return false;
        if (matrix.entry(s, 2) != pair2.second)
            return false;
    }
    return true;
}

} // namespace odes
