#include "odes/nimage2.h"
#include "odes/errors.h"

namespace odes {

reduction_result reduce_to_normal(const general_ode2& ode) {
    reduction_result r;
    expr a1sq = scale(mul(ode.a1, ode.a1), make_rat(1, 4));
    expr a1d = scale(differentiate(ode.a1), make_rat(1, 2));
    r.reduced.a = sub(add(ode.a2, a1sq), a1d);
    r.multiplier_text = "exp((1/2)*Int(" + format(ode.a1) + "))";
    expr half_int = scale(antiderivative(ode.a1), make_rat(1, 2));
    if (half_int.is_zero()) {
        r.multiplier = make_const(1, ode.a1.center);
    } else if (half_int.is_single_term()) {
        const term& t = half_int.terms.front();
        if (t.pow == 1 && t.logq == 0 && t.expk == 0 && t.trig == trig_kind::none) {
            term m;
            m.coeff = 1;
            m.expk = t.coeff;
            r.multiplier = make_term(m, ode.a1.center);
        }
    }
    return r;
}

general_ode2 adjoint2(const general_ode2& ode) {
    general_ode2 b;
    b.a1 = negate(ode.a1);
    b.a2 = sub(ode.a2, differentiate(ode.a1));
    return b;
}

nimage_coeffs nimage_forward(const general_ode2& ode, unsigned n) {
    nimage_coeffs c;
    c.alpha = ode.a1;
    c.beta = ode.a2;
    for (unsigned i = 0; i < n; i++) {
        expr alpha_next = add(add(differentiate(c.alpha), mul(c.alpha, ode.a1)), c.beta);
        expr beta_next = add(mul(c.alpha, ode.a2), differentiate(c.beta));
        c.alpha = std::move(alpha_next);
        c.beta = std::move(beta_next);
    }
    c.n = (long)n;
    return c;
}

nimage_coeffs coeffs_from_solutions(const expr& y1, const expr& y2, unsigned n) {
    expr w = sub(mul(y1, differentiate(y2)), mul(y2, differentiate(y1)));
    if (!w.is_single_term() || w.terms.front().logq != 0 ||
        w.terms.front().trig != trig_kind::none)
        throw non_invertible_wronskian("Wronskian is not a single invertible term: " +
                                       format(w));
    expr d1 = differentiate(y1, n + 2);
    expr d2 = differentiate(y2, n + 2);
    nimage_coeffs c;
    c.n = (long)n;
    c.alpha = div_single(sub(mul(d2, y1), mul(y2, d1)), w);
    c.beta = div_single(sub(mul(d1, differentiate(y2)), mul(differentiate(y1), d2)), w);
    return c;
}

expr G(const expr& a, unsigned k, const expr& f) {
    expr cur = f;
    for (unsigned i = 0; i < k; i++)
        cur = mul(a, antiderivative(cur, 2));
    return cur;
}

expr P(const expr& a, unsigned k) {
    expr acc = make_zero(a.center);
    for (unsigned i = 0; i < k; i++)
        acc = add(acc, G(a, k - i, antiderivative(G(a, i, a))));
    return acc;
}

xi_table2::xi_table2(expr a) : a_(std::move(a)) {}

const expr& xi_table2::g(unsigned k) {
    while (g_.size() <= k) {
        if (g_.empty())
            g_.push_back(a_);
        else
            g_.push_back(mul(a_, antiderivative(g_.back(), 2)));
    }
    return g_[k];
}

const expr& xi_table2::p(unsigned k) {
    while (p_.size() <= k) {
        unsigned kk = (unsigned)p_.size();
        expr acc = make_zero(a_.center);
        for (unsigned i = 0; i < kk; i++) {
            // G_{kk-i}([G_i]_1) built from the memoized chain head
            expr inner = antiderivative(g(i));
            acc = add(acc, G(a_, kk - i, inner));
        }
        p_.push_back(std::move(acc));
    }
    return p_[k];
}

void xi_table2::extend(unsigned k) {
    while (entries_.size() <= k) {
        unsigned kk = (unsigned)entries_.size();
        if (kk == 0) {
            entries_.emplace_back(negate(antiderivative(a_, 2)),
                                  scale(antiderivative(a_, 3), rational(-2)));
            continue;
        }
        expr xi1 = negate(add(antiderivative(g(kk), 2),
                              scale(antiderivative(p(kk)), rational(2))));
        expr xi2 = scale(add(antiderivative(g(kk), 3), antiderivative(p(kk), 2)),
                         rational(-2));
        for (unsigned s = 0; s < kk; s++) {
            const auto& prev = entries_[kk - s - 1];
            expr gs2 = antiderivative(g(s), 2);
            expr ps1 = antiderivative(p(s));
            xi1 = add(xi1, mul(prev.first, add(gs2, scale(ps1, rational(2)))));
            xi1 = sub(xi1, mul(prev.second, antiderivative(g(s))));
            expr gs3 = antiderivative(g(s), 3);
            expr ps2 = antiderivative(p(s), 2);
            xi2 = add(xi2, scale(mul(prev.first, add(gs3, ps2)), rational(2)));
            xi2 = sub(xi2, mul(prev.second, gs2));
        }
        entries_.emplace_back(std::move(xi1), std::move(xi2));
    }
}

const std::pair<expr, expr>& xi_table2::xi_neg(unsigned k) {
    extend(k);
    return entries_[k];
}

expr xi_general(xi_table2& table, unsigned k, long p) {
    auto piece = [&](unsigned idx) {
        // p*[G_idx]_1 - 2*P_idx
        return sub(scale(antiderivative(table.g(idx)), rational(p)),
                   scale(table.p(idx), rational(2)));
    };
    expr acc = dn(p, piece(k));
    for (unsigned s = 0; s < k; s++) {
        const auto& prev = table.xi_neg(k - s - 1);
        acc = sub(acc, mul(prev.second, dn(p, table.g(s))));
        acc = sub(acc, mul(prev.first, dn(p, piece(s))));
    }
    return acc;
}

// xi_k at non-negative arguments through the plain recurrence
//   xi_k(P) = sum_{i=0}^{P-2k} xi_{k-1}(i+2k-2) C(P, i+2k) D^{P-2k-i} a
// with xi_0(j) = j * D^{j-1} a and xi_0(0) = 0.
static expr xi_pos(const expr& a, unsigned k, long arg) {
    if (k == 0) {
        if (arg <= 0)
            return make_zero(a.center);
        return scale(differentiate(a, (unsigned)(arg - 1)), rational(arg));
    }
    expr acc = make_zero(a.center);
    long top = arg - 2 * (long)k;
    for (long i = 0; i <= top; i++) {
        rational c = binom(arg, i + 2 * (long)k);
        if (c == 0)
            continue;
        expr inner = xi_pos(a, k - 1, i + 2 * (long)k - 2);
        if (inner.is_zero())
            continue;
        acc = add(acc, scale(mul(inner, differentiate(a, (unsigned)(top - i))), c));
    }
    return acc;
}

expr xi_bruteforce(const expr& a, unsigned k, unsigned p2) {
    if (k < 1)
        throw kernel_error("xi_bruteforce requires k >= 1");
    return xi_pos(a, k, (long)p2);
}

expr xi_closed_diff(const expr& a, unsigned p, closed_form which) {
    rational P((long)p);
    switch (which) {
        case closed_form::top:
            return make_zero(a.center);
        case closed_form::top_odd:
            return expr_pow(a, p + 1);
        case closed_form::sub1: {
            rational c = P * (P + 1);
            if (c == 0 || p == 0)
                return make_zero(a.center);
            return scale(mul(expr_pow(a, p - 1), differentiate(a)), c);
        }
        case closed_form::sub2: {
            expr acc = make_zero(a.center);
            rational base = P * P * (P - 1) * (P + 1);
            if (p >= 2) {
                rational c1 = base / 3;
                if (c1 != 0)
                    acc = add(acc, scale(mul(expr_pow(a, p - 2), differentiate(a, 3)), c1));
            }
            if (p >= 3) {
                rational c2 = rational(2) * base * (P - 2) / 3;
                if (c2 != 0)
                    acc = add(acc, scale(mul(expr_pow(a, p - 3),
                                             mul(differentiate(a), differentiate(a, 2))),
                                         c2));
            }
            if (p >= 4) {
                rational c3 = base * (P - 2) * (P - 3) / 6;
                if (c3 != 0)
                    acc = add(acc, scale(mul(expr_pow(a, p - 4),
                                             expr_pow(differentiate(a), 3)),
                                         c3));
            }
            return acc;
        }
    }
    return make_zero(a.center);
}

solution2 assemble2(xi_table2& table, unsigned N) {
    expr sum1 = make_zero(table.a().center);
    expr sum2 = make_zero(table.a().center);
    for (unsigned k = 0; k <= N; k++) {
        const auto& e = table.xi_neg(k);
        sum1 = add(sum1, e.first);
        sum2 = add(sum2, e.second);
    }
    expr x = make_x(table.a().center);
    solution2 s;
    s.a = table.a();
    s.N = N;
    s.y1 = add(make_const(-1, table.a().center), sum1);
    s.y2 = add(sub(sum2, mul(x, sum1)), x);
    return s;
}

solution2 assemble2(const expr& a, unsigned N) {
    xi_table2 table(a);
    return assemble2(table, N);
}

} // namespace odes
