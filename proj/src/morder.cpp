#include "odes/morder.h"
#include "odes/errors.h"

#include <functional>

namespace odes {

adjoint_coeffs adjoint_m(const ode_m& ode) {
    if (ode.m < 2 || ode.a.size() != ode.m)
        throw kernel_error("ode_m needs coefficients a_1..a_m with m >= 2");
    adjoint_coeffs out;
    out.m = ode.m;
    rational center = ode.a.front().center;
    for (unsigned k = 1; k <= ode.m; k++) {
        expr bk = make_zero(center);
        for (unsigned i = 1; i <= k; i++) {
            rational c = binom((long)(ode.m - i), (long)(ode.m - k));
            if (i % 2 == 1)
                c = -c;
            if (c == 0)
                continue;
            bk = add(bk, scale(differentiate(ode.a[i - 1], k - i), c));
        }
        out.b.push_back(std::move(bk));
    }
    return out;
}

std::vector<expr> nimage_forward_m(const adjoint_coeffs& b, unsigned n) {
    unsigned m = b.m;
    std::vector<expr> alpha = b.b;
    rational center = b.b.front().center;
    for (unsigned step = 0; step < n; step++) {
        std::vector<expr> next(m, make_zero(center));
        for (unsigned p = 1; p <= m; p++) {
            expr v = add(differentiate(alpha[p - 1]), mul(alpha[0], b.b[p - 1]));
            if (p < m)
                v = add(v, alpha[p]);
            next[p - 1] = std::move(v);
        }
        alpha = std::move(next);
    }
    return alpha;
}

xi_matrix::xi_matrix(adjoint_coeffs b) : b_(std::move(b)) {
    if (b_.m < 2 || b_.b.size() != b_.m)
        throw kernel_error("adjoint_coeffs needs b_1..b_m with m >= 2");
    center_ = b_.b.front().center;
}

// Principal multi-index sum of xi_{m,s}(-n): indices i_s..i_0 with
// partial-sum bounds m-1, enumerated outermost-first, k_0..k_{s-1} over
// 1..m, weight (-1)^{i_0+..+i_{s-1}} C(-n,i_s) prod C(k_l-1+i_l, k_l-1),
// applied to the nested bracket and integrated n+i_s times.
expr xi_matrix::principal(unsigned s, unsigned n) const {
    unsigned m = b_.m;
    expr total = make_zero(center_);
    std::vector<unsigned> iv(s + 1, 0);

    std::function<void(unsigned, unsigned)> enum_i = [&](unsigned level, unsigned used) {
        // level runs s down to 0; `used` = i_{level+1} + ... + i_s
        for (unsigned val = 0; val + used <= m - 1; val++) {
            iv[level] = val;
            if (level > 0) {
                enum_i(level - 1, used + val);
                continue;
            }
            unsigned total_i = used + val;
            const expr& head = b_.b[total_i]; // b_{1 + sum i}
            if (head.is_zero())
                continue;
            unsigned sign_exp = total_i - iv[s]; // i_0 + ... + i_{s-1}
            rational w0 = gbinom(rational(-(long)n), iv[s]);
            if (w0 == 0)
                continue;

            std::vector<unsigned> kv(s, 1);
            std::function<void(unsigned)> enum_k = [&](unsigned kl) {
                if (kl == s) {
                    rational w = w0;
                    for (unsigned l = 0; l < s; l++)
                        w *= binom((long)(kv[l] - 1 + iv[l]), (long)(kv[l] - 1));
                    if (sign_exp % 2 == 1)
                        w = -w;
                    if (w == 0)
                        return;
                    expr bracket = head;
                    for (unsigned l = 0; l < s; l++)
                        bracket = mul(antiderivative(bracket, iv[l] + kv[l]),
                                      b_.b[kv[l] - 1]);
                    total = add(total, scale(antiderivative(bracket, n + iv[s]), w));
                    return;
                }
                for (unsigned k = 1; k <= m; k++) {
                    if (b_.b[k - 1].is_zero())
                        continue;
                    kv[kl] = k;
                    enum_k(kl + 1);
                }
            };
            enum_k(0);
        }
    };
    enum_i(s, 0);
    return total;
}

// Correction block for depth z in 1..s: the same machinery one level
// shorter, weighted by xi_{m,s-z}(-i_z).
expr xi_matrix::correction(unsigned s, unsigned z, unsigned n) const {
    unsigned m = b_.m;
    expr total = make_zero(center_);
    std::vector<unsigned> iv(z + 1, 0);

    std::function<void(unsigned, unsigned)> enum_i = [&](unsigned level, unsigned used) {
        if (level == z) {
            for (unsigned val = 1; val <= m; val++) {
                iv[z] = val;
                enum_i(z - 1, val);
            }
            return;
        }
        for (unsigned val = 0; val + used <= m; val++) {
            iv[level] = val;
            if (level > 0) {
                enum_i(level - 1, used + val);
                continue;
            }
            unsigned total_i = used + val; // i_0 + ... + i_z, in 1..m
            const expr& head = b_.b[total_i - 1]; // b_{sum i}
            if (head.is_zero())
                continue;
            const expr& xi_prev = rows_[s - z][iv[z] - 1];
            if (xi_prev.is_zero())
                continue;
            rational w0 = gbinom(rational(-(long)n), iv[z - 1]);
            if (w0 == 0)
                continue;
            unsigned sign_exp = 0;
            for (unsigned l = 0; l + 2 <= z; l++)
                sign_exp += iv[l]; // i_0 + ... + i_{z-2}

            std::vector<unsigned> kv(z - 1, 1);
            std::function<void(unsigned)> enum_k = [&](unsigned kl) {
                if (kl == z - 1) {
                    rational w = w0;
                    for (unsigned l = 0; l + 1 < z; l++)
                        w *= binom((long)(kv[l] - 1 + iv[l]), (long)(kv[l] - 1));
                    if (sign_exp % 2 == 1)
                        w = -w;
                    if (w == 0)
                        return;
                    expr bracket = head;
                    for (unsigned l = 0; l + 1 < z; l++)
                        bracket = mul(antiderivative(bracket, iv[l] + kv[l]),
                                      b_.b[kv[l] - 1]);
                    expr val_expr = antiderivative(bracket, n + iv[z - 1]);
                    total = add(total, scale(mul(val_expr, xi_prev), w));
                    return;
                }
                for (unsigned k = 1; k <= m; k++) {
                    if (b_.b[k - 1].is_zero())
                        continue;
                    kv[kl] = k;
                    enum_k(kl + 1);
                }
            };
            enum_k(0);
        }
    };
    enum_i(z, 0);
    return total;
}

void xi_matrix::compute_row(unsigned s) {
    unsigned m = b_.m;
    std::vector<expr> row;
    row.reserve(m);
    if (s == 0) {
        for (unsigned n = 1; n <= m; n++) {
            expr v = make_zero(center_);
            for (unsigned i = 0; i < m; i++) {
                if (b_.b[i].is_zero())
                    continue;
                rational c = gbinom(rational(-(long)n), i);
                if (c == 0)
                    continue;
                v = add(v, scale(antiderivative(b_.b[i], i + n), c));
            }
            row.push_back(std::move(v));
        }
        rows_.push_back(std::move(row));
        return;
    }
    for (unsigned n = 1; n <= m; n++) {
        expr v = principal(s, n);
        for (unsigned z = 1; z <= s; z++)
            v = sub(v, correction(s, z, n));
        row.push_back(std::move(v));
    }
    rows_.push_back(std::move(row));
}

const expr& xi_matrix::entry(unsigned s, unsigned n) {
    if (n < 1 || n > b_.m)
        throw kernel_error("xi_m column n must be in 1..m");
    while (rows_.size() <= s)
        compute_row((unsigned)rows_.size());
    return rows_[s][n - 1];
}

alpha_vector alpha_m(xi_matrix& matrix, unsigned N) {
    alpha_vector out;
    out.m = matrix.m();
    out.N = N;
    for (unsigned k = 1; k <= matrix.m(); k++) {
        expr sum = make_zero(matrix.b().b.front().center);
        for (unsigned s = 0; s <= N; s++)
            sum = add(sum, matrix.entry(s, k));
        out.alpha.push_back(std::move(sum));
    }
    return out;
}

solution_set assemble_m(const alpha_vector& alpha, unsigned m) {
    if (alpha.alpha.size() < m)
        throw kernel_error("alpha vector shorter than the ODE order");
    rational center = alpha.alpha.front().center;
    expr x = make_x(center);
    solution_set out;
    out.m = m;
    out.N = alpha.N;
    expr one_minus = sub(make_const(1, center), alpha.alpha[0]);
    for (unsigned i = 1; i <= m; i++) {
        rational lead = make_rat(bigint(1), factorial(i - 1));
        if (i % 2 == 1)
            lead = -lead;
        expr yi = scale(mul(one_minus, expr_pow(x, i - 1)), lead);
        for (unsigned k = 2; k <= i; k++) {
            rational c = make_rat(bigint(1), factorial(i - k));
            if ((k + i) % 2 == 1)
                c = -c;
            yi = add(yi, scale(mul(alpha.alpha[k - 1], expr_pow(x, i - k)), c));
        }
        out.Y.push_back(std::move(yi));
    }
    return out;
}

} // namespace odes
