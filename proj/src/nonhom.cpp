#include "odes/nonhom.h"
#include "odes/errors.h"
#include "odes/eval.h"

#include <cmath>

namespace odes {

expr backsubstitute(const nonhom_problem& p, const expr& Y) {
    expr lhs = differentiate(Y, p.m);
    for (unsigned i = 1; i <= p.m; i++)
        lhs = add(lhs, mul(p.b[i - 1], differentiate(Y, p.m - i)));
    return sub(lhs, p.F);
}

nonhom_problem nonhom_problem::make_unchecked(unsigned m, std::vector<expr> b, expr F,
                                              std::vector<expr> homog) {
    if (m < 2 || b.size() != m)
        throw kernel_error("nonhom problem needs b_1..b_m with m >= 2");
    if (homog.size() + 1 != m)
        throw kernel_error("nonhom problem needs exactly m-1 homogeneous solutions");
    nonhom_problem p;
    p.m = m;
    p.b = std::move(b);
    p.F = std::move(F);
    p.homog = std::move(homog);
    return p;
}

nonhom_problem nonhom_problem::make(unsigned m, std::vector<expr> b, expr F,
                                    std::vector<expr> homog) {
    nonhom_problem p = make_unchecked(m, std::move(b), std::move(F), std::move(homog));
    nonhom_problem hom = p;
    hom.F = make_zero(p.F.center);
    for (const expr& y : p.homog) {
        if (!backsubstitute(hom, y).is_zero())
            throw kernel_error("claimed homogeneous solution fails the equation: " +
                               format(y));
    }
    return p;
}

// ---- symbolic path ---------------------------------------------------

// e^{sign * Int b1} as a kernel term, or nothing.
static std::optional<expr> exp_of_integral(const expr& b1, int sign) {
    expr ib = antiderivative(b1);
    if (ib.is_zero())
        return make_const(1, b1.center);
    if (!ib.is_single_term())
        return std::nullopt;
    const term& t = ib.terms.front();
    if (t.pow != 1 || t.logq != 0 || t.expk != 0 || t.trig != trig_kind::none)
        return std::nullopt;
    term r;
    r.coeff = 1;
    r.expk = sign > 0 ? t.coeff : -t.coeff;
    return make_term(r, b1.center);
}

static bool single_invertible(const expr& e) {
    return e.is_single_term() && e.terms.front().logq == 0 &&
           e.terms.front().trig == trig_kind::none;
}

// Y = y_{m-1} Int Z_{m-2} Int ... Int Z_1 V Int (w F),
// Z_i = (y_i / y_{i+1})', V = e^{-Int b1} / (y^m prod Z_j^{j+1}),
// w = e^{Int b1} y^{m-1} prod Z_j^j, with y = y_{m-1}.
static std::optional<expr> particular_symbolic(const nonhom_problem& p,
                                               std::string& reason) {
    unsigned m = p.m;
    const expr& y = p.homog[m - 2];
    auto eplus = exp_of_integral(p.b[0], +1);
    auto eminus = exp_of_integral(p.b[0], -1);
    if (!eplus || !eminus) {
        reason = "e^(Int b1) leaves the kernel";
        return std::nullopt;
    }
    std::vector<expr> Z; // Z_1..Z_{m-2}
    for (unsigned i = 1; i + 1 <= m - 1; i++) {
        if (!single_invertible(p.homog[i])) {
            reason = "quotient denominator y_" + std::to_string(i + 1) +
                     " is not a single term";
            return std::nullopt;
        }
        Z.push_back(differentiate(div_single(p.homog[i - 1], p.homog[i])));
    }
    if (!single_invertible(y)) {
        reason = "y_{m-1} is not a single term";
        return std::nullopt;
    }
    for (const expr& z : Z) {
        if (!single_invertible(z)) {
            reason = "a quotient derivative is not a single term";
            return std::nullopt;
        }
    }
    try {
        expr w = mul(*eplus, expr_pow(y, m - 1));
        for (unsigned j = 1; j <= Z.size(); j++)
            w = mul(w, expr_pow(Z[j - 1], j));
        expr denom = expr_pow(y, m);
        for (unsigned j = 1; j <= Z.size(); j++)
            denom = mul(denom, expr_pow(Z[j - 1], j + 1));
        expr V = div_single(*eminus, denom);

        expr t = antiderivative(mul(w, p.F));
        t = antiderivative(mul(V, t));
        for (const expr& z : Z)
            t = antiderivative(mul(z, t));
        return mul(y, t);
    } catch (const unsupported_combination& e) {
        reason = e.what();
        return std::nullopt;
    }
}

// ---- numeric path ----------------------------------------------------

// cumulative integral of sampled values, local cubic per interval
static std::vector<double> cumulative(const std::vector<double>& x,
                                      const std::vector<double>& f) {
    std::size_t n = x.size();
    std::vector<double> out(n, 0.0);
    if (n < 4)
        throw kernel_error("grid too short for cubic quadrature");
    for (std::size_t i = 0; i + 1 < n; i++) {
        double h = x[i + 1] - x[i];
        double seg;
        if (i == 0)
            seg = h * (9 * f[0] + 19 * f[1] - 5 * f[2] + f[3]) / 24.0;
        else if (i + 2 >= n)
            seg = h * (9 * f[n - 1] + 19 * f[n - 2] - 5 * f[n - 3] + f[n - 4]) / 24.0;
        else
            seg = h * (-f[i - 1] + 13 * f[i] + 13 * f[i + 1] - f[i + 2]) / 24.0;
        out[i + 1] = out[i] + seg;
    }
    return out;
}

static std::vector<double> run_plan(const std::vector<quad_stage>& plan,
                                    const std::vector<double>& x) {
    std::vector<double> v(x.size(), 1.0);
    for (const quad_stage& st : plan) {
        for (std::size_t i = 0; i < x.size(); i++) {
            v[i] *= st.multiplier(x[i]);
            if (!std::isfinite(v[i]))
                throw non_finite_value("non-finite value in quadrature at x = " +
                                       std::to_string(x[i]));
        }
        if (st.integrate)
            v = cumulative(x, v);
    }
    return v;
}

grid_function nested_quadrature(const std::vector<quad_stage>& plan,
                                const std::vector<double>& grid) {
    if (grid.size() < 5)
        throw kernel_error("quadrature grid needs at least 5 points");
    for (std::size_t i = 0; i + 1 < grid.size(); i++)
        if (!(grid[i] < grid[i + 1]))
            throw kernel_error("quadrature grid must be strictly increasing");

    std::vector<double> fine;
    fine.reserve(grid.size() * 2);
    for (std::size_t i = 0; i + 1 < grid.size(); i++) {
        fine.push_back(grid[i]);
        fine.push_back(0.5 * (grid[i] + grid[i + 1]));
    }
    fine.push_back(grid.back());

    std::vector<double> coarse_v = run_plan(plan, grid);
    std::vector<double> fine_v = run_plan(plan, fine);

    grid_function out;
    out.x = grid;
    out.v.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); i++) {
        double vh = coarse_v[i];
        double vh2 = fine_v[2 * i];
        out.v[i] = (16.0 * vh2 - vh) / 15.0;
        if (!std::isfinite(out.v[i]))
            throw non_finite_value("non-finite quadrature result");
    }
    out.meta.quadrature_order = 4;
    out.meta.refinements = 1;
    return out;
}

static std::vector<double> default_grid() {
    std::vector<double> g(201);
    for (int i = 0; i <= 200; i++)
        g[i] = i / 200.0;
    return g;
}

static particular_result particular_numeric(const nonhom_problem& p,
                                            std::vector<double> grid,
                                            std::string reason) {
    if (grid.empty())
        grid = default_grid();
    unsigned m = p.m;
    unsigned zcount = m - 2;
    expr y = p.homog[m - 2];
    for (double xx : grid) {
        if (std::fabs(eval_d(y, xx)) < 1e-12)
            throw singular_homogeneous_solution(
                "homogeneous solution vanishes near x = " + std::to_string(xx));
    }
    std::vector<expr> h = p.homog;
    std::vector<expr> dh;
    for (const expr& yi : h)
        dh.push_back(differentiate(yi));
    // Z_j(x) = (y_j/y_{j+1})' evaluated pointwise, no symbolic quotient
    auto Zval = [h, dh](unsigned j, double xx) {
        double yj = eval_d(h[j - 1], xx), yj1 = eval_d(h[j], xx);
        double dj = eval_d(dh[j - 1], xx), dj1 = eval_d(dh[j], xx);
        return (dj * yj1 - yj * dj1) / (yj1 * yj1);
    };
    expr ib1 = antiderivative(p.b[0]);
    expr F = p.F;

    std::vector<quad_stage> plan;
    plan.push_back({[F, y, ib1, m, zcount, Zval](double xx) {
                        double w = std::exp(eval_d(ib1, xx)) *
                                   std::pow(eval_d(y, xx), (int)m - 1) *
                                   eval_d(F, xx);
                        for (unsigned j = 1; j <= zcount; j++)
                            w *= std::pow(Zval(j, xx), (int)j);
                        return w;
                    },
                    true});
    plan.push_back({[y, ib1, m, zcount, Zval](double xx) {
                        double d = std::pow(eval_d(y, xx), (int)m);
                        for (unsigned j = 1; j <= zcount; j++)
                            d *= std::pow(Zval(j, xx), (int)j + 1);
                        return std::exp(-eval_d(ib1, xx)) / d;
                    },
                    true});
    for (unsigned j = 1; j <= zcount; j++)
        plan.push_back({[Zval, j](double xx) { return Zval(j, xx); }, true});
    plan.push_back({[y](double xx) { return eval_d(y, xx); }, false});

    particular_result res;
    res.numeric = nested_quadrature(plan, grid);
    res.numeric->meta.note = reason;
    res.fallback_reason = std::move(reason);
    return res;
}

particular_result particular_m(const nonhom_problem& p,
                               const std::vector<double>& grid) {
    if (p.F.is_zero()) {
        particular_result r;
        r.symbolic = make_zero(p.F.center);
        return r;
    }
    std::string reason;
    if (auto s = particular_symbolic(p, reason)) {
        particular_result r;
        r.symbolic = std::move(*s);
        return r;
    }
    return particular_numeric(p, grid, reason);
}

particular_result particular2(const nonhom_problem& p,
                              const std::vector<double>& grid) {
    if (p.m != 2)
        throw kernel_error("particular2 requires m = 2");
    return particular_m(p, grid);
}

particular_result particular3(const nonhom_problem& p,
                              const std::vector<double>& grid) {
    if (p.m != 3)
        throw kernel_error("particular3 requires m = 3");
    return particular_m(p, grid);
}

} // namespace odes
