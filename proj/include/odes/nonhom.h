#ifndef ODES_NONHOM_H
#define ODES_NONHOM_H

#include <functional>
#include <optional>
#include <string>
#include <vector>
#include "odes/expr.h"

namespace odes {

// y^(m) + sum_p b_p y^(m-p) = F, with m-1 known homogeneous solutions.
struct nonhom_problem {
    unsigned m = 2;
    std::vector<expr> b; // b_1..b_m
    expr F;
    std::vector<expr> homog; // y_1..y_{m-1}, each checked at construction

    static nonhom_problem make(unsigned m, std::vector<expr> b, expr F,
                               std::vector<expr> homog);
    // Skips the exact solution check; for truncated series inputs whose
    // residual is nonzero but small (the result is then only accepted
    // through residual verification).
    static nonhom_problem make_unchecked(unsigned m, std::vector<expr> b, expr F,
                                         std::vector<expr> homog);
};

struct grid_function {
    std::vector<double> x;
    std::vector<double> v;
    struct meta_t {
        int quadrature_order = 4;
        int refinements = 1;
        std::string note;
    } meta;
};

struct particular_result {
    std::optional<expr> symbolic;     // present when the kernel closed
    std::optional<grid_function> numeric;
    std::string fallback_reason;      // why the numeric path was taken
};

// One cumulative-quadrature pipeline stage: multiply the running value
// by `multiplier(x)`, then (optionally) integrate from the left endpoint.
struct quad_stage {
    std::function<double(double)> multiplier;
    bool integrate = true;
};

// Composite local-cubic cumulative integration with one Richardson
// refinement; constants anchored at the left grid endpoint.
grid_function nested_quadrature(const std::vector<quad_stage>& plan,
                                const std::vector<double>& grid);

// Particular solutions via the iterated-quotient formulas; symbolic
// when every quotient collapses inside the kernel, numeric otherwise.
particular_result particular2(const nonhom_problem& p,
                              const std::vector<double>& grid = {});
particular_result particular3(const nonhom_problem& p,
                              const std::vector<double>& grid = {});
particular_result particular_m(const nonhom_problem& p,
                               const std::vector<double>& grid = {});

// LHS(Y) - F for the problem's operator, exact.
expr backsubstitute(const nonhom_problem& p, const expr& Y);

} // namespace odes

#endif
