#include <doctest.h>

#include <cmath>

#include "odes/errors.h"
#include "odes/eval.h"
#include "odes/nimage2.h"
#include "odes/nonhom.h"
#include "odes/parse.h"

using namespace odes;

static expr E(const std::string& s) { return parse(s); }

static std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; i++)
        g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

TEST_CASE("problem construction validates the homogeneous solutions") {
    CHECK_NOTHROW(nonhom_problem::make(2, {make_zero(), E("-1")}, E("1"), {E("exp(x)")}));
    CHECK_THROWS(nonhom_problem::make(2, {make_zero(), E("-1")}, E("1"), {E("x")}));
    CHECK_THROWS(nonhom_problem::make(3, {make_zero(), make_zero(), E("-1")}, E("1"),
                                      {E("exp(x)")}));
}

TEST_CASE("particular2 symbolic cases") {
    nonhom_problem p1 =
        nonhom_problem::make(2, {make_zero(), E("-1")}, E("1"), {E("exp(x)")});
    particular_result r1 = particular2(p1);
    REQUIRE(r1.symbolic);
    CHECK(*r1.symbolic == E("-1"));
    CHECK(backsubstitute(p1, *r1.symbolic).is_zero());

    nonhom_problem p2 =
        nonhom_problem::make(2, {make_zero(), E("-1")}, E("exp(2*x)"), {E("exp(x)")});
    particular_result r2 = particular2(p2);
    REQUIRE(r2.symbolic);
    CHECK(*r2.symbolic == E("exp(2*x)/3"));

    nonhom_problem p0 =
        nonhom_problem::make(2, {make_zero(), E("-1")}, make_zero(), {E("exp(x)")});
    particular_result r0 = particular2(p0);
    REQUIRE(r0.symbolic);
    CHECK(r0.symbolic->is_zero());
}

TEST_CASE("particular3 symbolic cases") {
    // roots 1, 2, 3: y''' - 6y'' + 11y' - 6y = F
    nonhom_problem p = nonhom_problem::make(3, {E("-6"), E("11"), E("-6")},
                                            E("exp(4*x)"), {E("exp(x)"), E("exp(2*x)")});
    particular_result r = particular3(p);
    REQUIRE(r.symbolic);
    CHECK(*r.symbolic == E("exp(4*x)/6"));
    CHECK(backsubstitute(p, *r.symbolic).is_zero());

    // y''' = 6 with the independent pair x, x^2
    nonhom_problem pd = nonhom_problem::make(
        3, {make_zero(), make_zero(), make_zero()}, E("6"), {E("x"), E("x^2")});
    particular_result rd = particular3(pd);
    REQUIRE(rd.symbolic);
    CHECK(backsubstitute(pd, *rd.symbolic).is_zero());
    CHECK(differentiate(*rd.symbolic, 3) == E("6"));

    nonhom_problem pz = nonhom_problem::make(3, {E("-6"), E("11"), E("-6")},
                                             make_zero(), {E("exp(x)"), E("exp(2*x)")});
    particular_result rz = particular3(pz);
    REQUIRE(rz.symbolic);
    CHECK(rz.symbolic->is_zero());
}

TEST_CASE("particular_m reduces to the lower orders and covers order four") {
    // roots 1..4, F = e^{5x}: Y = e^{5x}/24
    nonhom_problem p = nonhom_problem::make(
        4, {E("-10"), E("35"), E("-50"), E("24")}, E("exp(5*x)"),
        {E("exp(x)"), E("exp(2*x)"), E("exp(3*x)")});
    particular_result r = particular_m(p);
    REQUIRE(r.symbolic);
    CHECK(*r.symbolic == E("exp(5*x)/24"));
    CHECK(backsubstitute(p, *r.symbolic).is_zero());
}

TEST_CASE("homogeneous shift leaves the residual zero") {
    nonhom_problem p =
        nonhom_problem::make(2, {make_zero(), E("-1")}, E("exp(2*x)"), {E("exp(x)")});
    particular_result r = particular2(p);
    REQUIRE(r.symbolic);
    expr shifted = add(*r.symbolic, scale(E("exp(x)"), make_rat(7, 3)));
    CHECK(backsubstitute(p, shifted).is_zero());
}

TEST_CASE("nested_quadrature basics") {
    auto grid = linspace(0.0, 1.0, 101);
    SUBCASE("integral of 1 is x") {
        grid_function g = nested_quadrature({{[](double) { return 1.0; }, true}}, grid);
        double err = 0;
        for (std::size_t i = 0; i < g.x.size(); i++)
            err = std::max(err, std::fabs(g.v[i] - g.x[i]));
        CHECK(err <= 1e-12);
    }
    SUBCASE("double integral of x is x^3/6") {
        grid_function g = nested_quadrature(
            {{[](double x) { return x; }, true}, {[](double) { return 1.0; }, true}},
            grid);
        double err = 0;
        for (std::size_t i = 0; i < g.x.size(); i++)
            err = std::max(err, std::fabs(g.v[i] - g.x[i] * g.x[i] * g.x[i] / 6));
        CHECK(err <= 1e-10);
    }
    SUBCASE("integral of e^x anchors at the left endpoint") {
        grid_function g =
            nested_quadrature({{[](double x) { return std::exp(x); }, true}}, grid);
        double err = 0;
        for (std::size_t i = 0; i < g.x.size(); i++)
            err = std::max(err, std::fabs(g.v[i] - (std::exp(g.x[i]) - 1.0)));
        CHECK(err <= 1e-10);
    }
    SUBCASE("rejects bad grids") {
        CHECK_THROWS(nested_quadrature({{[](double) { return 1.0; }, true}},
                                       std::vector<double>{0, 1, 2}));
        CHECK_THROWS(nested_quadrature({{[](double) { return 1.0; }, true}},
                                       std::vector<double>{0, 1, 1, 2, 3}));
    }
}

TEST_CASE("numeric fallback solves the Airy-forced equation") {
    // Y'' - x Y = 1 with the truncated series solution as the homogeneous input
    solution2 s = assemble2(E("x"), 7);
    nonhom_problem p =
        nonhom_problem::make_unchecked(2, {make_zero(), E("-x")}, E("1"), {s.y1});
    auto grid = linspace(0.0, 1.0, 1001);
    particular_result r = particular_m(p, grid);
    REQUIRE(r.numeric);
    CHECK(!r.fallback_reason.empty());
    const grid_function& g = *r.numeric;
    double h = g.x[1] - g.x[0];
    double worst = 0;
    for (std::size_t i = 1; i + 1 < g.x.size(); i++) {
        double ypp = (g.v[i - 1] - 2 * g.v[i] + g.v[i + 1]) / (h * h);
        double resid = ypp - g.x[i] * g.v[i] - 1.0;
        worst = std::max(worst, std::fabs(resid));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("numeric path rejects a vanishing homogeneous solution") {
    // x - 1/2 solves Y'' = 0, is multi-term (forces the numeric path)
    // and crosses zero inside the grid
    nonhom_problem p = nonhom_problem::make(2, {make_zero(), make_zero()}, E("x"),
                                            {E("x - 1/2")});
    CHECK_THROWS_AS(particular_m(p, linspace(0.0, 1.0, 101)),
                    singular_homogeneous_solution);
}
