#include <doctest.h>

#include "odes/errors.h"
#include "odes/eval.h"
#include "odes/nimage2.h"
#include "odes/parse.h"

using namespace odes;

static expr E(const std::string& s, long center = 0) {
    return parse(s, rational(center));
}

TEST_CASE("reduce_to_normal") {
    SUBCASE("constant a1 keeps the multiplier in the kernel") {
        reduction_result r = reduce_to_normal({E("1"), E("x*exp(x)")});
        CHECK(r.reduced.a == E("1/4 + x*exp(x)"));
        REQUIRE(r.multiplier);
        CHECK(*r.multiplier == parse("exp(1/2*x)"));
    }
    SUBCASE("a1 = 0 is already reduced") {
        reduction_result r = reduce_to_normal({make_zero(), E("x^2 - 1")});
        CHECK(r.reduced.a == E("x^2 - 1"));
        REQUIRE(r.multiplier);
        CHECK(*r.multiplier == make_const(rational(1)));
    }
    SUBCASE("non-constant a1 still reduces, multiplier leaves the kernel") {
        reduction_result r = reduce_to_normal({E("x"), E("x^2")});
        CHECK(r.reduced.a == E("5*x^2/4 - 1/2"));
        CHECK(!r.multiplier);
    }
}

TEST_CASE("adjoint2") {
    general_ode2 ode{E("x"), E("sqrt(x)")};
    general_ode2 b = adjoint2(ode);
    CHECK(b.a1 == E("-x"));
    CHECK(b.a2 == E("-1 + sqrt(x)"));

    general_ode2 reduced{make_zero(), E("x^3 - 1")};
    general_ode2 self = adjoint2(reduced);
    CHECK(self.a1.is_zero());
    CHECK(self.a2 == reduced.a2);

    general_ode2 twice = adjoint2(adjoint2(ode));
    CHECK(twice.a1 == ode.a1);
    CHECK(twice.a2 == ode.a2);
}

TEST_CASE("nimage_forward low orders and the y''=y pattern") {
    general_ode2 ode{E("x^2"), E("x^3 - 1")};
    nimage_coeffs c1 = nimage_forward(ode, 1);
    CHECK(c1.alpha == add(add(differentiate(ode.a1), mul(ode.a1, ode.a1)), ode.a2));
    CHECK(c1.beta == add(mul(ode.a1, ode.a2), differentiate(ode.a2)));

    nimage_coeffs c2 = nimage_forward(ode, 2);
    expr alpha2 = add(add(differentiate(ode.a1, 2),
                          scale(mul(ode.a1, differentiate(ode.a1)), rational(3))),
                      add(scale(differentiate(ode.a2), rational(2)),
                          add(expr_pow(ode.a1, 3),
                              scale(mul(ode.a1, ode.a2), rational(2)))));
    CHECK(c2.alpha == alpha2);

    general_ode2 simple{make_zero(), make_const(rational(1))};
    for (unsigned n = 0; n <= 5; n++) {
        nimage_coeffs c = nimage_forward(simple, n);
        if (n % 2 == 1) {
            CHECK(c.alpha == make_const(rational(1)));
            CHECK(c.beta.is_zero());
        } else {
            CHECK(c.alpha.is_zero());
            CHECK(c.beta == make_const(rational(1)));
        }
    }
}

TEST_CASE("forward coefficients satisfy the two-step recurrence") {
    general_ode2 ode{E("x^2"), E("x^3 - 1")};
    for (unsigned n = 0; n <= 4; n++) {
        nimage_coeffs a0 = nimage_forward(ode, n);
        nimage_coeffs a1 = nimage_forward(ode, n + 1);
        nimage_coeffs a2 = nimage_forward(ode, n + 2);
        expr rhs = add(mul(a0.alpha, sub(ode.a2, differentiate(ode.a1))),
                       add(scale(differentiate(a1.alpha), rational(2)),
                           sub(mul(a1.alpha, ode.a1),
                               add(mul(differentiate(a0.alpha), ode.a1),
                                   differentiate(a0.alpha, 2)))));
        CHECK(a2.alpha == rhs);
    }
}

TEST_CASE("coeffs_from_solutions") {
    expr y1 = E("exp(x)"), y2 = E("exp(-x)");
    nimage_coeffs c2 = coeffs_from_solutions(y1, y2, 2);
    CHECK(c2.alpha.is_zero());
    CHECK(c2.beta == make_const(rational(1)));
    nimage_coeffs c3 = coeffs_from_solutions(y1, y2, 3);
    CHECK(c3.alpha == make_const(rational(1)));
    CHECK(c3.beta.is_zero());

    nimage_coeffs c0 = coeffs_from_solutions(E("exp(2*x)"), E("exp(-2*x)"), 0);
    CHECK(c0.alpha.is_zero());
    CHECK(c0.beta == make_const(rational(4)));

    CHECK_THROWS_AS(coeffs_from_solutions(E("x"), E("ln(x)"), 0),
                    non_invertible_wronskian);
}

TEST_CASE("G and P operators") {
    CHECK(G(E("x"), 1, E("x")) == E("x^4/6"));
    CHECK(G(E("x"), 0, E("x^2")) == E("x^2"));
    CHECK(P(E("x"), 1) == E("x^5/24"));
    CHECK(P(E("x"), 0).is_zero());
    CHECK(G(E("exp(x)"), 1, E("exp(x)")) == E("exp(2*x)"));
}

TEST_CASE("xi table golden entries") {
    SUBCASE("a = x") {
        xi_table2 t(E("x"));
        CHECK(t.xi_neg(0).first == E("-x^3/6"));
        CHECK(t.xi_neg(0).second == E("-x^4/12"));
        CHECK(t.xi_neg(1).first == E("-x^6/180"));
        CHECK(t.xi_neg(1).second == E("-x^7/280"));
        CHECK(t.xi_neg(2).first == E("-x^9/12960"));
        CHECK(t.xi_neg(2).second == E("-x^10/18144"));
        CHECK(t.xi_neg(3).first == E("-x^12/1710720"));
        CHECK(t.xi_neg(3).second == E("-23*x^13/51891840"));
    }
    SUBCASE("a = e^x") {
        xi_table2 t(E("exp(x)"));
        CHECK(t.xi_neg(2).first == E("-exp(3*x)/36"));
        CHECK(t.xi_neg(2).second == E("-11*exp(3*x)/108"));
    }
    SUBCASE("a = sin x") {
        xi_table2 t(E("sin(x)"));
        CHECK(t.xi_neg(0).first == E("sin(x)"));
        CHECK(t.xi_neg(0).second == E("-2*cos(x)"));
    }
}

TEST_CASE("xi_general") {
    SUBCASE("k = 0 specializations") {
        xi_table2 t(E("x"));
        CHECK(xi_general(t, 0, -1) == E("-x^3/6"));
        CHECK(xi_general(t, 0, -2) == E("-x^4/12"));
        CHECK(xi_general(t, 0, 2) == E("2"));
    }
    SUBCASE("xi_1(2) vanishes for any coefficient") {
        for (const char* a : {"x", "x^2 + 1", "exp(x)"}) {
            xi_table2 t(E(a));
            CHECK(xi_general(t, 1, 2).is_zero());
        }
    }
    SUBCASE("positive arguments (frozen by the direct nested sum)") {
        xi_table2 t(E("x"));
        CHECK(xi_general(t, 1, 4) == E("6*x"));
    }
    SUBCASE("matches xi_neg at p = -1, -2") {
        for (const char* a : {"x", "exp(x)", "x^3 - 1"}) {
            xi_table2 t(E(a));
            for (unsigned k = 0; k <= 3; k++) {
                CHECK(xi_general(t, k, -1) == t.xi_neg(k).first);
                CHECK(xi_general(t, k, -2) == t.xi_neg(k).second);
            }
        }
    }
}

TEST_CASE("xi_bruteforce oracle") {
    CHECK(xi_bruteforce(E("x"), 1, 4) == E("6*x"));
    for (unsigned k = 1; k <= 3; k++)
        CHECK(xi_bruteforce(E("x^2 + 1"), k, 2 * k).is_zero());
    {
        xi_table2 t(E("x^2 + 1"));
        CHECK(xi_bruteforce(E("x^2 + 1"), 1, 6) == xi_general(t, 1, 6));
    }
    for (const char* a : {"x", "x^2 + 1", "exp(x)"}) {
        xi_table2 t(E(a));
        for (unsigned k = 1; k <= 3; k++)
            for (unsigned p = 2 * k; p <= 8; p++)
                CHECK(xi_bruteforce(E(a), k, p) == xi_general(t, k, (long)p));
    }
}

TEST_CASE("differential-method closed forms") {
    CHECK(xi_closed_diff(E("x"), 3, closed_form::top).is_zero());
    CHECK(xi_closed_diff(E("x"), 2, closed_form::sub1) == E("6*x"));
    CHECK(xi_closed_diff(E("x"), 1, closed_form::top_odd) == E("x^2"));
    // xi_{p-2}(2p) three-term form against the brute-force route
    expr a = E("x^3");
    CHECK(xi_closed_diff(a, 2, closed_form::sub2) == E("24"));
    CHECK(xi_bruteforce(a, 1, 6) == xi_closed_diff(a, 3, closed_form::sub2));
    CHECK(xi_bruteforce(a, 2, 8) == xi_closed_diff(a, 4, closed_form::sub2));
}

TEST_CASE("assemble2") {
    SUBCASE("zero coefficient") {
        solution2 s = assemble2(make_zero(), 4);
        CHECK(s.y1 == make_const(rational(-1)));
        CHECK(s.y2 == E("x"));
    }
    SUBCASE("Wronskian at the center is -1 for any truncation") {
        // holds whenever the xi components vanish at the center, which
        // gives y1(0) = -1 and y2'(0) = 1
        for (const char* a : {"x", "x^3 - 1", "(x-2)*sqrt(x)"})
            for (unsigned N : {1u, 3u, 5u}) {
                solution2 s = assemble2(E(a), N);
                expr w = sub(mul(s.y1, differentiate(s.y2)),
                             mul(s.y2, differentiate(s.y1)));
                eval_result r = eval(w, rational(0));
                REQUIRE(r.exact);
                CHECK(r.rat == rational(-1));
            }
    }
    SUBCASE("Airy residual collapses to the single tail monomial") {
        for (unsigned N : {3u, 5u, 7u}) {
            solution2 s = assemble2(E("x"), N);
            expr resid = sub(differentiate(s.y1, 2), mul(E("x"), s.y1));
            term tail;
            tail.coeff = 1;
            tail.pow = rational(3 * ((long)N + 1));
            rational c = coefficient(s.y1, tail);
            REQUIRE(c != 0);
            term expect = tail;
            expect.coeff = -c;
            expect.pow = tail.pow + 1;
            CHECK(resid == make_term(expect));
        }
    }
}
