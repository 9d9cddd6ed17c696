#include <doctest.h>

#include "odes/leibniz.h"
#include "odes/parse.h"

using namespace odes;

static expr E(const std::string& s) { return parse(s); }

TEST_CASE("leibniz_sum with unit weight is the Leibniz formula") {
    expr u = E("x^2 + 1"), v = E("x^3 - x");
    for (unsigned n : {0u, 1u, 3u})
        CHECK(leibniz_sum(weight_spec::one(), u, v, n) == differentiate(mul(u, v), n));
    expr ue = E("exp(2*x)"), ve = E("x^2");
    CHECK(leibniz_sum(weight_spec::one(), ue, ve, 3) == differentiate(mul(ue, ve), 3));
}

TEST_CASE("leibniz_sum weighted examples") {
    // frozen by the direct sum: i=1 gives 2*(2x)(3x^2), i=2 gives 2*2*x^3
    CHECK(leibniz_sum(weight_spec::ipow(1), E("x^2"), E("x^3"), 2) == E("16*x^3"));
    CHECK(leibniz_sum(weight_spec::ipow(1), E("x^2"), E("x^3"), 0).is_zero());
    CHECK(leibniz_sum(weight_spec::ipow(1), E("sin(x)"), E("x"), 0).is_zero());
}

TEST_CASE("closed form L[i^k] matches the lowest displayed cases") {
    expr u = E("x^4 - x^2"), v = E("x^3 + 2*x");
    for (unsigned n : {1u, 2u, 4u}) {
        CHECK(L_power_closed(0, u, v, n) == differentiate(mul(u, v), n));
        if (n >= 1)
            CHECK(L_power_closed(1, u, v, n) ==
                  scale(differentiate(mul(differentiate(u), v), n - 1), rational((long)n)));
        if (n >= 2) {
            expr expect =
                add(scale(differentiate(mul(differentiate(u), v), n - 1),
                          rational((long)n)),
                    scale(differentiate(mul(differentiate(u, 2), v), n - 2),
                          rational((long)(n * (n - 1)))));
            CHECK(L_power_closed(2, u, v, n) == expect);
        }
    }
}

TEST_CASE("closed forms equal direct sums over the full test ranges") {
    expr u = E("x^5 - 2*x^3 + x - 3"), v = E("x^4 + x^2 + 2");
    for (unsigned n = 0; n <= 6; n++)
        for (unsigned k = 0; k <= 4; k++)
            CHECK(L_power_closed(k, u, v, n) ==
                  leibniz_sum(weight_spec::ipow(k), u, v, n));
    for (unsigned n = 0; n <= 5; n++)
        for (long z = -2; z <= 2; z++)
            for (unsigned k = 0; k <= 3; k++)
                CHECK(L_binom_closed(z, k, u, v, n) ==
                      leibniz_sum(weight_spec::binom(z, k), u, v, n));
}

TEST_CASE("binomial-weight closed form reduces to the power cases") {
    CHECK(L_binom_closed(0, 0, E("x^2"), E("x^3"), 3) ==
          differentiate(mul(E("x^2"), E("x^3")), 3));
    // C(i, 1) = i
    CHECK(L_binom_closed(0, 1, E("x^2"), E("x^3"), 2) == E("16*x^3"));
    CHECK(L_binom_closed(1, 1, E("x^2"), E("x^3"), 2) ==
          leibniz_sum(weight_spec::binom(1, 1), E("x^2"), E("x^3"), 2));
}

TEST_CASE("vieta coefficients and the reference closed forms") {
    std::vector<rational> r3 = vieta_coeffs(3);
    CHECK(r3[0] == rational(1));
    CHECK(r3[1] == rational(-3));
    CHECK(r3[2] == rational(2));
    CHECK(r3[3] == rational(0));

    // sum_s r_s(4) * 7^{5-s} = 7*6*5*4
    std::vector<rational> r4 = vieta_coeffs(4);
    rational acc(0);
    for (unsigned s = 1; s <= 5; s++)
        acc += r4[s - 1] * rat_pow(rational(7), (long)(5 - s));
    CHECK(acc == rational(840));

    for (unsigned k = 2; k <= 8; k++) {
        std::vector<rational> r = vieta_coeffs(k);
        rational kk((long)k);
        CHECK(r[1] == -binom((long)k, 2));
        if (k >= 3)
            CHECK(r[2] == kk * (kk - 1) * (kk - 2) * (3 * kk - 1) / 24);
        if (k >= 4)
            CHECK(r[3] == -kk * kk * (kk - 2) * (kk - 3) * (kk - 1) * (kk - 1) / 48);
    }
}

TEST_CASE("falling-factorial identity over shifted integer arguments") {
    for (unsigned k = 1; k <= 4; k++) {
        std::vector<rational> r = vieta_coeffs(k);
        for (long z = -2; z <= 2; z++)
            for (long i = -5; i <= (long)k + 5; i++) {
                rational lhs(0);
                for (unsigned s = 1; s <= k + 1; s++)
                    lhs += r[s - 1] * rat_pow(rational(i - z), (long)(k + 1 - s));
                rational prod(1);
                for (unsigned j = 0; j < k; j++)
                    prod *= rational(i - z - (long)j);
                CHECK(lhs == prod);
            }
    }
}

TEST_CASE("nested identity") {
    std::vector<expr> b{E("x"), E("x^2"), E("x^3 - 1"), E("2*x + 1"), E("x^2 - x")};
    SUBCASE("m = 0 gives the empty sum on both sides") {
        auto [lhs, rhs] = nested_identity(b, 1, 2, 0);
        CHECK(lhs.is_zero());
        CHECK(rhs.is_zero());
    }
    SUBCASE("m = 1 collapses to one Leibniz formula") {
        auto [lhs, rhs] = nested_identity(b, 2, 3, 1);
        expr expect = differentiate(mul(antiderivative(b[0], 2), b[2]), 3);
        CHECK(lhs == expect);
        CHECK(rhs == expect);
    }
    SUBCASE("both sides agree for deeper sequences") {
        for (unsigned m = 2; m <= 4; m++)
            for (unsigned k0 = 1; k0 <= 2; k0++)
                for (unsigned n = 0; n <= 3; n++) {
                    auto [lhs, rhs] = nested_identity(b, k0, n, m);
                    CHECK(lhs == rhs);
                }
    }
}
