#include "odes/rational.h"
#include "odes/errors.h"

namespace odes {

rational make_rat(long num, long den) {
    if (den == 0)
        throw kernel_error("rational with zero denominator");
    rational q(num, den);
    q.canonicalize();
    return q;
}

rational make_rat(const bigint& num, const bigint& den) {
    if (den == 0)
        throw kernel_error("rational with zero denominator");
    rational q(num, den);
    q.canonicalize();
    return q;
}

static bigint bigint_dec(const std::string& s) {
    return bigint(s, 10);
}

rational rat_from_string(const std::string& s) {
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw syntax_error("bad decimal literal '" + s + "'", 0);
        bigint num = bigint_dec(digits);
        bigint den(1);
        for (std::size_t i = 0; i < frac_len; i++)
            den *= 10;
        return make_rat(num, den);
    }
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        bigint num = bigint_dec(s.substr(0, slash));
        bigint den = bigint_dec(s.substr(slash + 1));
        return make_rat(num, den);
    }
    return rational(bigint_dec(s));
}

std::string rat_to_string(const rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const rational& q) {
    return q.get_den() == 1;
}

bool fits_long(const rational& q) {
    return q.get_den() == 1 && q.get_num().fits_slong_p();
}

long to_long(const rational& q) {
    if (!fits_long(q))
        throw kernel_error("rational " + rat_to_string(q) + " is not a small integer");
    return q.get_num().get_si();
}

bigint factorial(unsigned n) {
    bigint f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

rational binom(long n, long k) {
    if (k < 0 || k > n || n < 0)
        return rational(0);
    bigint b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return rational(b);
}

rational gbinom(const rational& q, unsigned i) {
    rational prod(1);
    for (unsigned j = 0; j < i; j++)
        prod *= q - rational((long)j);
    return prod / rational(factorial(i));
}

rational rat_pow(const rational& q, long e) {
    if (e == 0)
        return rational(1);
    if (q == 0) {
        if (e < 0)
            throw kernel_error("0 raised to a negative power");
        return rational(0);
    }
    rational base = e > 0 ? q : rational(1) / q;
    long n = e > 0 ? e : -e;
    rational acc(1);
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

rational harmonic(unsigned n) {
    rational h(0);
    for (unsigned j = 1; j <= n; j++)
        h += make_rat(1, (long)j);
    return h;
}

} // namespace odes
