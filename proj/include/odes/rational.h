#ifndef ODES_RATIONAL_H
#define ODES_RATIONAL_H

#include <gmpxx.h>
#include <string>

namespace odes {

// Exact rational arithmetic. GMP keeps the invariants we need
// (denominator > 0, gcd(|num|, den) = 1) as long as values are
// canonicalized on construction, which the helpers below guarantee.
using bigint = mpz_class;
using rational = mpq_class;

rational make_rat(long num, long den = 1);
rational make_rat(const bigint& num, const bigint& den);

// Accepts "7", "-3/4" and plain decimals like "0.25" or "-1.5".
rational rat_from_string(const std::string& s);

std::string rat_to_string(const rational& q);

bool is_integer(const rational& q);
bool fits_long(const rational& q);
long to_long(const rational& q);

bigint factorial(unsigned n);

// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
rational binom(long n, long k);

// Generalized binomial q(q-1)...(q-i+1)/i!, defined for any rational q.
rational gbinom(const rational& q, unsigned i);

// q^e for integer e; negative e requires q != 0.
rational rat_pow(const rational& q, long e);

// H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
rational harmonic(unsigned n);

} // namespace odes

#endif
