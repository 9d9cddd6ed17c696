#ifndef ODES_LEIBNIZ_H
#define ODES_LEIBNIZ_H

#include <utility>
#include <vector>
#include "odes/expr.h"

namespace odes {

// Weighted Leibniz sums  L[f(i)] = sum_i f(i) C(n,i) u^(i) v^(n-i)
// and their closed forms, executable as exact identities.
struct weight_spec {
    enum class kind { one, power, binom } k = kind::one;
    unsigned power_k = 0; // f(i) = i^power_k
    long binom_z = 0;     // f(i) = C(i - binom_z, binom_k)
    unsigned binom_k = 0;

    static weight_spec one() { return {}; }
    static weight_spec ipow(unsigned k);
    static weight_spec binom(long z, unsigned k);
};

// Direct definition, term by term.
expr leibniz_sum(const weight_spec& w, const expr& u, const expr& v, unsigned n);

// Closed form of L[i^k] via the Stirling-like double sum; must agree
// with leibniz_sum(i^k, ...) exactly.
expr L_power_closed(unsigned k, const expr& u, const expr& v, unsigned n);

// Coefficients r_1..r_{k+1} with sum_s r_s(k) t^{k+1-s} = t(t-1)...(t-k+1),
// computed from the elementary symmetric functions of {0,1,...,k-1}.
std::vector<rational> vieta_coeffs(unsigned k);

// Closed form of L[C(i-z, k)] assembled from vieta_coeffs and L[i^l].
expr L_binom_closed(long z, unsigned k, const expr& u, const expr& v, unsigned n);

// Both sides of the nested-sum identity for the sequence b_0..b_{m-1}
// with weight C(i - k0, i0); the caller asserts lhs == rhs.
std::pair<expr, expr> nested_identity(const std::vector<expr>& b, unsigned k0,
                                      unsigned n, unsigned m);

} // namespace odes

#endif
