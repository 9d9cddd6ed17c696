#ifndef ODES_MORDER_H
#define ODES_MORDER_H

#include <vector>
#include "odes/expr.h"

namespace odes {

// y^(m) = sum_p a_p * y^(m-p), coefficients a[0..m-1] = a_1..a_m.
struct ode_m {
    unsigned m = 2;
    std::vector<expr> a;
};

struct adjoint_coeffs {
    unsigned m = 2;
    std::vector<expr> b; // b_1..b_m
};

// b_k = sum_{i=1}^k (-1)^i C(m-i, m-k) D^{k-i} a_i
adjoint_coeffs adjoint_m(const ode_m& ode);

// Forward n-image recurrence: alpha_p(n+1) = alpha_p' + alpha_{p+1} + alpha_1 b_p
// (alpha_{m+1} absent), from alpha_p(0) = b_p. Returns alpha_1..alpha_m at n.
std::vector<expr> nimage_forward_m(const adjoint_coeffs& b, unsigned n);

// Memoized matrix of xi_{m,s}(-n), rows s = 0..N, columns n = 1..m.
// Row s consumes every column of the rows below it.
class xi_matrix {
  public:
    explicit xi_matrix(adjoint_coeffs b);

    unsigned m() const { return b_.m; }
    const adjoint_coeffs& b() const { return b_; }
    const expr& entry(unsigned s, unsigned n); // xi_{m,s}(-n)
    unsigned rows() const { return (unsigned)rows_.size(); }

  private:
    void compute_row(unsigned s);
    expr principal(unsigned s, unsigned n) const;
    expr correction(unsigned s, unsigned z, unsigned n) const;

    adjoint_coeffs b_;
    rational center_;
    std::vector<std::vector<expr>> rows_;
};

inline const expr& xi_m(xi_matrix& matrix, unsigned s, unsigned n) {
    return matrix.entry(s, n);
}

struct alpha_vector {
    unsigned m = 2;
    unsigned N = 0;
    std::vector<expr> alpha; // alpha(-1)..alpha(-m)
};

alpha_vector alpha_m(xi_matrix& matrix, unsigned N);

struct solution_set {
    unsigned m = 2;
    unsigned N = 0;
    std::vector<expr> Y; // Y_{m,1}..Y_{m,m}
};

// Y_{m,i} = (-1)^i (1 - alpha(-1)) x^{i-1}/(i-1)!
//           + sum_{k=2}^i (-1)^{k+i} alpha(-k) x^{i-k}/(i-k)!
solution_set assemble_m(const alpha_vector& alpha, unsigned m);

} // namespace odes

#endif
