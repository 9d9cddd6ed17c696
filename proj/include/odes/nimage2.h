#ifndef ODES_NIMAGE2_H
#define ODES_NIMAGE2_H

#include <optional>
#include <utility>
#include <vector>
#include "odes/expr.h"

namespace odes {

// y'' = a1*y' + a2*y
struct general_ode2 {
    expr a1;
    expr a2;
};

// y'' = a*y (reduced / normal form)
struct reduced_ode2 {
    expr a;
};

// Coefficients of the n-image  y^(2+n) = alpha(n)*y' + beta(n)*y.
struct nimage_coeffs {
    long n = 0;
    expr alpha;
    expr beta;
};

struct reduction_result {
    reduced_ode2 reduced;
    // e^{(1/2) Int a1}, present only when it stays inside the kernel
    std::optional<expr> multiplier;
    std::string multiplier_text;
};

// a = a2 + a1^2/4 - a1'/2 and the solution multiplier e^{(1/2) Int a1}.
reduction_result reduce_to_normal(const general_ode2& ode);

// Formal adjoint coefficients b1 = -a1, b2 = a2 - a1'.
general_ode2 adjoint2(const general_ode2& ode);

// alpha/beta by iterating the forward recurrence from alpha(0)=a1, beta(0)=a2.
nimage_coeffs nimage_forward(const general_ode2& ode, unsigned n);

// alpha/beta recovered from two known independent solutions; the
// Wronskian must normalize to a single invertible term.
nimage_coeffs coeffs_from_solutions(const expr& y1, const expr& y2, unsigned n);

// Iterated-integral operators: G(a,0,f)=f, G(a,k,f)=a*[G(a,k-1,f)]_2,
// P(a,0)=0, P(a,k)=sum_{i<k} G(a,k-i,[G(a,i,a)]_1).
expr G(const expr& a, unsigned k, const expr& f);
expr P(const expr& a, unsigned k);

// Memoized xi table for y'' = a*y.
class xi_table2 {
  public:
    explicit xi_table2(expr a);

    const expr& a() const { return a_; }
    // xi_k(-1), xi_k(-2)
    const std::pair<expr, expr>& xi_neg(unsigned k);
    const expr& g(unsigned k); // G_k(a)
    const expr& p(unsigned k); // P_k(a)
    unsigned computed() const { return (unsigned)entries_.size(); }

  private:
    void extend(unsigned k);
    expr a_;
    std::vector<std::pair<expr, expr>> entries_;
    std::vector<expr> g_;
    std::vector<expr> p_;
};

inline const std::pair<expr, expr>& xi_neg(xi_table2& table, unsigned k) {
    return table.xi_neg(k);
}

// xi_k evaluated at any integer argument p (positive p differentiates,
// negative p integrates); specializes to xi_neg at p in {-1,-2}.
expr xi_general(xi_table2& table, unsigned k, long p);

// Independent positive-argument oracle: the plain nested recurrence
// evaluated down to xi_0(j) = j * D^{j-1} a, sharing nothing with the
// G/P route above.
expr xi_bruteforce(const expr& a, unsigned k, unsigned p2);

enum class closed_form { top, top_odd, sub1, sub2 };

// Differential-method closed forms: xi_p(2p)=0, xi_p(2p+1)=a^{p+1},
// xi_{p-1}(2p)=a^{p-1} p(p+1) a', and the three-term xi_{p-2}(2p).
expr xi_closed_diff(const expr& a, unsigned p, closed_form which);

// Truncated partial solutions y1 = -1 + sum xi_k(-1),
// y2 = sum xi_k(-2) - x*sum xi_k(-1) + x.
struct solution2 {
    expr a;
    unsigned N = 0;
    expr y1;
    expr y2;
};

solution2 assemble2(const expr& a, unsigned N);
solution2 assemble2(xi_table2& table, unsigned N);

} // namespace odes

#endif
