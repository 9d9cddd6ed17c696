#ifndef ODES_VERIFY_H
#define ODES_VERIFY_H

#include <string>
#include <utility>
#include <vector>
#include "odes/expr.h"
#include "odes/morder.h"
#include "odes/nimage2.h"

namespace odes {

// Relative accuracy delta = |Y^(m) - sum a_p Y^(m-p)| / |a_m Y| per
// sample point, differentiated exactly and evaluated in high precision.
struct residual_sample {
    double x = 0;
    bool defined = true;
    double delta = 0;
};

struct residual_report {
    std::string problem;
    unsigned truncation = 0;
    std::vector<residual_sample> samples; // sorted by x
    double max_delta = 0;                 // over defined samples
};

residual_report residual_report_for(const ode_m& ode, const expr& Y,
                                    const std::vector<rational>& grid,
                                    unsigned digits = 80, unsigned truncation = 0);
residual_report residual_report_for(const reduced_ode2& ode, const expr& Y,
                                    const std::vector<rational>& grid,
                                    unsigned digits = 80, unsigned truncation = 0);

// Coefficient recurrences of the y'' = x*y solutions:
// B(k+1) = (9(k+1)^2 - 3k - 3) B(k), H(k+1) = (3k+3+9(k+1)^2) H(k).
std::pair<std::vector<bigint>, std::vector<bigint>> airy_oracle(unsigned K);

// For y'' = e^x y: B(k) = (k!)^2 and F(k) = 2 H_k / (k!)^2 (F(0)=0).
std::pair<std::vector<rational>, std::vector<rational>> exp_oracle(unsigned K);

// Log-power series sum b_i ln(x+1)^i from the three-term recurrence
// i(i-1) b_i + (1-i) b_{i-1} - b_{i-2} = 0, b_0 = 871, b_1 = 481.
expr euler_series(unsigned N);

// True iff the m=2 specialization of the m-order xi machinery equals
// the second-order xi table, rows 0..N, exactly.
bool crosscheck_m2(const expr& a, unsigned N);

std::vector<rational> make_grid(const rational& lo, const rational& hi, unsigned count);

} // namespace odes

#endif
