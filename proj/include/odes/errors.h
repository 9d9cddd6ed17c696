#ifndef ODES_ERRORS_H
#define ODES_ERRORS_H

#include <stdexcept>
#include <string>

namespace odes {

struct kernel_error : std::runtime_error {
    explicit kernel_error(const std::string& what) : std::runtime_error(what) {}
};

// Two expressions developed around different centers were combined.
struct center_mismatch : kernel_error {
    explicit center_mismatch(const std::string& what) : kernel_error(what) {}
};

// The requested operation would leave the closed term family
// (ln*exp products, fractional powers under exp/trig, and so on).
struct unsupported_combination : kernel_error {
    explicit unsupported_combination(const std::string& what) : kernel_error(what) {}
};

// A term outside the closed families reached the antiderivative.
struct non_elementary : kernel_error {
    explicit non_elementary(const std::string& what) : kernel_error(what) {}
};

// Evaluation at a point outside a term's domain (log or fractional
// power at or left of the center).
struct domain_error : kernel_error {
    explicit domain_error(const std::string& what) : kernel_error(what) {}
};

struct syntax_error : kernel_error {
    syntax_error(const std::string& what, std::size_t pos)
        : kernel_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct non_invertible_wronskian : kernel_error {
    explicit non_invertible_wronskian(const std::string& what) : kernel_error(what) {}
};

struct singular_homogeneous_solution : kernel_error {
    explicit singular_homogeneous_solution(const std::string& what) : kernel_error(what) {}
};

struct non_finite_value : kernel_error {
    explicit non_finite_value(const std::string& what) : kernel_error(what) {}
};

} // namespace odes

#endif
