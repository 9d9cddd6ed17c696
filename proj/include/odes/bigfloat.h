#ifndef ODES_BIGFLOAT_H
#define ODES_BIGFLOAT_H

#include <mpfr.h>
#include <string>
#include "odes/rational.h"

namespace odes {

// RAII wrapper over an mpfr_t. Results carry the larger precision of
// their operands; construct with digits10() to choose a working
// precision in decimal digits.
class bigfloat {
  public:
    bigfloat();
    explicit bigfloat(mpfr_prec_t bits);
    bigfloat(const bigfloat& o);
    bigfloat(bigfloat&& o) noexcept;
    bigfloat& operator=(const bigfloat& o);
    bigfloat& operator=(bigfloat&& o) noexcept;
    ~bigfloat();

    static mpfr_prec_t digits10(unsigned digits);
    static bigfloat from(double v, mpfr_prec_t bits);
    static bigfloat from(const rational& q, mpfr_prec_t bits);
    static bigfloat from(long v, mpfr_prec_t bits);
    static bigfloat pi(mpfr_prec_t bits);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(unsigned digits = 20) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend bigfloat operator+(const bigfloat& a, const bigfloat& b);
    friend bigfloat operator-(const bigfloat& a, const bigfloat& b);
    friend bigfloat operator*(const bigfloat& a, const bigfloat& b);
    friend bigfloat operator/(const bigfloat& a, const bigfloat& b);
    bigfloat operator-() const;
    bigfloat& operator+=(const bigfloat& b);

    friend int cmp(const bigfloat& a, const bigfloat& b);
    friend bool operator<(const bigfloat& a, const bigfloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const bigfloat& a, const bigfloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const bigfloat& a, const bigfloat& b) { return cmp(a, b) <= 0; }

    friend bigfloat abs(const bigfloat& a);
    friend bigfloat exp(const bigfloat& a);
    friend bigfloat log(const bigfloat& a);
    friend bigfloat sin(const bigfloat& a);
    friend bigfloat cos(const bigfloat& a);
    // a^q for rational q; a must be positive unless q is an integer.
    friend bigfloat pow(const bigfloat& a, const rational& q);

  private:
    mpfr_t v_;
};

} // namespace odes

#endif
