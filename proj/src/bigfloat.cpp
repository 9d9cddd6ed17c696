#include "odes/bigfloat.h"
#include "odes/errors.h"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace odes {

static const mpfr_prec_t k_default_bits = 128;

bigfloat::bigfloat() {
    mpfr_init2(v_, k_default_bits);
    mpfr_set_zero(v_, 1);
}

bigfloat::bigfloat(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

bigfloat::bigfloat(const bigfloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

bigfloat::bigfloat(bigfloat&& o) noexcept {
    mpfr_init2(v_, k_default_bits);
    mpfr_swap(v_, o.v_);
}

bigfloat& bigfloat::operator=(const bigfloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

bigfloat& bigfloat::operator=(bigfloat&& o) noexcept {
    if (this != &o)
        mpfr_swap(v_, o.v_);
    return *this;
}

bigfloat::~bigfloat() {
    mpfr_clear(v_);
}

mpfr_prec_t bigfloat::digits10(unsigned digits) {
    return (mpfr_prec_t)(digits * 3.3219280948873626 + 32);
}

bigfloat bigfloat::from(double v, mpfr_prec_t bits) {
    bigfloat r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

bigfloat bigfloat::from(const rational& q, mpfr_prec_t bits) {
    bigfloat r(bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

bigfloat bigfloat::from(long v, mpfr_prec_t bits) {
    bigfloat r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

bigfloat bigfloat::pi(mpfr_prec_t bits) {
    bigfloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string bigfloat::str(unsigned digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%uRg", digits);
    int n = mpfr_snprintf(nullptr, 0, fmt, v_);
    std::vector<char> buf(n + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

static mpfr_prec_t join(const bigfloat& a, const bigfloat& b) {
    return std::max(a.prec(), b.prec());
}

bigfloat operator+(const bigfloat& a, const bigfloat& b) {
    bigfloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

bigfloat operator-(const bigfloat& a, const bigfloat& b) {
    bigfloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

bigfloat operator*(const bigfloat& a, const bigfloat& b) {
    bigfloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

bigfloat operator/(const bigfloat& a, const bigfloat& b) {
    if (b.is_zero())
        throw kernel_error("bigfloat division by zero");
    bigfloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

bigfloat bigfloat::operator-() const {
    bigfloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

bigfloat& bigfloat::operator+=(const bigfloat& b) {
    if (b.prec() > prec())
        mpfr_prec_round(v_, b.prec(), MPFR_RNDN);
    mpfr_add(v_, v_, b.v_, MPFR_RNDN);
    return *this;
}

int cmp(const bigfloat& a, const bigfloat& b) {
    return mpfr_cmp(a.v_, b.v_);
}

bigfloat abs(const bigfloat& a) {
    bigfloat r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

bigfloat exp(const bigfloat& a) {
    bigfloat r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

bigfloat log(const bigfloat& a) {
    if (a.sign() <= 0)
        throw domain_error("log of a non-positive value");
    bigfloat r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

bigfloat sin(const bigfloat& a) {
    bigfloat r(a.prec());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
}

bigfloat cos(const bigfloat& a) {
    bigfloat r(a.prec());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

bigfloat pow(const bigfloat& a, const rational& q) {
    bigfloat r(a.prec());
    if (is_integer(q) && q.get_num().fits_slong_p()) {
        long e = q.get_num().get_si();
        if (a.is_zero() && e < 0)
            throw domain_error("0 raised to a negative power");
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    if (a.is_zero()) {
        if (q < 0)
            throw domain_error("0 raised to a negative power");
        mpfr_set_zero(r.v_, 1);
        return r;
    }
    if (a.sign() < 0)
        throw domain_error("fractional power of a negative value");
    bigfloat e = bigfloat::from(q, a.prec());
    mpfr_pow(r.v_, a.v_, e.v_, MPFR_RNDN);
    return r;
}

} // namespace odes
