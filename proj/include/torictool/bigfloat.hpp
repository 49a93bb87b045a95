#pragma once

#include "torictool/numbers.hpp"

#include <mpfr.h>
#include <string>
#include <utility>

namespace torictool {

// RAII wrapper around mpfr_t with the mantissa precision (bits) carried by the value.
class BigFloat {
  public:
    explicit BigFloat(long prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat &o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat &&o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat &operator=(const BigFloat &o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat &operator=(BigFloat &&o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long x, long prec) { BigFloat r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
    static BigFloat from_rat(const Rat &q, long prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.backend().data(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_string(const std::string &s, long prec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("bad decimal literal: " + s);
        return r;
    }
    static BigFloat sqrt_of(unsigned long x, long prec) {
        BigFloat r(prec);
        mpfr_sqrt_ui(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(long prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static BigFloat euler_e(long prec) {
        BigFloat one = from_long(1, prec), r(prec);
        mpfr_exp(r.v_, one.v_, MPFR_RNDN);
        return r;
    }
    // 2^e
    static BigFloat pow2(long e, long prec) {
        BigFloat r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    long precision() const { return mpfr_get_prec(v_); }

    BigFloat operator-() const { BigFloat r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    friend BigFloat operator+(const BigFloat &a, const BigFloat &b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat &a, const BigFloat &b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat &a, const BigFloat &b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat &a, const BigFloat &b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const { BigFloat r(precision()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat exp() const { BigFloat r(precision()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat cos() const { BigFloat r(precision()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sin() const { BigFloat r(precision()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sqrt() const { BigFloat r(precision()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }

    int cmp(const BigFloat &o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat &o) const { return cmp(o) < 0; }
    bool operator>(const BigFloat &o) const { return cmp(o) > 0; }
    bool operator<=(const BigFloat &o) const { return cmp(o) <= 0; }
    bool operator>=(const BigFloat &o) const { return cmp(o) >= 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // deterministic decimal rendering, digit count derived from the precision
    std::string str() const {
        long digits = (long)(precision() * 0.30103) + 2;
        char fmt[32];
        snprintf(fmt, sizeof fmt, "%%.%ldRe", digits);
        char *out = nullptr;
        mpfr_asprintf(&out, fmt, v_);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

  private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(long prec = 256) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_long(long x, long prec) { return {BigFloat::from_long(x, prec), BigFloat(prec)}; }
    static BigComplex from_gaussian(const GaussianRational &g, long prec) {
        return {BigFloat::from_rat(g.re, prec), BigFloat::from_rat(g.im, prec)};
    }

    long precision() const { return re.precision(); }

    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator+(const BigComplex &a, const BigComplex &b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex &a, const BigComplex &b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex &a, const BigComplex &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex &a, const BigComplex &b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    // |z| (exact hypot at working precision)
    BigFloat abs() const { return (re * re + im * im).sqrt(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    // e^z
    BigComplex exp() const {
        BigFloat m = re.exp();
        return {m * im.cos(), m * im.sin()};
    }
};

inline BigComplex pow(const BigComplex &base, const Int &e) {
    if (e < 0) throw std::domain_error("negative complex power");
    BigComplex r = BigComplex::from_long(1, base.precision());
    BigComplex b = base;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

} // namespace torictool
