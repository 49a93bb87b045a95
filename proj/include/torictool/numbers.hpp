#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torictool {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat &q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat &q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int &a, const Int &b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int &a, const Int &b) { return boost::multiprecision::lcm(a, b); }

// floor(a/b) for b != 0
inline Int floor_div(const Int &a, const Int &b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat &q) { return floor_div(num(q), den(q)); }

// reduce into [0,1)
inline Rat mod1(const Rat &q) { return q - Rat(floor_rat(q)); }

inline bool is_integer(const Rat &q) { return den(q) == 1; }

struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() = default;
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(int r) : re(r), im(0) {}

    bool operator==(const GaussianRational &o) const = default;

    GaussianRational operator+(const GaussianRational &o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational &o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational &o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("division by zero Gaussian rational");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussianRational pow(const GaussianRational &base, const Int &e) {
    if (e < 0) throw std::domain_error("negative Gaussian power");
    GaussianRational r(1);
    GaussianRational b = base;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

inline std::string rat_to_string(const Rat &q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

// parse "p" or "p/q" with optional sign; nullopt on malformed input
std::optional<Rat> parse_rational(const std::string &s);

} // namespace torictool
