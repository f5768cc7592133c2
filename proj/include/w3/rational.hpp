#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace w3 {

// Exact rational scalar. Backed by GMP; always canonical (lowest terms,
// positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_double(const Rat& r) { return r.get_d(); }

// Element of Q(sqrt(-3)), stored as re + im*sqrt(-3).
struct QuadRat {
    Rat re;
    Rat im;

    QuadRat() : re(0), im(0) {}
    QuadRat(Rat r) : re(std::move(r)), im(0) {}
    QuadRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    bool operator==(const QuadRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    QuadRat operator+(const QuadRat& o) const { return {re + o.re, im + o.im}; }
    QuadRat operator-(const QuadRat& o) const { return {re - o.re, im - o.im}; }
    QuadRat operator-() const { return {-re, -im}; }

    // (a1 + b1 s)(a2 + b2 s) with s^2 = -3
    QuadRat operator*(const QuadRat& o) const {
        return {re * o.re - 3 * im * o.im, re * o.im + im * o.re};
    }

    QuadRat inv() const {
        if (is_zero()) throw std::domain_error("QuadRat::inv: division by zero");
        Rat n = re * re + 3 * im * im;
        return {re / n, -im / n};
    }

    QuadRat operator/(const QuadRat& o) const { return *this * o.inv(); }
};

inline QuadRat sqrt_m3() { return QuadRat(Rat(0), Rat(1)); }

// "a", "b*sqrt(-3)", or "a+b*sqrt(-3)"; exact, human-diffable.
inline std::string quad_str(const QuadRat& v) {
    if (v.im == 0) return rat_str(v.re);
    std::string s = rat_str(v.im) + "*sqrt(-3)";
    if (v.re == 0) return s;
    if (v.im > 0) return rat_str(v.re) + "+" + s;
    return rat_str(v.re) + s;
}

}  // namespace w3
