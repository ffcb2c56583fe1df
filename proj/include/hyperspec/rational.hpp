// Exact rational scalars and Gaussian-rational complex numbers.
//
// All spectral constants in this library (eigenvalue lists, bound constants,
// half-integer weights) must compare exactly; floating point is reserved for
// the numerical geometry/ODE layers.  We use Boost's arbitrary-precision
// rational as the scalar and a small re/im pair on top of it for parameters
// such as (u, v) or the t of a Weil block, whose real and imaginary parts are
// rational in every case of interest.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperspec {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// "num/den" with the "/den" omitted for integers: "84/25", "-3", "0".
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Parses "a", "a/b", or a plain decimal like "0.8" (exact: 8/10).
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        bool neg = !text.empty() && text[0] == '-';
        std::string head = text.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
        std::string frac = text.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("parse_rat: trailing dot");
        Int den = 1;
        Int num = head.empty() ? Int(0) : Int(head);
        for (char c : frac) {
            if (c < '0' || c > '9') throw std::invalid_argument("parse_rat: bad decimal");
            num = num * 10 + (c - '0');
            den *= 10;
        }
        if (neg) num = -num;
        return Rat(num, den);
    }
    return Rat(Int(text));
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// True iff r is an odd integer.
inline bool is_odd_integer(const Rat& r) {
    return is_integer(r) && numerator(r) % 2 != 0;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline long rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return static_cast<long>(q);
}

// Complex number with exact rational real and imaginary parts.
struct QComplex {
    Rat re{0};
    Rat im{0};

    QComplex() = default;
    QComplex(Rat r) : re(std::move(r)) {}
    QComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    QComplex(int r) : re(r) {}

    bool is_real() const { return im == 0; }
    bool is_int() const { return im == 0 && is_integer(re); }

    QComplex conj() const { return {re, Rat(-im)}; }

    friend QComplex operator+(const QComplex& a, const QComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend QComplex operator-(const QComplex& a, const QComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const QComplex& a, const QComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }
};

inline std::string qc_str(const QComplex& z) {
    if (z.im == 0) return rat_str(z.re);
    return rat_str(z.re) + (z.im < 0 ? "-" : "+") + rat_str(rat_abs(z.im)) + "i";
}

} // namespace hyperspec
