// Archimedean L-factors as formal products of Gamma functions.
//
// A factor is scale * base^{-(a s + b)} * Gamma(a s + b') with exact rational
// data, so pole locations are exact; numerical evaluation goes through a
// complex log-Gamma.  Covers the standard factors of GL(n,R) and GL(n,C)
// parameters, Rankin-Selberg products (against the contragredient of the
// second argument), and the trivial-eigenvalue bound used downstream.

#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "langlands.hpp"
#include "rational.hpp"

namespace hyperspec {

// Affine function a*s + b of the complex variable s (a rational, b exact
// complex).
struct AffineS {
    Rat a{1};
    QComplex b;

    QComplex eval(const QComplex& s) const { return QComplex(a) * s + b; }
};

struct GammaFactor {
    Rat scale{1};                       // rational prefactor
    enum Base { Pi, TwoPi } base = Pi;  // base of the exponential prefactor
    AffineS exponent;                   // prefactor base^{-exponent(s)}
    AffineS arg;                        // Gamma(arg(s))
};

struct GammaProduct {
    std::vector<GammaFactor> factors;
};

// ---------------------------------------------------------------------------
// Exact pole bookkeeping.  Gamma(a s + b) has poles at s = (-k - b)/a, k >= 0;
// with a > 0 the rightmost real pole of a factor with real b is -Re(b)/a.

struct PoleProgression {
    Rat start; // rightmost pole
    Rat step;  // next poles at start + step, start + 2*step, ... (step < 0)
};

inline std::optional<PoleProgression> pole_progression(const GammaFactor& f) {
    if (f.arg.a <= 0 || f.arg.b.im != 0) return std::nullopt;
    return PoleProgression{Rat(-f.arg.b.re / f.arg.a), Rat(-1 / f.arg.a)};
}

// Rightmost real pole of the product (poles never cancel here: all factors
// have positive leading coefficient and there are no zeros).
inline std::optional<Rat> first_pole(const GammaProduct& gp) {
    std::optional<Rat> best;
    for (const auto& f : gp.factors) {
        auto p = pole_progression(f);
        if (!p) continue;
        if (!best || p->start > *best) best = p->start;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Numerical evaluation.  Lanczos approximation of log Gamma on Re z > 1/2,
// extended by the reflection formula; accurate to ~1e-13 relative.

inline std::complex<double> lgamma_complex(std::complex<double> z) {
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
    const double pi = 3.14159265358979323846;
    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_complex(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline std::complex<double> qc_to_cd(const QComplex& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

// log of the product at s (principal branches factor-wise).
inline std::complex<double> log_eval(const GammaProduct& gp, const QComplex& s) {
    const double pi = 3.14159265358979323846;
    std::complex<double> acc = 0.0;
    for (const auto& f : gp.factors) {
        acc += std::log(static_cast<double>(f.scale));
        double lb = (f.base == GammaFactor::Pi) ? std::log(pi) : std::log(2.0 * pi);
        acc -= qc_to_cd(f.exponent.eval(s)) * lb;
        acc += lgamma_complex(qc_to_cd(f.arg.eval(s)));
    }
    return acc;
}

inline std::complex<double> eval(const GammaProduct& gp, const QComplex& s) {
    return std::exp(log_eval(gp, s));
}

// ---------------------------------------------------------------------------
// Standard factors.

// GL(R): character blocks give pi^{-(s+t+eps)/2} Gamma((s+t+eps)/2); the
// two-dimensional block l gives 2 (2pi)^{-(s+t+l/2)} Gamma(s+t+l/2).
inline GammaProduct lfactor_r(const std::vector<WeilBlockR>& blocks) {
    GammaProduct gp;
    for (const auto& b : blocks) {
        GammaFactor f;
        if (b.dim == 1) {
            f.scale = 1;
            f.base = GammaFactor::Pi;
            f.arg = {Rat(1, 2), QComplex(Rat(1, 2)) * (b.t + QComplex(Rat(b.eps)))};
            f.exponent = f.arg;
        } else {
            f.scale = 2;
            f.base = GammaFactor::TwoPi;
            f.arg = {Rat(1), b.t + QComplex(Rat(b.l, 2))};
            f.exponent = f.arg;
        }
        gp.factors.push_back(f);
    }
    return gp;
}

// GL(C): the character z^p zbar^q gives 2 (2pi)^{-(s+max(p,q))} Gamma(s+max(p,q)),
// the max taken by real part.
inline GammaProduct lfactor_c(const std::vector<WeilBlockC>& blocks) {
    GammaProduct gp;
    for (const auto& b : blocks) {
        QComplex mx = (b.p.re >= b.q.re) ? b.p : b.q;
        GammaFactor f;
        f.scale = 2;
        f.base = GammaFactor::TwoPi;
        f.arg = {Rat(1), mx};
        f.exponent = f.arg;
        gp.factors.push_back(f);
    }
    return gp;
}

// Rankin-Selberg factor L(s, pi x contragredient(pi')) over C: the block pair
// (i, j) contributes 2 (2pi)^{-A} Gamma(A) with A = s + t_i - t_j + |m_i - m_j|/2,
// where t = (p+q)/2 and m = p - q.
inline GammaProduct rankin_selberg_c(const std::vector<WeilBlockC>& pi,
                                     const std::vector<WeilBlockC>& pi2) {
    GammaProduct gp;
    for (const auto& bi : pi)
        for (const auto& bj : pi2) {
            GammaFactor f;
            f.scale = 2;
            f.base = GammaFactor::TwoPi;
            f.arg = {Rat(1), bi.t() - bj.t() + QComplex(rat_abs(bi.m() - bj.m()) / 2)};
            f.exponent = f.arg;
            gp.factors.push_back(f);
        }
    return gp;
}

// Rankin-Selberg factor L(s, pi x contragredient(pi')) over R, by the shape
// of each ordered block pair.
inline GammaProduct rankin_selberg_r(const std::vector<WeilBlockR>& pi,
                                     const std::vector<WeilBlockR>& pi2) {
    GammaProduct gp;
    for (const auto& bi : pi)
        for (const auto& bj : pi2) {
            QComplex dt = bi.t - bj.t;
            if (bi.dim == 2 && bj.dim == 2) {
                // 4 (2pi)^{-2s-2(t_i-t_j)-max(l_i,l_j)}
                //   Gamma(s+t_i-t_j+|l_i-l_j|/2) Gamma(s+t_i-t_j+(l_i+l_j)/2),
                // split evenly across the two Gamma records.
                Rat emax(std::max(bi.l, bj.l), 2);
                for (Rat half : {Rat(std::abs(bi.l - bj.l), 2), Rat(bi.l + bj.l, 2)}) {
                    GammaFactor f;
                    f.scale = 2;
                    f.base = GammaFactor::TwoPi;
                    f.exponent = {Rat(1), dt + QComplex(emax)};
                    f.arg = {Rat(1), dt + QComplex(half)};
                    gp.factors.push_back(f);
                }
            } else if (bi.dim == 1 && bj.dim == 1) {
                int eps = (bi.eps + bj.eps) % 2;
                GammaFactor f;
                f.scale = 1;
                f.base = GammaFactor::Pi;
                f.arg = {Rat(1, 2), QComplex(Rat(1, 2)) * (dt + QComplex(Rat(eps)))};
                f.exponent = f.arg;
                gp.factors.push_back(f);
            } else {
                // Mixed: the two-dimensional block supplies l.
                int l = (bi.dim == 2) ? bi.l : bj.l;
                GammaFactor f;
                f.scale = 2;
                f.base = GammaFactor::TwoPi;
                f.exponent = {Rat(1), QComplex(Rat(l, 2))};
                f.arg = {Rat(1), dt + QComplex(Rat(l, 2))};
                gp.factors.push_back(f);
            }
        }
    return gp;
}

// ---------------------------------------------------------------------------
// Bound toward temperedness for cuspidal GL(n): every |Re t| <= 1/2 - 1/(n^2+1).

inline Rat lrs_bound(int n) {
    if (n < 2) throw std::invalid_argument("lrs_bound: n must be >= 2");
    return Rat(1, 2) - Rat(1, n * n + 1);
}

inline bool lrs_check(const std::vector<WeilBlockR>& blocks, int n) {
    Rat bound = lrs_bound(n);
    for (const auto& b : blocks)
        if (rat_abs(b.t.re) > bound) return false;
    return true;
}

inline bool lrs_check(const std::vector<WeilBlockC>& blocks, int n) {
    Rat bound = lrs_bound(n);
    for (const auto& b : blocks)
        if (rat_abs(b.t().re) > bound) return false;
    return true;
}

} // namespace hyperspec
