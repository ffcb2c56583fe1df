// Archimedean parameters: Weil-group blocks for GL(n,R)/GL(n,C), discrete
// parameters of U(n,1), the Casimir eigenvalue on induced representations and
// its K-type case analysis, the full representation classification for U(2,1),
// and infinitesimal characters of Speh-type blocks.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hyperspec {

// One summand of a parameter of W_R: either a character sgn^eps |.|^t of R^*
// (dim = 1) or the two-dimensional induced block indexed by l >= 1 twisted by
// |.|^t (dim = 2).
struct WeilBlockR {
    int dim = 1;   // 1 or 2
    int eps = 0;   // dim 1: 0 for trivial sign, 1 for sgn
    int l = 0;     // dim 2: positive integer
    QComplex t;    // continuous twist

    static WeilBlockR character(int eps, QComplex t) {
        if (eps != 0 && eps != 1) throw std::invalid_argument("WeilBlockR: eps must be 0 or 1");
        WeilBlockR b; b.dim = 1; b.eps = eps; b.t = std::move(t); return b;
    }
    static WeilBlockR induced(int l, QComplex t) {
        if (l < 1) throw std::invalid_argument("WeilBlockR: l must be >= 1");
        WeilBlockR b; b.dim = 2; b.l = l; b.t = std::move(t); return b;
    }
};

// Character z -> z^p zbar^q of C^* with p - q an integer (p, q themselves may
// be any complex numbers with rational re/im here).
struct WeilBlockC {
    QComplex p;
    QComplex q;

    WeilBlockC(QComplex pp, QComplex qq) : p(std::move(pp)), q(std::move(qq)) {
        if (!(p - q).is_int())
            throw std::invalid_argument("WeilBlockC: p - q must be an integer");
    }

    QComplex t() const { return QComplex(Rat(1, 2)) * (p + q); }     // (p+q)/2
    Rat m() const { return (p - q).re; }                              // p - q
};

// A parameter of GL(k,R) or GL(k,C) is tempered iff every block is unitary.
inline bool tempered_gl(const std::vector<WeilBlockR>& blocks) {
    for (const auto& b : blocks)
        if (b.t.re != 0) return false;
    return true;
}
inline bool tempered_gl(const std::vector<WeilBlockC>& blocks) {
    for (const auto& b : blocks)
        if (b.t().re != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Casimir on representations induced from M x A: the representation attached
// to (sigma_{a,b}, s) has Casimir eigenvalue -((n-a-b)^2 - s^2), so the
// Laplace eigenvalue on the associated bundle is (n-a-b)^2 - s^2.

inline QComplex casimir_induced(int n, int a, int b, const QComplex& s) {
    if (std::min(a, b) < 0 || std::max(a, b) > n - 1)
        throw std::invalid_argument("casimir_induced: sigma label out of range");
    Rat c(n - a - b);
    return -(QComplex(c) * QComplex(c) - s * s);
}

// Minimum of the continuous Laplace spectrum on (p,q)-forms of the quotient:
// (n-p-q)^2 away from the middle band, 1 on it.
inline Rat laplace_floor(int n, int p, int q) {
    if (p < 0 || q < 0 || p > n || q > n)
        throw std::invalid_argument("laplace_floor: degrees out of range");
    if (p + q == n) return Rat(1);
    Rat c(n - p - q);
    return c * c;
}

// The M-types sigma_{alpha,beta} occurring in tau'_{p,q}|M, organized by the
// offset c in the eigenvalue -( (n-p-q+2k+c)^2 - s^2 ) of the Casimir on the
// sigma-isotypic piece of the k-th Lefschetz constituent tau'_{p-k,q-k}.
struct CasimirCase {
    int n = 1, p = 0, q = 0;
    int offset = 0;          // c in the base n-p-q+2k+c
    int k_max = 0;           // k ranges over 0..k_max
    int alpha_minus_beta = 0;

    // Laplace eigenvalue (= -Casimir) on the (alpha,beta)-piece at Lefschetz
    // depth k, evaluated at spectral parameter s.
    QComplex laplace_eigenvalue(int k, const QComplex& s) const {
        if (k < 0 || k > k_max) throw std::invalid_argument("CasimirCase: k out of range");
        Rat base(n - p - q + 2 * k + offset);
        return QComplex(base) * QComplex(base) - s * s;
    }
};

inline std::vector<CasimirCase> ktype_casimir_cases(int n, int p, int q) {
    if (p < 0 || q < 0 || p + q > n)
        throw std::invalid_argument("ktype_casimir_cases: invalid K-type");
    std::vector<CasimirCase> out;
    auto add = [&](int offset, int k_max, int amb) {
        if (k_max >= 0) out.push_back(CasimirCase{n, p, q, offset, k_max, amb});
    };
    add(0, std::min(p, q), p - q);                 // (alpha,beta) = (p-k, q-k)
    add(1, std::min(p - 1, std::min(p, q)), p - q - 1); // (p-1-k, q-k)
    add(1, std::min(q - 1, std::min(p, q)), p - q + 1); // (p-k, q-1-k)
    add(2, std::min(p - 1, q - 1), p - q);         // (p-1-k, q-1-k)
    return out;
}

// ---------------------------------------------------------------------------
// Discrete parameters of U(n,1): n+1 entries in n/2 + Z, pairwise distinct.

struct Un1DiscreteParam {
    int n = 1;
    std::vector<Rat> entries; // length n+1
};

struct ValidationResult {
    bool ok = true;
    std::string diagnostics;
};

inline ValidationResult validate_discrete_param(const Un1DiscreteParam& phi) {
    ValidationResult r;
    if (static_cast<int>(phi.entries.size()) != phi.n + 1) {
        r.ok = false;
        r.diagnostics = "expected " + std::to_string(phi.n + 1) + " entries";
        return r;
    }
    Rat half_n(phi.n, 2);
    for (const Rat& e : phi.entries)
        if (!is_integer(e - half_n)) {
            r.ok = false;
            r.diagnostics = "entry " + rat_str(e) + " not in n/2 + Z";
            return r;
        }
    for (std::size_t i = 0; i < phi.entries.size(); ++i)
        for (std::size_t j = i + 1; j < phi.entries.size(); ++j)
            if (phi.entries[i] == phi.entries[j]) {
                r.ok = false;
                r.diagnostics = "repeated entry " + rat_str(phi.entries[i]);
                return r;
            }
    return r;
}

// Infinitesimal character of the block tau |.|^{(b-1)/2} x ... x tau |.|^{-(b-1)/2}:
// every entry of the character of tau shifted by (b+1-2m)/2, m = 1..b.
// Shifts are listed in descending order, entries within a shift in input order.
inline std::pair<std::vector<QComplex>, std::vector<QComplex>>
infchar_speh(const std::pair<std::vector<QComplex>, std::vector<QComplex>>& tau_char, int b) {
    if (b < 1) throw std::invalid_argument("infchar_speh: b must be >= 1");
    std::pair<std::vector<QComplex>, std::vector<QComplex>> out;
    for (int m = 1; m <= b; ++m) {
        QComplex shift(Rat(b + 1 - 2 * m, 2));
        for (const auto& z : tau_char.first) out.first.push_back(z + shift);
        for (const auto& z : tau_char.second) out.second.push_back(z + shift);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full classification of irreducible representations of U(2,1) by parameter.

struct U21Param {
    // family == Integral: weakly decreasing integers a >= b >= c.
    // family == Continuous: (u, v, mu) with u - v in Z, Re(u+v) >= 0, and
    // u in 1/2 + Z when u + v = 0.
    enum Family { Integral, Continuous } family = Integral;
    long a = 0, b = 0, c = 0;
    QComplex u, v;
    long mu = 0;
};

enum class Unitarity { No = 0, Yes = 1, Undetermined = 2 };

struct U21Class {
    enum Kind {
        DiscreteLPacket,    // L-packet {D, D+, D-} of discrete series
        TemperedPair,       // two tempered constituents of a unitary induced
        IrreducibleInduced, // irreducible principal series
        LanglandsQuotient,  // proper non-tempered quotient J
        FiniteDimensional   // finite-dimensional quotient F
    } kind = IrreducibleInduced;
    int packet_size = 1;
    bool tempered = false;
    Unitarity unitary = Unitarity::Undetermined;
    bool trivial = false;
    std::vector<QComplex> character; // infinitesimal character data

    // Laplace contribution on the locally symmetric space, when the parameter
    // is one of the five spectral patterns: form degree and eigenvalue.
    bool has_contribution = false;
    int form_p = 0, form_q = 0;
    Rat lambda{0};
};

namespace detail {

// Matches the parameter against the five (u,v,mu) patterns contributing to
// the Laplace spectrum in low degree: two residual points and three
// continuous families.
inline void u21_contribution(const QComplex& u, const QComplex& v, long mu, U21Class& out) {
    auto set = [&](int fp, int fq, Rat lam) {
        out.has_contribution = true;
        out.form_p = fp; out.form_q = fq; out.lambda = std::move(lam);
    };
    if (!u.is_real() || !v.is_real()) return;
    if (u.re == 2 && v.re == -1 && mu == -1) { set(1, 0, Rat(0)); return; }
    if (u.re == -1 && v.re == 2 && mu == 1) { set(0, 1, Rat(0)); return; }
    // (s/2, s/2, 0), 0 < s < 2: eigenvalue 4 - s^2 on functions.
    if (u == v && mu == 0 && u.re > 0 && u.re < 1) {
        Rat s = 2 * u.re;
        set(0, 0, 4 - s * s);
        return;
    }
    // ((s+3)/2, (s-3)/2, -1) resp. ((s-3)/2, (s+3)/2, 1), 0 < s < 1:
    // eigenvalue 1 - s^2 on (1,0)- resp. (0,1)-forms.
    if (u.re - v.re == 3 && mu == -1) {
        Rat s = u.re + v.re;
        if (s > 0 && s < 1) { set(1, 0, 1 - s * s); return; }
    }
    if (v.re - u.re == 3 && mu == 1) {
        Rat s = u.re + v.re;
        if (s > 0 && s < 1) { set(0, 1, 1 - s * s); return; }
    }
}

} // namespace detail

inline U21Class classify_u21(const U21Param& p) {
    U21Class out;
    if (p.family == U21Param::Integral) {
        if (!(p.a >= p.b && p.b >= p.c))
            throw std::invalid_argument("classify_u21: integral parameter must be decreasing");
        out.tempered = true;
        out.unitary = Unitarity::Yes;
        if (p.a > p.b && p.b > p.c) {
            out.kind = U21Class::DiscreteLPacket;
            out.packet_size = 3;
            out.character = {QComplex(Rat(p.a - p.b)), QComplex(Rat(p.b - p.c)), QComplex(Rat(p.b))};
        } else if (p.a > p.b || p.b > p.c) {
            // Two equal entries: the unitary induced splits into two tempered
            // constituents.
            out.kind = U21Class::TemperedPair;
            out.packet_size = 2;
            out.character = {QComplex(Rat(p.a - p.b)), QComplex(Rat(p.b - p.c)), QComplex(Rat(p.b))};
        } else {
            out.kind = U21Class::IrreducibleInduced;
            out.packet_size = 1;
            out.character = {QComplex(0), QComplex(0), QComplex(Rat(p.a))};
        }
        return out;
    }

    const QComplex& u = p.u;
    const QComplex& v = p.v;
    if (!(u - v).is_int())
        throw std::invalid_argument("classify_u21: u - v must be an integer");
    QComplex sum = u + v;
    if (sum.re < 0)
        throw std::invalid_argument("classify_u21: Re(u+v) must be >= 0");
    if (sum.re == 0 && sum.im == 0 && !is_odd_integer(2 * u.re))
        throw std::invalid_argument("classify_u21: u must be in 1/2 + Z when u + v = 0");

    out.packet_size = 1;
    out.character = {u, v, QComplex(Rat(p.mu))};
    const bool both_int = u.is_int() && v.is_int();
    if (both_int && ((u.re <= 0 && v.re >= 1) || (v.re <= 0 && u.re >= 1))) {
        out.kind = U21Class::LanglandsQuotient;
        out.tempered = false;
        out.unitary = (sum.re == 1) ? Unitarity::Yes : Unitarity::No;
    } else if (both_int && u.re >= 1 && v.re >= 1) {
        out.kind = U21Class::FiniteDimensional;
        out.tempered = false;
        out.trivial = (u.re == 1 && v.re == 1 && p.mu == 0);
        out.unitary = out.trivial ? Unitarity::Yes : Unitarity::Undetermined;
    } else {
        out.kind = U21Class::IrreducibleInduced;
        out.tempered = (sum.re == 0);
        bool unit = out.tempered;
        // |u+v| < bound, checked exactly on |u+v|^2.
        Rat mod2 = sum.re * sum.re + sum.im * sum.im;
        if (!unit && u == v && mod2 < 4) unit = true;
        if (!unit && is_odd_integer((u - v).re) && mod2 < 1) unit = true;
        out.unitary = unit ? Unitarity::Yes : Unitarity::No;
    }
    detail::u21_contribution(u, v, p.mu, out);
    return out;
}

} // namespace hyperspec
