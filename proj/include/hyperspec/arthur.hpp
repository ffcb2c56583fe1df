// Exact spectral lists and bound constants.
//
// Enumerates the admissible exceptional Laplace eigenvalues below the
// continuous spectrum for U(n,1) (on (p,q)-forms and on the exceptional
// spectrum of the sphere bundle picture), the real hyperbolic analogue, the
// hypothesis-driven lists feeding the lifted bounds, and the headline bound
// constants themselves.  Everything is exact rational arithmetic.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace hyperspec {

// Sorted duplicate-free list of exceptional eigenvalues plus the bottom of
// the continuous spectrum.
struct SpectrumList {
    std::vector<Rat> exceptional;
    Rat floor{0};

    void insert(const Rat& v) {
        if (std::find(exceptional.begin(), exceptional.end(), v) == exceptional.end())
            exceptional.push_back(v);
    }
    void finalize() { std::sort(exceptional.begin(), exceptional.end()); }

    bool contains(const Rat& v) const {
        return std::find(exceptional.begin(), exceptional.end(), v) != exceptional.end();
    }

    // Smallest positive element of exceptional + {floor}: the spectral gap.
    Rat min_positive() const {
        Rat best = floor;
        for (const Rat& v : exceptional)
            if (v > 0 && v < best) best = v;
        return best;
    }

    // Smallest positive exceptional eigenvalue (throws if none).
    Rat min_positive_exceptional() const {
        const Rat* best = nullptr;
        for (const Rat& v : exceptional)
            if (v > 0 && (!best || v < *best)) best = &v;
        if (!best) throw std::domain_error("SpectrumList: no positive exceptional eigenvalue");
        return *best;
    }
};

// ---------------------------------------------------------------------------
// Block data (n_j, chi_j) with chi_j = z^{p_j} zbar^{q_j} on C^*; the
// infinitesimal character collects p_j + (n_j + 1 - 2k)/2, k = 1..n_j.

struct ArthurBlock {
    int n = 1;   // SL(2) dimension
    QComplex p;  // character exponent (holomorphic part)
    QComplex q;  // character exponent (antiholomorphic part)
};

using ArthurBlocks = std::vector<ArthurBlock>;

inline std::vector<QComplex> arthur_infchar(const ArthurBlocks& blocks) {
    std::vector<QComplex> out;
    for (const auto& b : blocks) {
        if (b.n < 1) throw std::invalid_argument("arthur_infchar: block dimension must be >= 1");
        if ((b.p + b.q).re != 0)
            throw std::invalid_argument("arthur_infchar: character must be unitary (Re(p+q) = 0)");
        for (int k = 1; k <= b.n; ++k) out.push_back(b.p + QComplex(Rat(b.n + 1 - 2 * k, 2)));
    }
    std::sort(out.begin(), out.end(), [](const QComplex& x, const QComplex& y) {
        if (x.re != y.re) return x.re > y.re;
        return x.im > y.im;
    });
    return out;
}

// ---------------------------------------------------------------------------
// U(n,1): admissible exceptional eigenvalues on (p,q)-forms.
// lambda = (n-a-b)^2 - (n-a-b-2k)^2 over a <= p, b <= q with
// (p-q)-(a-b) in {-1,0,1} and 0 <= k <= floor((n-a-b)/2).

inline SpectrumList un1_admissible_lambdas(int n, int p, int q) {
    if (n < 1 || p < 0 || q < 0 || p + q > n)
        throw std::invalid_argument("un1_admissible_lambdas: degrees out of range");
    SpectrumList out;
    out.floor = (p + q == n) ? Rat(1) : Rat((n - p - q) * (n - p - q));
    for (int a = 0; a <= p; ++a)
        for (int b = 0; b <= q; ++b) {
            int skew = (p - q) - (a - b);
            if (skew < -1 || skew > 1) continue;
            int c = n - a - b;
            for (int k = 0; 2 * k <= c; ++k)
                out.insert(Rat(c * c - (c - 2 * k) * (c - 2 * k)));
        }
    out.finalize();
    return out;
}

// U(n,1), |p-q| <= 1: exceptional spectrum through the balanced labels:
// lambda = (n-2a)^2 - (n-2a-2k)^2, a <= min(p,q), 0 <= k <= floor((n-2a)/2).

inline SpectrumList exceptional_spectrum(int n, int p, int q) {
    if (n < 1 || p < 0 || q < 0 || p + q > n)
        throw std::invalid_argument("exceptional_spectrum: degrees out of range");
    if (p - q < -1 || p - q > 1)
        throw std::invalid_argument("exceptional_spectrum: requires |p - q| <= 1");
    SpectrumList out;
    out.floor = (p + q == n) ? Rat(1) : Rat((n - p - q) * (n - p - q));
    for (int a = 0; a <= std::min(p, q); ++a) {
        int c = n - 2 * a;
        for (int k = 0; 2 * k <= c; ++k)
            out.insert(Rat(c * c - (c - 2 * k) * (c - 2 * k)));
    }
    out.finalize();
    return out;
}

// ---------------------------------------------------------------------------
// Real hyperbolic spaces H^n = SO(n,1)/SO(n).

// Admissible spectral parameters on functions: s in iR union Z for n odd,
// s in iR union (1/2 + Z) for n even.
inline bool so_admissible(int n, const QComplex& s) {
    if (n < 2) throw std::invalid_argument("so_admissible: n must be >= 2");
    if (s.re == 0) return true;
    if (s.im != 0) return false;
    return (n % 2 == 1) ? is_integer(s.re) : is_odd_integer(2 * s.re);
}

// The known constant for n = 2, where the list below degenerates.
inline const Rat kSO21SpectralGap = Rat(1, 4);

// Admissible Laplace eigenvalues on functions below the continuous spectrum,
// rho = (n-1)/2: lambda = rho^2 - (rho - k)^2 for integer k with rho - k an
// admissible real parameter in (0, rho], plus 0.  Requires n >= 3.
inline SpectrumList so_sphere_lambdas(int n) {
    if (n < 3) throw std::domain_error("so_sphere_lambdas: requires n >= 3 (n = 2 is special)");
    SpectrumList out;
    Rat rho(n - 1, 2);
    out.floor = rho * rho;
    if (n % 2 == 1) {
        for (int k = 1; 2 * k <= n - 1; ++k) out.insert(rho * rho - Rat(k * k));
    } else {
        for (int k = 0; 2 * k <= n - 2; ++k) {
            Rat r = rho - k;
            out.insert(rho * rho - r * r);
        }
    }
    out.finalize();
    return out;
}

// ---------------------------------------------------------------------------
// Hypothesis-driven admissible lists used for lifting bounds.

struct HypothesisSpec {
    int n = 2;   // ambient parameter (degree n for U(n,1))
    int p = 0;   // form bidegree
    int q = 0;
    Rat eps{0};  // admitted deviation from temperedness, 0 <= eps < rho
    Rat rho{0};  // only used by flavor A: half-sum parameter of the group
};

enum class HypothesisFlavor { H, A };

inline SpectrumList hypothesis_spectrum(const HypothesisSpec& spec, HypothesisFlavor flavor) {
    SpectrumList out;
    if (flavor == HypothesisFlavor::H) {
        int base = spec.n - (spec.p + spec.q);
        if (base < 0) throw std::invalid_argument("hypothesis_spectrum: p + q > n");
        out.floor = Rat(base * base) - spec.eps * spec.eps;
        for (int k = 0; k <= spec.p + spec.q; ++k)
            for (int i = 0; i <= base + k; ++i)
                out.insert(Rat((base + k) * (base + k) - (base + k - i) * (base + k - i)));
    } else {
        const Rat& rho = spec.rho;
        Rat fl = (rho - spec.p) * (rho - spec.p) - spec.eps * spec.eps;
        out.floor = fl;
        long top = rat_floor(rho);
        for (int k = 0; k <= spec.p; ++k)
            for (long i = k; i <= top; ++i)
                out.insert((rho - k) * (rho - k) - (rho - i) * (rho - i));
    }
    out.finalize();
    return out;
}

// Functorial lift of the deviation: a bound with deviation eps on the smaller
// group gives deviation n_big - n_small + eps on the bigger one.
inline Rat lift_epsilon(int n_small, int n_big, const Rat& eps) {
    if (n_big < n_small) throw std::invalid_argument("lift_epsilon: n_big < n_small");
    return Rat(n_big - n_small) + eps;
}

// Bottom of the possible continuous band on degree-deg forms of U(n,1) under
// the deviation-eps hypothesis lifted from n' = 2.
inline Rat floor_lambda(int n, int deg, const Rat& eps) {
    if (n < 2 || deg < 0 || deg > 1) throw std::invalid_argument("floor_lambda: bad arguments");
    Rat e = lift_epsilon(2, n, eps);
    return Rat((n - deg) * (n - deg)) - e * e;
}

// Spectral gap on degree-deg forms (deg = 0 on functions, 1 on 1-forms) of a
// congruence quotient of U(n,1) under the deviation-eps hypothesis: smallest
// positive admissible eigenvalue.
inline Rat bound_lambda1(int n, int deg, const Rat& eps) {
    if (n < 2 || deg < 0 || deg > 1) throw std::invalid_argument("bound_lambda1: bad arguments");
    if (eps < 0 || eps >= 1) throw std::invalid_argument("bound_lambda1: eps must be in [0,1)");
    HypothesisSpec spec;
    spec.n = n;
    spec.p = deg;
    spec.q = 0;
    spec.eps = lift_epsilon(2, n, eps);
    return hypothesis_spectrum(spec, HypothesisFlavor::H).min_positive();
}

// The two headline constants: the function-space band bottom and the 1-form
// spectral gap for U(2,1) at eps = 4/5.
inline std::pair<Rat, Rat> theorem1_constants() {
    return {floor_lambda(2, 0, Rat(4, 5)), bound_lambda1(2, 1, Rat(4, 5))};
}

namespace detail {
inline bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}
} // namespace detail

// Gap constants under the exotic-lift hypothesis for an odd prime l <= n+1,
// with r = l - 2: 2nr - r^2 on functions, 2(r-1)n - r^2 + 1 on 1-forms.
inline Rat exotic_bound(int n, int l, int deg) {
    if (!detail::is_prime(l) || l < 3 || l % 2 == 0)
        throw std::invalid_argument("exotic_bound: l must be an odd prime");
    if (n + 1 < l) throw std::invalid_argument("exotic_bound: requires l <= n + 1");
    if (deg < 0 || deg > 1) throw std::invalid_argument("exotic_bound: deg must be 0 or 1");
    int r = l - 2;
    if (deg == 0) return Rat(2 * n * r - r * r);
    return Rat(2 * (r - 1) * n - r * r + 1);
}

} // namespace hyperspec
