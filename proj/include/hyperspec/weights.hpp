// Exact weight/root combinatorics for U(n), K = U(n)xU(1) in U(n,1), and the
// subgroup M of K: half-sums of roots, K-type highest weights, Lefschetz
// decomposition, restriction to M, and the Weyl dimension formula.
//
// Everything here is exact rational arithmetic; several weights (delta_K,
// the sigma_{a,b} highest weights) are genuinely half-integral.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hyperspec {

struct WeightVector {
    std::vector<Rat> coords;

    WeightVector() = default;
    explicit WeightVector(std::vector<Rat> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const WeightVector& x, const WeightVector& y) {
        return x.coords == y.coords;
    }
};

// Primitive K-type tau'_{p,q} of K = U(n)xU(1).
struct KTypeLabel {
    int n = 1;
    int p = 0;
    int q = 0;

    bool valid() const { return n >= 1 && p >= 0 && q >= 0 && p + q <= n; }
};

// M-type sigma_{a,b}; labels outside the admissible window are "zero" and
// get dropped silently during restriction.
struct MTypeLabel {
    int n = 1;
    int a = 0;
    int b = 0;

    bool valid() const { return std::min(a, b) >= 0 && std::max(a, b) <= n - 1; }
};

struct DeltaVectors {
    WeightVector delta_g; // rank n+1
    WeightVector delta_k; // rank n
    WeightVector delta_m; // rank n-1
};

// Half-sums of positive roots: 2*delta_G = sum_{k=1}^{n+1} (n+2-2k) eps_k,
// 2*delta_K = sum_{k=1}^{n} (n+1-2k) eps_k, 2*delta_M = sum_{k=2}^{n} (n+2-2k) eps_k.
inline DeltaVectors delta_vectors(int n) {
    if (n < 1) throw std::invalid_argument("delta_vectors: rank must be >= 1");
    DeltaVectors d;
    for (int k = 1; k <= n + 1; ++k) d.delta_g.coords.emplace_back(Rat(n + 2 - 2 * k, 2));
    for (int k = 1; k <= n; ++k) d.delta_k.coords.emplace_back(Rat(n + 1 - 2 * k, 2));
    for (int k = 2; k <= n; ++k) d.delta_m.coords.emplace_back(Rat(n + 2 - 2 * k, 2));
    return d;
}

// mu_{tau'_{p,q}} = sum_{k<=q} eps_k - sum_{k>n-p} eps_k + (p-q) eps_{n+1}.
inline WeightVector tau_highest_weight(const KTypeLabel& t) {
    if (!t.valid()) throw std::invalid_argument("tau_highest_weight: invalid K-type label");
    WeightVector w;
    w.coords.assign(t.n + 1, Rat(0));
    for (int k = 1; k <= t.q; ++k) w.coords[k - 1] = 1;
    for (int k = t.n - t.p + 1; k <= t.n; ++k) w.coords[k - 1] = -1;
    w.coords[t.n] = t.p - t.q;
    return w;
}

// mu_{sigma_{a,b}} = (a-b)/2 (eps_1 + eps_{n+1}) + sum_{k=2}^{b+1} eps_k
//                    - sum_{k=n-a+1}^{n} eps_k.
inline WeightVector mtype_highest_weight(const MTypeLabel& m) {
    if (!m.valid()) throw std::invalid_argument("mtype_highest_weight: invalid M-type label");
    WeightVector w;
    w.coords.assign(m.n + 1, Rat(0));
    w.coords[0] = Rat(m.a - m.b, 2);
    w.coords[m.n] = Rat(m.a - m.b, 2);
    for (int k = 2; k <= m.b + 1; ++k) w.coords[k - 1] += 1;
    for (int k = m.n - m.a + 1; k <= m.n; ++k) w.coords[k - 1] -= 1;
    return w;
}

// tau_{p,q} = direct sum of tau'_{p-k,q-k}, k = 0..min(p,q).
inline std::vector<KTypeLabel> lefschetz_decompose(int n, int p, int q) {
    if (p > n || q > n || p < 0 || q < 0)
        throw std::invalid_argument("lefschetz_decompose: degrees out of range");
    std::vector<KTypeLabel> out;
    for (int k = 0; k <= std::min(p, q); ++k) out.push_back(KTypeLabel{n, p - k, q - k});
    return out;
}

// (tau'_{p,q})|M = sigma_{p,q} + sigma_{p-1,q} + sigma_{p,q-1} + sigma_{p-1,q-1},
// with degenerate labels dropped.
inline std::vector<MTypeLabel> restrict_to_M(const KTypeLabel& t) {
    if (!t.valid()) throw std::invalid_argument("restrict_to_M: invalid K-type label");
    std::vector<MTypeLabel> out;
    const int da[4] = {0, -1, 0, -1};
    const int db[4] = {0, 0, -1, -1};
    for (int i = 0; i < 4; ++i) {
        MTypeLabel m{t.n, t.p + da[i], t.q + db[i]};
        if (m.valid()) out.push_back(m);
    }
    return out;
}

// mu_j = sum_{k<=j} eps_k - sum_{k>j} eps_k + (n-2j) eps_{n+1}; tau_{mu_j} = tau'_{n-j,j}.
inline std::pair<WeightVector, KTypeLabel> discrete_series_ktype(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("discrete_series_ktype: j out of range");
    WeightVector w;
    w.coords.assign(n + 1, Rat(0));
    for (int k = 1; k <= j; ++k) w.coords[k - 1] = 1;
    for (int k = j + 1; k <= n; ++k) w.coords[k - 1] = -1;
    w.coords[n] = n - 2 * j;
    return {w, KTypeLabel{n, n - j, j}};
}

// Weyl dimension formula for U(m): dim = prod_{i<j} (l_i - l_j + j - i)/(j - i),
// for a weakly decreasing integral highest weight l.
inline Int weyl_dim(int m, const WeightVector& lambda) {
    if (lambda.rank() != m) throw std::invalid_argument("weyl_dim: rank mismatch");
    for (const Rat& c : lambda.coords)
        if (!is_integer(c)) throw std::domain_error("weyl_dim: non-integral weight");
    for (int i = 0; i + 1 < m; ++i)
        if (lambda.coords[i] < lambda.coords[i + 1])
            throw std::domain_error("weyl_dim: weight not dominant");
    Int num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= numerator(Rat(lambda.coords[i] - lambda.coords[j])) + (j - i);
            den *= (j - i);
        }
    return num / den;
}

// Dimension of the primitive K-type: Weyl dimension of the U(n) part of its
// highest weight (the central U(1) coordinate does not contribute).
inline Int tau_dim(const KTypeLabel& t) {
    WeightVector mu = tau_highest_weight(t);
    mu.coords.resize(t.n);
    return weyl_dim(t.n, mu);
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) { r *= (n - k + i); r /= i; }
    return r;
}

} // namespace hyperspec
