// Cohomologically induced modules A_q for U(a,b): block data of theta-stable
// parabolics, the associated Harish-Chandra and Langlands-exponent data, the
// combinatorial isolation criterion, and the minimal cohomology degree.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "weights.hpp"

namespace hyperspec {

// One Levi block U(a_j, b_j); blocks are listed in the order of strictly
// decreasing attached real parts Z_j (we store only the order).
struct AqBlock {
    int a = 0;
    int b = 0;

    int d() const { return std::min(a, b); }     // split rank contribution
    int c() const { return std::abs(a - b); }    // compact-torus contribution
    int n() const { return a + b; }
    bool compact() const { return (a == 1 && b == 0) || (a == 0 && b == 1); }
};

struct ThetaStableData {
    int a = 0; // ambient signature U(a,b)
    int b = 0;
    std::vector<AqBlock> blocks;

    int rank() const { return static_cast<int>(blocks.size()); }

    // m_j = -(n_1 + ... + n_{j-1}) + (n_{j+1} + ... + n_r).
    int m(int j) const {
        int v = 0;
        for (int i = 0; i < rank(); ++i) {
            if (i < j) v -= blocks[i].n();
            if (i > j) v += blocks[i].n();
        }
        return v;
    }
};

// Builds and validates the data: block sizes must sum to (a, b), no block may
// be empty, and a block meeting the boundary of the symmetric space trivially
// (a_j = 0 or b_j = 0) must do so with multiplicity one (the normal form H0).
inline ThetaStableData make_theta_stable(int a, int b, std::vector<std::pair<int, int>> sizes) {
    ThetaStableData d;
    d.a = a;
    d.b = b;
    int sa = 0, sb = 0;
    for (auto [x, y] : sizes) {
        if (x < 0 || y < 0 || (x == 0 && y == 0))
            throw std::invalid_argument("make_theta_stable: empty or negative block");
        if ((x == 0 && y != 1) || (y == 0 && x != 1))
            throw std::invalid_argument("make_theta_stable: definite block must be U(1) (H0)");
        sa += x;
        sb += y;
        d.blocks.push_back(AqBlock{x, y});
    }
    if (sa != a || sb != b)
        throw std::invalid_argument("make_theta_stable: block sizes must sum to the signature");
    return d;
}

// R = ab - sum a_j b_j: degree of the lowest nonvanishing (g,K)-cohomology.
inline int min_cohomology_degree(const ThetaStableData& d) {
    int r = d.a * d.b;
    for (const auto& blk : d.blocks) r -= blk.a * blk.b;
    return r;
}

// R together with the Levi block description u(a_j, b_j).
inline std::pair<int, std::vector<std::pair<int, int>>> r_plus_minus(const ThetaStableData& d) {
    std::vector<std::pair<int, int>> levi;
    for (const auto& blk : d.blocks) levi.emplace_back(blk.a, blk.b);
    return {min_cohomology_degree(d), levi};
}

// Harish-Chandra parameter of the lowest K-type datum: for each block, d_j
// coordinates equal to m_j (the split part), then for each block c_j
// coordinates (c_j + 1 - 2l)/2 + m_j/2, l = 1..c_j (the compact torus part).
inline WeightVector hc_param_sigma(const ThetaStableData& d) {
    WeightVector w;
    for (int j = 0; j < d.rank(); ++j)
        for (int k = 0; k < d.blocks[j].d(); ++k) w.coords.emplace_back(Rat(d.m(j)));
    for (int j = 0; j < d.rank(); ++j) {
        int c = d.blocks[j].c();
        for (int l = 1; l <= c; ++l)
            w.coords.emplace_back(Rat(c + 1 - 2 * l, 2) + Rat(d.m(j), 2));
    }
    return w;
}

// One exponent of the Langlands parameter restricted to C^*: the character
// (z/zbar)^{ratio} (z zbar)^{modulus}; discrete-series exponents come in
// unitary pairs +-(n_j+1-2k)/2, the compact-torus ones are unitary.
struct ExponentRecord {
    Rat ratio;    // exponent of z/zbar
    Rat modulus;  // exponent of z zbar
    bool unitary = false;
    int block = 0;
};

inline std::vector<ExponentRecord> aq_langlands_exponents(const ThetaStableData& d) {
    std::vector<ExponentRecord> out;
    for (int j = 0; j < d.rank(); ++j) {
        Rat half_m(d.m(j), 2);
        for (int k = 1; k <= d.blocks[j].d(); ++k) {
            Rat shift(d.blocks[j].n() + 1 - 2 * k, 2);
            out.push_back(ExponentRecord{half_m, shift, shift == 0, j});
            out.push_back(ExponentRecord{half_m, -shift, shift == 0, j});
        }
        for (int l = 1; l <= d.blocks[j].c(); ++l) {
            Rat r(d.m(j) + d.blocks[j].c() + 1 - 2 * l, 2);
            out.push_back(ExponentRecord{r, Rat(0), true, j});
        }
    }
    return out;
}

// Isolation criterion.  H1: every noncompact block has a_j >= 2 and b_j >= 2.
// H2: within each maximal run of consecutive compact blocks the type is
// constant (all U(1,0) or all U(0,1)).  The module is isolated in the unitary
// dual iff both hold.
struct IsolationVerdict {
    bool isolated = false;
    bool h1 = false;
    bool h2 = false;
    int min_degree = 0;
};

inline IsolationVerdict is_isolated(const ThetaStableData& d) {
    IsolationVerdict v;
    v.h1 = true;
    for (const auto& blk : d.blocks)
        if (!blk.compact() && (blk.a < 2 || blk.b < 2)) v.h1 = false;
    v.h2 = true;
    for (int j = 0; j + 1 < d.rank(); ++j)
        if (d.blocks[j].compact() && d.blocks[j + 1].compact() &&
            d.blocks[j].a != d.blocks[j + 1].a)
            v.h2 = false;
    v.isolated = v.h1 && v.h2;
    v.min_degree = min_cohomology_degree(d);
    return v;
}

// All normal-form block data for U(a,b) (every ordered block sequence with
// positive blocks satisfying H0), used for exhaustive scans.
inline std::vector<ThetaStableData> enumerate_h0_data(int a, int b) {
    std::vector<ThetaStableData> out;
    std::vector<AqBlock> cur;
    auto rec = [&](auto&& self, int ra, int rb) -> void {
        if (ra == 0 && rb == 0) {
            ThetaStableData d;
            d.a = a;
            d.b = b;
            d.blocks = cur;
            out.push_back(std::move(d));
            return;
        }
        for (int x = 0; x <= ra; ++x)
            for (int y = 0; y <= rb; ++y) {
                if (x == 0 && y == 0) continue;
                if ((x == 0 && y != 1) || (y == 0 && x != 1)) continue;
                cur.push_back(AqBlock{x, y});
                self(self, ra - x, rb - y);
                cur.pop_back();
            }
    };
    rec(rec, a, b);
    return out;
}

} // namespace hyperspec
