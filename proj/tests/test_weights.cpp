#include <catch2/catch_amalgamated.hpp>

#include "hyperspec/weights.hpp"

using namespace hyperspec;

namespace {
WeightVector wv(std::initializer_list<Rat> c) { return WeightVector(std::vector<Rat>(c)); }
} // namespace

TEST_CASE("half-sum vectors") {
    DeltaVectors d2 = delta_vectors(2);
    CHECK(d2.delta_g == wv({1, 0, -1}));
    CHECK(d2.delta_k == wv({Rat(1, 2), Rat(-1, 2)}));
    DeltaVectors d3 = delta_vectors(3);
    CHECK(d3.delta_m == wv({Rat(1, 2), Rat(-1, 2)}));
    CHECK_THROWS_AS(delta_vectors(0), std::invalid_argument);

    // pairing <2 delta_G, eps_k> = n+2-2k
    for (int n = 1; n <= 6; ++n) {
        DeltaVectors d = delta_vectors(n);
        for (int k = 1; k <= n + 1; ++k) CHECK(2 * d.delta_g.coords[k - 1] == Rat(n + 2 - 2 * k));
    }
}

TEST_CASE("primitive K-type highest weights") {
    CHECK(tau_highest_weight({2, 1, 1}) == wv({1, -1, 0}));
    CHECK(tau_highest_weight({3, 0, 0}) == wv({0, 0, 0, 0}));
    CHECK(tau_highest_weight({3, 2, 0}) == wv({0, -1, -1, 2}));
    CHECK_THROWS_AS(tau_highest_weight({2, 2, 1}), std::invalid_argument);
}

TEST_CASE("Hodge symmetry of the highest weights") {
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                WeightVector a = tau_highest_weight({n, p, q});
                WeightVector b = tau_highest_weight({n, q, p});
                for (int k = 0; k < n; ++k) CHECK(a.coords[k] == -b.coords[n - 1 - k]);
                CHECK(a.coords[n] == -b.coords[n]);
            }
}

TEST_CASE("Lefschetz decomposition") {
    auto l = lefschetz_decompose(2, 1, 1);
    REQUIRE(l.size() == 2);
    CHECK((l[0].p == 1 && l[0].q == 1));
    CHECK((l[1].p == 0 && l[1].q == 0));
    CHECK(lefschetz_decompose(5, 3, 0).size() == 1);
    auto l4 = lefschetz_decompose(4, 2, 2);
    REQUIRE(l4.size() == 3);
    CHECK((l4[2].p == 0 && l4[2].q == 0));
}

TEST_CASE("restriction to M") {
    auto r = restrict_to_M({2, 1, 1});
    REQUIRE(r.size() == 4);
    CHECK((r[0].a == 1 && r[0].b == 1));
    CHECK((r[3].a == 0 && r[3].b == 0));

    auto r0 = restrict_to_M({4, 0, 0});
    REQUIRE(r0.size() == 1);
    CHECK((r0[0].a == 0 && r0[0].b == 0));

    auto r2 = restrict_to_M({2, 2, 0});
    REQUIRE(r2.size() == 1);
    CHECK((r2[0].a == 1 && r2[0].b == 0));

    // always between 1 and 4 labels; exactly 4 when 1 <= p,q <= n-1
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                auto labels = restrict_to_M({n, p, q});
                CHECK(labels.size() >= 1);
                CHECK(labels.size() <= 4);
                if (p >= 1 && q >= 1 && p <= n - 1 && q <= n - 1) CHECK(labels.size() == 4);
            }
}

TEST_CASE("M-type highest weight") {
    // sigma_{1,0} for n=2: (1/2)(eps_1+eps_3) - eps_2
    CHECK(mtype_highest_weight({2, 1, 0}) == wv({Rat(1, 2), -1, Rat(1, 2)}));
    CHECK(mtype_highest_weight({3, 0, 0}) == wv({0, 0, 0, 0}));
    CHECK_THROWS_AS(mtype_highest_weight({2, 2, 0}), std::invalid_argument);
}

TEST_CASE("discrete series lowest K-types") {
    auto [w0, t0] = discrete_series_ktype(2, 0);
    CHECK(w0 == wv({-1, -1, 2}));
    CHECK((t0.p == 2 && t0.q == 0));
    auto [w2, t2] = discrete_series_ktype(2, 2);
    CHECK(w2 == wv({1, 1, -2}));
    CHECK((t2.p == 0 && t2.q == 2));
    auto [w1, t1] = discrete_series_ktype(2, 1);
    CHECK(w1 == wv({1, -1, 0}));
    CHECK((t1.p == 1 && t1.q == 1));
    CHECK_THROWS_AS(discrete_series_ktype(2, 3), std::invalid_argument);
}

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dim(3, wv({0, 0, 0})) == 1);
    for (int n = 2; n <= 6; ++n) {
        std::vector<Rat> std_rep(n, Rat(0));
        std_rep[0] = 1;
        CHECK(weyl_dim(n, WeightVector(std_rep)) == n);
    }
    CHECK(tau_dim({2, 1, 1}) == 3);
    CHECK_THROWS_AS(weyl_dim(2, wv({0, 1})), std::domain_error);
    CHECK_THROWS_AS(weyl_dim(2, wv({Rat(1, 2), 0})), std::domain_error);
}

TEST_CASE("Lefschetz dimension identity") {
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                Int total = 0;
                for (const auto& t : lefschetz_decompose(n, p, q)) total += tau_dim(t);
                CHECK(total == binomial(n, p) * binomial(n, q));
            }
}
