#include <catch2/catch_amalgamated.hpp>

#include "hyperspec/langlands.hpp"

using namespace hyperspec;

TEST_CASE("Casimir on induced representations") {
    CHECK(casimir_induced(2, 0, 0, QComplex(Rat(4, 5))) == QComplex(Rat(-84, 25)));
    CHECK(casimir_induced(3, 1, 0, QComplex(Rat(2))) == QComplex(Rat(0)));
    CHECK(casimir_induced(2, 1, 0, QComplex(Rat(1, 2))) == QComplex(Rat(-3, 4)));
    CHECK_THROWS_AS(casimir_induced(2, 2, 0, QComplex(Rat(0))), std::invalid_argument);

    // even in s
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= n - 1; ++a)
            for (int b = 0; b <= n - 1; ++b) {
                QComplex s(Rat(3, 7), Rat(1, 3));
                CHECK(casimir_induced(n, a, b, s) == casimir_induced(n, a, b, -s));
            }
}

TEST_CASE("continuous floor on forms") {
    CHECK(laplace_floor(2, 0, 0) == Rat(4));
    CHECK(laplace_floor(2, 1, 1) == Rat(1));
    CHECK(laplace_floor(5, 2, 1) == Rat(4));
    // matches -casimir at s = 0 away from the middle band
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q)
                if (p + q != n && p <= n - 1 && q <= n - 1)
                    CHECK(QComplex(laplace_floor(n, p, q)) ==
                          -casimir_induced(n, p, q, QComplex(0)));
}

TEST_CASE("K-type Casimir case families") {
    // functions: a single case, k = 0, alpha - beta = 0
    auto f = ktype_casimir_cases(3, 0, 0);
    REQUIRE(f.size() == 1);
    CHECK(f[0].offset == 0);
    CHECK(f[0].k_max == 0);
    CHECK(f[0].alpha_minus_beta == 0);
    CHECK(f[0].laplace_eigenvalue(0, QComplex(0)) == QComplex(Rat(9)));

    // (2,1,0): the alpha-beta = 1 family gives (1+2k)^2 - s^2 at k = 0
    bool found = false;
    for (const auto& c : ktype_casimir_cases(2, 1, 0))
        if (c.alpha_minus_beta == 1 && c.offset == 0) {
            found = true;
            QComplex s(Rat(1, 3));
            CHECK(c.laplace_eigenvalue(0, s) == QComplex(Rat(1) - Rat(1, 9)));
        }
    CHECK(found);

    // (2,1,1): case 1 at k in {0,1} gives -s^2 and 4 - s^2
    for (const auto& c : ktype_casimir_cases(2, 1, 1))
        if (c.offset == 0 && c.alpha_minus_beta == 0) {
            REQUIRE(c.k_max == 1);
            CHECK(c.laplace_eigenvalue(0, QComplex(0)) == QComplex(Rat(0)));
            CHECK(c.laplace_eigenvalue(1, QComplex(0)) == QComplex(Rat(4)));
        }

    // at s = 0 every eigenvalue is the square of an integer whose parity is
    // that of n-p-q shifted by the case offset
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q)
                for (const auto& c : ktype_casimir_cases(n, p, q))
                    for (int k = 0; k <= c.k_max; ++k) {
                        Rat v = c.laplace_eigenvalue(k, QComplex(0)).re;
                        long base = n - p - q + 2 * k + c.offset;
                        CHECK(v == Rat(base * base));
                        CHECK((base - (n - p - q + c.offset)) % 2 == 0);
                    }
}

TEST_CASE("U(2,1) classification: integral family") {
    U21Param p;
    p.family = U21Param::Integral;
    p.a = 3; p.b = 1; p.c = 0;
    U21Class c = classify_u21(p);
    CHECK(c.kind == U21Class::DiscreteLPacket);
    CHECK(c.packet_size == 3);
    CHECK(c.tempered);
    CHECK(c.unitary == Unitarity::Yes);
    REQUIRE(c.character.size() == 3);
    CHECK(c.character[0] == QComplex(Rat(2)));
    CHECK(c.character[1] == QComplex(Rat(1)));
    CHECK(c.character[2] == QComplex(Rat(1)));

    p.a = 2; p.b = 2; p.c = 0;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::TemperedPair);
    CHECK(c.packet_size == 2);

    p.a = 1; p.b = 1; p.c = 1;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::IrreducibleInduced);
    CHECK(c.packet_size == 1);
    CHECK(c.tempered);

    p.a = 0; p.b = 1; p.c = 0;
    CHECK_THROWS_AS(classify_u21(p), std::invalid_argument);
}

TEST_CASE("U(2,1) classification: continuous family") {
    U21Param p;
    p.family = U21Param::Continuous;

    // trivial representation
    p.u = QComplex(Rat(1)); p.v = QComplex(Rat(1)); p.mu = 0;
    U21Class c = classify_u21(p);
    CHECK(c.kind == U21Class::FiniteDimensional);
    CHECK(c.trivial);
    CHECK(c.unitary == Unitarity::Yes);
    CHECK_FALSE(c.tempered);

    // nontrivial finite-dimensional: unitarity not decided by the criteria
    p.u = QComplex(Rat(2)); p.v = QComplex(Rat(1)); p.mu = 0;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::FiniteDimensional);
    CHECK_FALSE(c.trivial);
    CHECK(c.unitary == Unitarity::Undetermined);

    // residual Langlands quotient contributing to (1,0)-forms
    p.u = QComplex(Rat(2)); p.v = QComplex(Rat(-1)); p.mu = -1;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::LanglandsQuotient);
    CHECK(c.unitary == Unitarity::Yes); // u + v = 1
    CHECK(c.has_contribution);
    CHECK((c.form_p == 1 && c.form_q == 0));
    CHECK(c.lambda == Rat(0));

    // its mirror on (0,1)-forms
    p.u = QComplex(Rat(-1)); p.v = QComplex(Rat(2)); p.mu = 1;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::LanglandsQuotient);
    CHECK(c.has_contribution);
    CHECK((c.form_p == 0 && c.form_q == 1));

    // non-unitary quotient: u + v != 1
    p.u = QComplex(Rat(3)); p.v = QComplex(Rat(-1)); p.mu = 0;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::LanglandsQuotient);
    CHECK(c.unitary == Unitarity::No);

    // tempered principal series
    p.u = QComplex(Rat(1, 2), Rat(2)); p.v = QComplex(Rat(-1, 2), Rat(2)); p.mu = 0;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::IrreducibleInduced);
    CHECK(c.tempered);
    CHECK(c.unitary == Unitarity::Yes);

    // complementary series on functions: (s/2, s/2, 0), lambda = 4 - s^2
    p.u = QComplex(Rat(1, 2)); p.v = QComplex(Rat(1, 2)); p.mu = 0;
    c = classify_u21(p);
    CHECK(c.kind == U21Class::IrreducibleInduced);
    CHECK_FALSE(c.tempered);
    CHECK(c.unitary == Unitarity::Yes); // u = v, |u+v| < 2
    CHECK(c.has_contribution);
    CHECK((c.form_p == 0 && c.form_q == 0));
    CHECK(c.lambda == Rat(3)); // s = 1

    // complementary series on (1,0)-forms: ((s+3)/2,(s-3)/2,-1), lambda = 1 - s^2
    p.u = QComplex(Rat(7, 4)); p.v = QComplex(Rat(-5, 4)); p.mu = -1; // s = 1/2
    c = classify_u21(p);
    CHECK(c.has_contribution);
    CHECK((c.form_p == 1 && c.form_q == 0));
    CHECK(c.lambda == Rat(3, 4));
    CHECK(c.unitary == Unitarity::Yes); // u - v = 3 odd, |u+v| = 1/2 < 1

    // outside every unitarity window
    p.u = QComplex(Rat(5, 2)); p.v = QComplex(Rat(-1, 2)); p.mu = 0; // u-v = 3, u+v = 2
    c = classify_u21(p);
    CHECK(c.unitary == Unitarity::No);

    // malformed: u - v not an integer
    p.u = QComplex(Rat(1, 3)); p.v = QComplex(Rat(0)); p.mu = 0;
    CHECK_THROWS_AS(classify_u21(p), std::invalid_argument);
}

TEST_CASE("discrete parameter validation") {
    Un1DiscreteParam d;
    d.n = 2;
    d.entries = {Rat(2), Rat(0), Rat(-2)};
    CHECK(validate_discrete_param(d).ok);
    d.entries = {Rat(1), Rat(1), Rat(0)};
    CHECK_FALSE(validate_discrete_param(d).ok);
    d.n = 3;
    d.entries = {Rat(3, 2), Rat(1, 2), Rat(-1, 2), Rat(-3, 2)};
    CHECK(validate_discrete_param(d).ok);
    d.entries = {Rat(1), Rat(1, 2), Rat(-1, 2), Rat(-3, 2)};
    CHECK_FALSE(validate_discrete_param(d).ok);
}

TEST_CASE("Speh block infinitesimal character") {
    using V = std::vector<QComplex>;
    auto r = infchar_speh({V{QComplex(0)}, V{QComplex(0)}}, 3);
    CHECK(r.first == V{QComplex(Rat(1)), QComplex(Rat(0)), QComplex(Rat(-1))});
    CHECK(r.second == r.first);

    auto one = infchar_speh({V{QComplex(Rat(2)), QComplex(Rat(-1))}, V{QComplex(0)}}, 1);
    CHECK(one.first == V{QComplex(Rat(2)), QComplex(Rat(-1))});

    auto h = infchar_speh({V{QComplex(Rat(1, 2))}, V{QComplex(Rat(-1, 2))}}, 2);
    CHECK(h.first == V{QComplex(Rat(1)), QComplex(Rat(0))});
    CHECK(h.second == V{QComplex(Rat(0)), QComplex(Rat(-1))});
}

TEST_CASE("temperedness of GL parameters") {
    CHECK(tempered_gl(std::vector<WeilBlockR>{WeilBlockR::character(0, QComplex(Rat(0), Rat(3))),
                                              WeilBlockR::induced(2, QComplex(Rat(0), Rat(1)))}));
    CHECK_FALSE(tempered_gl(std::vector<WeilBlockR>{
        WeilBlockR::character(0, QComplex(Rat(3, 10)))}));
    CHECK(tempered_gl(std::vector<WeilBlockC>{
        WeilBlockC(QComplex(Rat(1, 2)), QComplex(Rat(-1, 2)))}));
    CHECK_FALSE(tempered_gl(std::vector<WeilBlockC>{
        WeilBlockC(QComplex(Rat(1)), QComplex(Rat(0)))}));
}
