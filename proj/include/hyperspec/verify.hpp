// Verification suites: every numbered check the acceptance harness and the
// CLI `verify` subcommand run.  Each check compares a closed form against an
// exact value or an independent oracle and reports pass/fail with a short
// detail string.  All stochastic checks derive their streams from the single
// suite seed, so a fixed seed gives byte-identical reports.

#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "aq.hpp"
#include "arthur.hpp"
#include "geometry.hpp"
#include "langlands.hpp"
#include "lfactors.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "spherical.hpp"
#include "weights.hpp"

namespace hyperspec {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// --- 1. headline bound constants -------------------------------------------

inline CheckResult check_theorem1_constants() {
    auto [e0, e1] = theorem1_constants();
    bool ok = (e0 == Rat(84, 25)) && (e1 == Rat(9, 25));
    return {"theorem1-constants", ok, "epsilon0=" + rat_str(e0) + " epsilon1=" + rat_str(e1)};
}

// --- 2. spectral-gap formulas for all n ------------------------------------

inline CheckResult check_gap_formulas() {
    for (int n = 2; n <= 50; ++n) {
        if (bound_lambda1(n, 0, Rat(4, 5)) != Rat(2 * n - 1))
            return {"gap-formulas", false, "degree 0 mismatch at n=" + std::to_string(n)};
        if (bound_lambda1(n, 1, Rat(4, 5)) != Rat(10 * n - 11, 25))
            return {"gap-formulas", false, "degree 1 mismatch at n=" + std::to_string(n)};
    }
    return {"gap-formulas", true, "2n-1 and (10n-11)/25 exact for n=2..50"};
}

// --- 3. bound toward temperedness ------------------------------------------

inline CheckResult check_lrs_bound() {
    bool ok = (lrs_bound(3) == Rat(2, 5)) && (lrs_bound(2) == Rat(3, 10));
    return {"lrs-bound", ok,
            "lrs(3)=" + rat_str(lrs_bound(3)) + " lrs(2)=" + rat_str(lrs_bound(2))};
}

// --- 4. real hyperbolic first eigenvalue ------------------------------------

inline CheckResult check_so_gap() {
    for (int n = 3; n <= 20; ++n)
        if (so_sphere_lambdas(n).min_positive() != Rat(n - 2))
            return {"so-first-eigenvalue", false, "mismatch at n=" + std::to_string(n)};
    return {"so-first-eigenvalue", true, "min nonzero = n-2 exact for n=3..20"};
}

// --- 5. admissible-list exclusion -------------------------------------------

inline CheckResult check_un1_exclusion() {
    SpectrumList l = un1_admissible_lambdas(2, 0, 0);
    bool ok = l.exceptional == std::vector<Rat>{Rat(0), Rat(4)} && !l.contains(Rat(3));
    std::string d = "list={";
    for (std::size_t i = 0; i < l.exceptional.size(); ++i)
        d += (i ? "," : "") + rat_str(l.exceptional[i]);
    return {"admissible-exclusion", ok, d + "} 3 absent"};
}

// --- 6. Lefschetz dimension identity ----------------------------------------

inline CheckResult check_lefschetz_dims() {
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                Int total = 0;
                for (const auto& t : lefschetz_decompose(n, p, q)) total += tau_dim(t);
                if (total != binomial(n, p) * binomial(n, q))
                    return {"lefschetz-dimensions", false,
                            "mismatch at (n,p,q)=(" + std::to_string(n) + "," +
                                std::to_string(p) + "," + std::to_string(q) + ")"};
            }
    return {"lefschetz-dimensions", true, "C(n,p)C(n,q) identity exact for n<=6"};
}

// --- 7. minimal cohomology degree of non-isolated data ----------------------

inline CheckResult check_vogan_degree() {
    long data = 0;
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; a + b <= 8; ++b)
            for (const auto& d : enumerate_h0_data(a, b)) {
                ++data;
                IsolationVerdict v = is_isolated(d);
                if (!v.isolated && v.min_degree < a + b - 2)
                    return {"nonisolated-degree", false,
                            "counterexample in U(" + std::to_string(a) + "," +
                                std::to_string(b) + ")"};
            }
    return {"nonisolated-degree", true,
            "R >= a+b-2 on all " + std::to_string(data) + " non-isolated data"};
}

// --- 8. geometry closed forms vs oracles -------------------------------------

inline CheckResult check_ball_volume_mc(std::uint64_t seed, std::uint64_t samples = 10000000) {
    double worst = 0;
    int idx = 0;
    for (double rho : {0.5, 1.0, 2.0}) {
        double exact = ball_volume(2, rho);
        double mc = ball_volume_mc(2, rho, samples, splitmix64(seed + 101 + idx++));
        worst = std::max(worst, std::abs(mc - exact) / exact);
    }
    return {"ball-volume-mc", worst < 0.02, "max rel err " + fmt_double(worst)};
}

inline CheckResult check_gamma_integral_mc(std::uint64_t seed, std::uint64_t samples = 10000000) {
    double worst = 0;
    int idx = 0;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {4, 1}})
        for (double s : {0.0, 1.0}) {
            double exact = gamma_integral(p, q, s);
            double mc = gamma_integral_mc(p, q, s, samples, splitmix64(seed + 211 + idx++));
            worst = std::max(worst, std::abs(mc - exact) / exact);
        }
    return {"gamma-integral-mc", worst < 0.02, "max rel err " + fmt_double(worst)};
}

inline CheckResult check_hessian_fd(std::uint64_t seed) {
    SubspaceConfig cfg(2, 1, 1);
    Rng rng(splitmix64(seed + 307));
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        CMat Z = random_domain_point(2, 1, rng, 0.8);
        if (dist_to_subspace(Z, cfg) < 0.2) { --trial; continue; }
        LambdaProfile lp = lambda_profile(Z, cfg);
        auto closed = hessian_F_eigenvalues(lp.lambda, lp.F, cfg);
        auto fd = hessian_fd_eigenvalues(Z, cfg, 1e-3);
        for (std::size_t i = 0; i < closed.size(); ++i)
            worst = std::max(worst, std::abs(closed[i] - fd[i]));
    }
    return {"hessian-fd", worst < 1e-4, "max abs err " + fmt_double(worst)};
}

inline CheckResult check_levi_fd(std::uint64_t seed) {
    Rng rng(splitmix64(seed + 401));
    double worst = 0;
    for (const SubspaceConfig& cfg :
         {SubspaceConfig(2, 1, 1), SubspaceConfig(3, 2, 1), SubspaceConfig(3, 2, 2)}) {
        for (int trial = 0; trial < 5; ++trial) {
            CMat Z = random_domain_point(cfg.p, cfg.q, rng, 0.7);
            auto closed = levi_logBA_eigenvalues(Z, cfg);
            auto fd = levi_fd_eigenvalues(Z, cfg, 1e-4);
            for (std::size_t i = 0; i < closed.size(); ++i)
                worst = std::max(worst, std::abs(closed[i] - fd[i]));
        }
    }
    return {"levi-fd", worst < 1e-4, "max abs err " + fmt_double(worst)};
}

// --- 9. invariance / inequality suite ----------------------------------------

inline CheckResult check_invariance_suite(std::uint64_t seed) {
    // B/A under G_V, 10^3 elements.
    {
        Rng rng(splitmix64(seed + 501));
        for (const SubspaceConfig& cfg : {SubspaceConfig(2, 1, 1), SubspaceConfig(3, 2, 1)}) {
            CMat Z = random_domain_point(cfg.p, cfg.q, rng, 0.7);
            ABC v0 = abc(Z, cfg);
            for (int i = 0; i < 500; ++i) {
                GroupElement g = random_gv_element(cfg, rng, 0.4);
                ABC v1 = abc(act(g, Z).gZ, cfg);
                if (std::abs(v1.B / v1.A - v0.B / v0.A) > 1e-9 * (v0.B / v0.A))
                    return {"invariance-suite", false, "B/A not G_V-invariant"};
            }
        }
    }
    // Cocycle and A-transformation, 10^3 trials.
    {
        Rng rng(splitmix64(seed + 547));
        for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
            for (int i = 0; i < 334; ++i) {
                CMat Z = random_domain_point(p, q, rng, 0.8);
                GroupElement g = random_group_element(p, q, rng, 0.4);
                GroupElement h = random_group_element(p, q, rng, 0.4);
                ActResult hz = act(h, Z);
                ActResult ghz = act(g, hz.gZ);
                GroupElement gh(g.g * h.g, p, q);
                ActResult comp = act(gh, Z);
                if ((ghz.j * hz.j - comp.j).cwiseAbs().maxCoeff() > 1e-10)
                    return {"invariance-suite", false, "cocycle identity failed"};
                double a0 = (CMat::Identity(q, q) - Z.adjoint() * Z).determinant().real();
                double a1 = (CMat::Identity(q, q) - hz.gZ.adjoint() * hz.gZ).determinant().real();
                double jac = std::norm(hz.j.determinant());
                if (std::abs(a1 - a0 / jac) > 1e-10 * std::abs(a0 / jac))
                    return {"invariance-suite", false, "A(gZ) transformation failed"};
            }
        }
    }
    // Distance inequalities per rank m = 1..3 on U(3,3), 10^3 points each.
    {
        Rng rng(splitmix64(seed + 613));
        SubspaceConfig cfg(3, 3, 3 - 1); // for dist_to_subspace bounds use r=2
        for (int m = 1; m <= 3; ++m) {
            for (int i = 0; i < 1000; ++i) {
                CMat Z = random_rank_m_point(3, 3, m, rng, 0.9);
                // dist-from-origin bounds: (1/4^m) e^{2d} <= det(I-ZZ*)^{-1} <= e^{2 sqrt(m) d}
                double d = dist0(Z);
                double det = (CMat::Identity(3, 3) - Z * Z.adjoint()).determinant().real();
                double inv = 1 / det;
                if (std::exp(2 * d) / std::pow(4.0, m) > inv * (1 + 1e-9) ||
                    inv > std::exp(2 * std::sqrt(m) * d) * (1 + 1e-9))
                    return {"invariance-suite", false, "origin-distance bounds failed"};
                if (m == 1 && std::abs(std::cosh(d) * std::cosh(d) - inv) > 1e-8 * inv)
                    return {"invariance-suite", false, "rank-1 cosh identity failed"};
            }
        }
        // subspace-distance bounds, rank of Z_2 = m <= min(r,q) = 2
        for (int m = 1; m <= 2; ++m) {
            for (int i = 0; i < 1000; ++i) {
                CMat Z = CMat::Zero(3, 3);
                Z.topRows(1) = random_domain_point(1, 3, rng, 0.5);
                Z.bottomRows(2) = random_rank_m_point(2, 3, m, rng, 0.5);
                if (!in_domain(Z)) { --i; continue; }
                double d = dist_to_subspace(Z, cfg);
                ABC v = abc(Z, cfg);
                double ba = v.B / v.A;
                if (std::pow(4.0, m) * ba < std::exp(2 * d) * (1 - 1e-9) ||
                    std::exp(2 * std::sqrt(m) * d) < ba * (1 - 1e-9))
                    return {"invariance-suite", false, "subspace-distance bounds failed"};
                if (m == 1 && std::abs(std::cosh(d) * std::cosh(d) - ba) > 1e-8 * ba)
                    return {"invariance-suite", false, "rank-1 cosh(B/A) identity failed"};
            }
        }
    }
    return {"invariance-suite", true, "cocycle, A-transform, B/A, distance bounds all hold"};
}

// --- 10. spherical asymptotics ------------------------------------------------

inline CheckResult check_spherical_asymptotics() {
    double worst = 0;
    for (auto [n, s] : std::vector<std::pair<int, double>>{{2, 0.5}, {2, 1.0}, {3, 2.0}}) {
        double t_max = 20.0 / std::min(s, n - s) + 1;
        RadialSolution sol = radial_solve(n, s, t_max, 1e-3 * t_max);
        worst = std::max(worst, std::abs(asymptotic_exponent(sol) - (s - n)));
    }
    return {"spherical-asymptotics", worst < 1e-3, "max exponent err " + fmt_double(worst)};
}

// --- 11. L-factor suite --------------------------------------------------------

inline CheckResult check_lfactor_suite(std::uint64_t seed) {
    Rng rng(splitmix64(seed + 701));
    std::vector<GammaProduct> products = {
        lfactor_r({WeilBlockR::character(0, QComplex(0)),
                   WeilBlockR::character(1, QComplex(Rat(1, 3))),
                   WeilBlockR::induced(3, QComplex(Rat(-1, 4)))}),
        lfactor_c({WeilBlockC(QComplex(Rat(3, 2)), QComplex(Rat(1, 2))),
                   WeilBlockC(QComplex(Rat(-1, 2)), QComplex(Rat(1, 2)))}),
        rankin_selberg_r({WeilBlockR::induced(2, QComplex(Rat(1, 5))),
                          WeilBlockR::character(0, QComplex(0))},
                         {WeilBlockR::induced(4, QComplex(Rat(-1, 5))),
                          WeilBlockR::character(1, QComplex(Rat(1, 7)))}),
        rankin_selberg_c({WeilBlockC(QComplex(Rat(3, 10)), QComplex(Rat(3, 10))),
                          WeilBlockC(QComplex(Rat(-3, 10)), QComplex(Rat(-3, 10)))},
                         {WeilBlockC(QComplex(Rat(3, 10)), QComplex(Rat(3, 10))),
                          WeilBlockC(QComplex(Rat(-3, 10)), QComplex(Rat(-3, 10)))}),
    };
    // Gamma recurrence factor-by-factor: value(s + 1/a)/value(s) must equal
    // base^{-e_a/a} (a s + b) with e_a the exponent slope.
    for (const auto& gp : products)
        for (const auto& f : gp.factors) {
            GammaProduct one;
            one.factors = {f};
            double a = static_cast<double>(f.arg.a);
            for (int trial = 0; trial < 20; ++trial) {
                QComplex s(parse_rat(std::to_string(rng.next_u64() % 2000) + "/100"),
                           parse_rat(std::to_string(rng.next_u64() % 1000) + "/100"));
                // keep clear of poles
                s = s + QComplex(Rat(3), Rat(1, 7));
                std::complex<double> lhs =
                    eval(one, s + QComplex(Rat(Rat(1) / f.arg.a))) / eval(one, s);
                double base = (f.base == GammaFactor::Pi) ? M_PI : 2 * M_PI;
                std::complex<double> rhs =
                    std::pow(base, -static_cast<double>(f.exponent.a) / a) *
                    (qc_to_cd(f.arg.eval(s)));
                if (std::abs(lhs - rhs) > 1e-10 * std::abs(rhs))
                    return {"lfactor-suite", false, "Gamma recurrence failed"};
            }
        }
    // Exact first poles.
    std::vector<WeilBlockC> pi = {WeilBlockC(QComplex(Rat(3, 10)), QComplex(Rat(3, 10))),
                                  WeilBlockC(QComplex(Rat(-3, 10)), QComplex(Rat(-3, 10)))};
    auto pole = first_pole(rankin_selberg_c(pi, pi));
    if (!pole || *pole != Rat(3, 5))
        return {"lfactor-suite", false, "Rankin-Selberg pole != 3/5"};
    std::vector<WeilBlockC> unit = {WeilBlockC(QComplex(Rat(0)), QComplex(Rat(0))),
                                    WeilBlockC(QComplex(Rat(1, 2)), QComplex(Rat(-1, 2)))};
    auto pole2 = first_pole(rankin_selberg_c(unit, unit));
    if (!pole2 || *pole2 != Rat(0))
        return {"lfactor-suite", false, "tempered Rankin-Selberg pole != 0"};
    return {"lfactor-suite", true, "recurrence 1e-10; poles 3/5 and 0 exact"};
}

// --- suite runner ---------------------------------------------------------------

inline std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("spectra")) {
        out.push_back(check_theorem1_constants());
        out.push_back(check_gap_formulas());
        out.push_back(check_lrs_bound());
        out.push_back(check_so_gap());
        out.push_back(check_un1_exclusion());
        out.push_back(check_lefschetz_dims());
    }
    if (want("aq")) out.push_back(check_vogan_degree());
    if (want("geometry")) {
        out.push_back(check_ball_volume_mc(seed));
        out.push_back(check_gamma_integral_mc(seed));
        out.push_back(check_hessian_fd(seed));
        out.push_back(check_levi_fd(seed));
        out.push_back(check_invariance_suite(seed));
    }
    if (want("spherical")) out.push_back(check_spherical_asymptotics());
    if (want("lfactor")) out.push_back(check_lfactor_suite(seed));
    if (out.empty()) throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    return out;
}

} // namespace hyperspec
