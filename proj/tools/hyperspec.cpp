// Command-line front end: spectral tables, bound constants, U(2,1)
// classification, theta-stable data reports, L-factor inspection, domain
// geometry with Monte Carlo / finite-difference oracles, the radial ODE, and
// the verification-suite runner.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "hyperspec/aq.hpp"
#include "hyperspec/arthur.hpp"
#include "hyperspec/geometry.hpp"
#include "hyperspec/langlands.hpp"
#include "hyperspec/lfactors.hpp"
#include "hyperspec/report.hpp"
#include "hyperspec/rng.hpp"
#include "hyperspec/spherical.hpp"
#include "hyperspec/verify.hpp"
#include "hyperspec/weights.hpp"

namespace hs = hyperspec;
using hs::Json;
using hs::Rat;

namespace {

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
    if (seed_given) return seed_flag;
    if (const char* env = std::getenv("HYPERSPEC_SEED")) return std::strtoull(env, nullptr, 10);
    return hs::kDefaultSeed;
}

std::vector<std::string> rat_list(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(hs::rat_str(r));
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// p x q complex matrix from a JSON array of rows of [re, im] pairs.
hs::CMat parse_matrix(const std::string& text) {
    Json j = Json::parse(text);
    int p = static_cast<int>(j.size());
    if (p == 0) throw std::invalid_argument("empty matrix");
    int q = static_cast<int>(j.at(0).size());
    hs::CMat Z(p, q);
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < q; ++k)
            Z(i, k) = hs::Cd(j.at(i).at(k).at(0).get<double>(), j.at(i).at(k).at(1).get<double>());
    return Z;
}

hs::TableFormat parse_format(const std::string& f) {
    if (f == "json") return hs::TableFormat::Json;
    if (f == "csv") return hs::TableFormat::Csv;
    return hs::TableFormat::Text;
}

const char* unitarity_str(hs::Unitarity u) {
    switch (u) {
        case hs::Unitarity::Yes: return "yes";
        case hs::Unitarity::No: return "no";
        default: return "undetermined";
    }
}

const char* kind_str(hs::U21Class::Kind k) {
    switch (k) {
        case hs::U21Class::DiscreteLPacket: return "discrete-l-packet";
        case hs::U21Class::TemperedPair: return "tempered-pair";
        case hs::U21Class::IrreducibleInduced: return "irreducible-induced";
        case hs::U21Class::LanglandsQuotient: return "langlands-quotient";
        default: return "finite-dimensional";
    }
}

Json gamma_product_json(const hs::GammaProduct& gp) {
    Json rows = Json::array();
    for (const auto& f : gp.factors) {
        Json r;
        r["scale"] = hs::rat_str(f.scale);
        r["base"] = (f.base == hs::GammaFactor::Pi) ? "pi" : "2pi";
        r["exponent"] = hs::rat_str(f.exponent.a) + "*s+" + hs::qc_str(f.exponent.b);
        r["gamma_arg"] = hs::rat_str(f.arg.a) + "*s+" + hs::qc_str(f.arg.b);
        rows.push_back(r);
    }
    Json out;
    out["factors"] = rows;
    auto pole = hs::first_pole(gp);
    out["first_pole"] = pole ? hs::rat_str(*pole) : "none";
    return out;
}

std::vector<hs::WeilBlockR> parse_blocks_r(const std::string& text) {
    std::vector<hs::WeilBlockR> out;
    for (const auto& b : Json::parse(text)) {
        hs::QComplex t(hs::parse_rat(b.value("t", "0")),
                       hs::parse_rat(b.value("t_im", "0")));
        if (b.contains("l"))
            out.push_back(hs::WeilBlockR::induced(b.at("l").get<int>(), t));
        else
            out.push_back(hs::WeilBlockR::character(b.value("eps", 0), t));
    }
    return out;
}

std::vector<hs::WeilBlockC> parse_blocks_c(const std::string& text) {
    std::vector<hs::WeilBlockC> out;
    for (const auto& b : Json::parse(text))
        out.emplace_back(hs::QComplex(hs::parse_rat(b.value("p", "0")),
                                      hs::parse_rat(b.value("p_im", "0"))),
                         hs::QComplex(hs::parse_rat(b.value("q", "0")),
                                      hs::parse_rat(b.value("q_im", "0"))));
    return out;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& self_path) {
    std::vector<hs::CheckResult> results = hs::run_suite(suite, seed);
    // Determinism self-check: run a cheap sub-suite through the CLI twice and
    // compare the bytes.
    if (suite == "all" && !self_path.empty()) {
        auto capture = [&]() -> std::string {
            std::string cmd = "\"" + self_path + "\" verify --suite lfactor --seed " +
                              std::to_string(seed) + " 2>/dev/null";
            std::string data;
            if (FILE* f = popen(cmd.c_str(), "r")) {
                char buf[4096];
                std::size_t n;
                while ((n = fread(buf, 1, sizeof(buf), f)) > 0) data.append(buf, n);
                pclose(f);
            }
            return data;
        };
        std::string a = capture(), b = capture();
        results.push_back({"determinism-self", !a.empty() && a == b,
                           "two sub-runs byte-identical (" + std::to_string(a.size()) + " bytes)"});
    }
    bool all = true;
    std::vector<Json> rows;
    for (const auto& r : results) {
        all = all && r.pass;
        Json row;
        row["check"] = r.name;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        rows.push_back(row);
    }
    Json summary;
    summary["check"] = "summary";
    summary["pass"] = all;
    summary["detail"] = std::to_string(rows.size()) + " checks, suite=" + suite +
                        ", seed=" + std::to_string(seed);
    rows.push_back(summary);
    std::cout << hs::emit_table(rows, hs::TableFormat::Json);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperspec: spectral constants, parameters and domain geometry"};
    app.require_subcommand(1);

    std::uint64_t seed_flag = 0;
    bool seed_given = false;
    std::string format = "json";
    app.add_option("--seed", seed_flag, "random seed (overrides HYPERSPEC_SEED)")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--format", format, "output format: json|csv|text");

    // --- spectra -------------------------------------------------------------
    auto* spectra = app.add_subcommand("spectra", "admissible eigenvalue lists");
    std::string sp_group = "u";
    int sp_n = 2, sp_p = 0, sp_q = 0;
    std::string sp_eps = "4/5";
    spectra->add_option("--group", sp_group, "u (complex hyperbolic) or so (real)");
    spectra->add_option("--n", sp_n)->required();
    spectra->add_option("--p", sp_p);
    spectra->add_option("--q", sp_q);
    spectra->add_option("--eps", sp_eps, "deviation parameter for the floor (group u)");

    // --- bounds ----------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "spectral gap bound constants");
    int bd_theorem = 0, bd_n = 2, bd_deg = 0, bd_exotic = 0;
    std::string bd_eps = "4/5";
    bounds->add_option("--theorem", bd_theorem, "1: print the headline constants");
    bounds->add_option("--n", bd_n);
    bounds->add_option("--deg", bd_deg, "form degree 0 or 1");
    bounds->add_option("--eps", bd_eps);
    bounds->add_option("--exotic-l", bd_exotic, "odd prime l for the exotic-lift bound");

    // --- classify-u21 -----------------------------------------------------------
    auto* cls = app.add_subcommand("classify-u21", "classification of U(2,1) parameters");
    bool cls_integral = false;
    long cls_a = 0, cls_b = 0, cls_c = 0, cls_mu = 0;
    std::string cls_u = "0", cls_uim = "0", cls_v = "0", cls_vim = "0";
    cls->add_flag("--integral", cls_integral, "use the integral family (a,b,c)");
    cls->add_option("--a", cls_a);
    cls->add_option("--b", cls_b);
    cls->add_option("--c", cls_c);
    cls->add_option("--u", cls_u, "Re u as a rational");
    cls->add_option("--u-im", cls_uim);
    cls->add_option("--v", cls_v, "Re v as a rational");
    cls->add_option("--v-im", cls_vim);
    cls->add_option("--mu", cls_mu);

    // --- aq ----------------------------------------------------------------------
    auto* aqc = app.add_subcommand("aq", "theta-stable block data");
    int aq_a = 0, aq_b = 0;
    std::string aq_blocks;
    aqc->add_option("--a", aq_a)->required();
    aqc->add_option("--b", aq_b)->required();
    aqc->add_option("--blocks", aq_blocks, "semicolon list \"a1,b1;a2,b2;...\"")->required();

    // --- lfactor -------------------------------------------------------------------
    auto* lf = app.add_subcommand("lfactor", "archimedean L-factors");
    std::string lf_type = "r", lf_blocks, lf_blocks2, lf_eval;
    lf->add_option("--type", lf_type, "r|c|rs-r|rs-c");
    lf->add_option("--blocks", lf_blocks, "JSON block list")->required();
    lf->add_option("--blocks2", lf_blocks2, "second parameter for rs-* types");
    lf->add_option("--eval-s", lf_eval, "also evaluate |L| at this rational s");

    // --- geometry --------------------------------------------------------------------
    auto* geo = app.add_subcommand("geometry", "domain geometry and oracles");
    geo->require_subcommand(1);
    std::string geo_z;
    int geo_p = 2, geo_q = 1, geo_r = 1, geo_n = 2;
    double geo_rho = 1.0, geo_s = 0.0;
    std::uint64_t geo_samples = 1000000;
    auto add_zprq = [&](CLI::App* c, bool need_z) {
        auto* o = c->add_option("--z", geo_z, "matrix as JSON rows of [re,im]");
        if (need_z) o->required();
        c->add_option("--p", geo_p);
        c->add_option("--q", geo_q);
        c->add_option("--r", geo_r);
    };
    auto* geo_dist = geo->add_subcommand("dist", "distances and A/B/C at a point");
    add_zprq(geo_dist, true);
    auto* geo_levi = geo->add_subcommand("levi", "Levi spectrum of log(B/A), closed vs FD");
    add_zprq(geo_levi, true);
    auto* geo_hess = geo->add_subcommand("hessian", "distance Hessian spectrum, closed vs FD");
    add_zprq(geo_hess, true);
    auto* geo_vol = geo->add_subcommand("mc-volume", "ball volume, closed vs Monte Carlo");
    geo_vol->add_option("--n", geo_n);
    geo_vol->add_option("--rho", geo_rho);
    geo_vol->add_option("--samples", geo_samples);
    auto* geo_int = geo->add_subcommand("mc-integral", "Gamma integral, closed vs Monte Carlo");
    geo_int->add_option("--p", geo_p);
    geo_int->add_option("--q", geo_q);
    geo_int->add_option("--s", geo_s);
    geo_int->add_option("--samples", geo_samples);

    // --- spherical ----------------------------------------------------------------------
    auto* sph = app.add_subcommand("spherical", "radial ODE solution and decay exponent");
    int sph_n = 2;
    double sph_s = 1.0, sph_tmax = 0.0, sph_step = 0.0;
    sph->add_option("--n", sph_n)->required();
    sph->add_option("--s", sph_s)->required();
    sph->add_option("--tmax", sph_tmax);
    sph->add_option("--step", sph_step);

    // --- verify ------------------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string ver_suite = "all";
    ver->add_option("--suite", ver_suite, "all|spectra|aq|geometry|spherical|lfactor");

    // let --seed/--format appear after the subcommand name as well
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    std::uint64_t seed = resolve_seed(seed_given, seed_flag);
    hs::TableFormat tfmt = parse_format(format);

    try {
        if (*spectra) {
            Json out;
            if (sp_group == "so") {
                if (sp_n == 2) {
                    out["special"] = hs::rat_str(hs::kSO21SpectralGap);
                    out["note"] = "n=2 degenerate case; list enumeration requires n>=3";
                } else {
                    hs::SpectrumList l = hs::so_sphere_lambdas(sp_n);
                    out["exceptional"] = rat_list(l.exceptional);
                    out["floor"] = hs::rat_str(l.floor);
                }
            } else {
                hs::SpectrumList l = hs::un1_admissible_lambdas(sp_n, sp_p, sp_q);
                out["exceptional"] = rat_list(l.exceptional);
                Rat eps = hs::parse_rat(sp_eps);
                Rat e = hs::lift_epsilon(2, sp_n, eps);
                int c = sp_n - sp_p - sp_q;
                out["floor"] = hs::rat_str(Rat(c * c) - e * e);
            }
            std::cout << hs::emit_table({out}, tfmt);
            return 0;
        }
        if (*bounds) {
            Json out;
            if (bd_theorem == 1) {
                auto [e0, e1] = hs::theorem1_constants();
                out["epsilon0"] = hs::rat_str(e0);
                out["epsilon1"] = hs::rat_str(e1);
            } else if (bd_exotic > 0) {
                out["lambda1"] = hs::rat_str(hs::exotic_bound(bd_n, bd_exotic, bd_deg));
            } else {
                Rat eps = hs::parse_rat(bd_eps);
                out["lambda1"] = hs::rat_str(hs::bound_lambda1(bd_n, bd_deg, eps));
                out["floor"] = hs::rat_str(hs::floor_lambda(bd_n, bd_deg, eps));
            }
            std::cout << hs::emit_table({out}, tfmt);
            return 0;
        }
        if (*cls) {
            hs::U21Param p;
            if (cls_integral) {
                p.family = hs::U21Param::Integral;
                p.a = cls_a; p.b = cls_b; p.c = cls_c;
            } else {
                p.family = hs::U21Param::Continuous;
                p.u = hs::QComplex(hs::parse_rat(cls_u), hs::parse_rat(cls_uim));
                p.v = hs::QComplex(hs::parse_rat(cls_v), hs::parse_rat(cls_vim));
                p.mu = cls_mu;
            }
            hs::U21Class c = hs::classify_u21(p);
            Json out;
            out["kind"] = kind_str(c.kind);
            out["packet_size"] = c.packet_size;
            out["tempered"] = c.tempered;
            out["unitary"] = unitarity_str(c.unitary);
            out["trivial"] = c.trivial;
            std::vector<std::string> ch;
            for (const auto& z : c.character) ch.push_back(hs::qc_str(z));
            out["character"] = ch;
            if (c.has_contribution) {
                out["contribution_form"] = "(" + std::to_string(c.form_p) + "," +
                                           std::to_string(c.form_q) + ")";
                out["contribution_lambda"] = hs::rat_str(c.lambda);
            }
            std::cout << hs::emit_table({out}, tfmt);
            return 0;
        }
        if (*aqc) {
            std::vector<std::pair<int, int>> sizes;
            std::stringstream ss(aq_blocks);
            std::string item;
            while (std::getline(ss, item, ';')) {
                auto comma = item.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("blocks: expected \"a,b\" pairs");
                sizes.emplace_back(std::stoi(item.substr(0, comma)),
                                   std::stoi(item.substr(comma + 1)));
            }
            hs::ThetaStableData d = hs::make_theta_stable(aq_a, aq_b, sizes);
            hs::IsolationVerdict v = hs::is_isolated(d);
            Json out;
            out["isolated"] = v.isolated;
            out["h1"] = v.h1;
            out["h2"] = v.h2;
            out["R"] = v.min_degree;
            out["lambda_sigma"] = rat_list(hs::hc_param_sigma(d).coords);
            std::vector<std::string> exps;
            for (const auto& e : hs::aq_langlands_exponents(d))
                exps.push_back("(z/zbar)^" + hs::rat_str(e.ratio) +
                               "(zzbar)^" + hs::rat_str(e.modulus));
            out["exponents"] = exps;
            std::cout << hs::emit_table({out}, tfmt);
            return 0;
        }
        if (*lf) {
            hs::GammaProduct gp;
            if (lf_type == "r") gp = hs::lfactor_r(parse_blocks_r(lf_blocks));
            else if (lf_type == "c") gp = hs::lfactor_c(parse_blocks_c(lf_blocks));
            else if (lf_type == "rs-r")
                gp = hs::rankin_selberg_r(parse_blocks_r(lf_blocks), parse_blocks_r(lf_blocks2));
            else if (lf_type == "rs-c")
                gp = hs::rankin_selberg_c(parse_blocks_c(lf_blocks), parse_blocks_c(lf_blocks2));
            else throw std::invalid_argument("lfactor: unknown --type " + lf_type);
            Json out = gamma_product_json(gp);
            if (!lf_eval.empty()) {
                hs::QComplex s(hs::parse_rat(lf_eval));
                out["abs_value_at_s"] = fmt(std::abs(hs::eval(gp, s)));
            }
            std::cout << hs::emit_table({out}, tfmt);
            return 0;
        }
        if (*geo) {
            Json out;
            if (*geo_vol) {
                double exact = hs::ball_volume(geo_n, geo_rho);
                double mc = hs::ball_volume_mc(geo_n, geo_rho, geo_samples, seed);
                out["closed"] = fmt(exact);
                out["monte_carlo"] = fmt(mc);
                out["rel_err"] = fmt(std::abs(mc - exact) / exact);
            } else if (*geo_int) {
                double exact = hs::gamma_integral(geo_p, geo_q, geo_s);
                double mc = hs::gamma_integral_mc(geo_p, geo_q, geo_s, geo_samples, seed);
                out["closed"] = fmt(exact);
                out["monte_carlo"] = fmt(mc);
                out["rel_err"] = fmt(std::abs(mc - exact) / exact);
            } else {
                hs::CMat Z = parse_matrix(geo_z);
                hs::SubspaceConfig cfg(static_cast<int>(Z.rows()), static_cast<int>(Z.cols()),
                                       geo_r);
                if (*geo_dist) {
                    hs::ABC v = hs::abc(Z, cfg);
                    out["A"] = fmt(v.A);
                    out["B"] = fmt(v.B);
                    out["C"] = fmt(v.C);
                    out["dist0"] = fmt(hs::dist0(Z));
                    out["dist_to_subspace"] = fmt(hs::dist_to_subspace(Z, cfg));
                } else if (*geo_levi) {
                    Json closed = Json::array(), fd = Json::array();
                    for (double v : hs::levi_logBA_eigenvalues(Z, cfg)) closed.push_back(fmt(v));
                    for (double v : hs::levi_fd_eigenvalues(Z, cfg)) fd.push_back(fmt(v));
                    out["closed"] = closed;
                    out["finite_difference"] = fd;
                } else {
                    hs::LambdaProfile lp = hs::lambda_profile(Z, cfg);
                    Json closed = Json::array(), fd = Json::array();
                    for (double v : hs::hessian_F_eigenvalues(lp.lambda, lp.F, cfg))
                        closed.push_back(fmt(v));
                    for (double v : hs::hessian_fd_eigenvalues(Z, cfg)) fd.push_back(fmt(v));
                    out["closed"] = closed;
                    out["finite_difference"] = fd;
                }
            }
            std::cout << hs::emit_table({out}, tfmt);
            return 0;
        }
        if (*sph) {
            if (sph_tmax <= 0)
                sph_tmax = 20.0 / std::min(sph_s, sph_n - sph_s) + 1;
            if (sph_step <= 0) sph_step = 1e-3 * sph_tmax;
            hs::RadialSolution sol = hs::radial_solve(sph_n, sph_s, sph_tmax, sph_step);
            std::vector<Json> rows;
            for (std::size_t i = 0; i < sol.grid.size(); i += 16) {
                Json r;
                r["t"] = fmt(sol.grid[i]);
                r["re"] = fmt(sol.values[i].real());
                r["im"] = fmt(sol.values[i].imag());
                rows.push_back(r);
            }
            std::cout << hs::emit_table(rows, hs::TableFormat::Csv);
            std::cout << "exponent," << fmt(hs::asymptotic_exponent(sol)) << "\n";
            return 0;
        }
        if (*ver) {
            char self[4096];
            ssize_t n = readlink("/proc/self/exe", self, sizeof(self) - 1);
            std::string self_path = (n > 0) ? std::string(self, n) : std::string(argv[0]);
            return run_verify(ver_suite, seed, self_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
