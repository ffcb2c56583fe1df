// Numerical engine for the bounded domains D_{p,q} = {Z : Z*Z < I_q} and the
// totally geodesic subdomains D_V = {Z : last r rows of Z vanish}:
//
//   * the U(p,q) action with its automorphy factors j, l,
//   * the invariant functions A, B and the exact distance functions,
//   * ball/tube volumes and the Gamma-product integration identity, each
//     paired with an independent Monte Carlo / quadrature oracle,
//   * closed-form Hessian and Levi eigenvalue spectra of the distance-type
//     functions with finite-difference oracles,
//   * the counting/Poincare-series bound evaluators.
//
// All randomness is drawn from the counter-based generator in rng.hpp through
// caller-supplied seeds.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace hyperspec {

using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using Cd = std::complex<double>;

struct SubspaceConfig {
    int p = 2;
    int q = 1;
    int r = 1; // V = span of the last r of the first p basis vectors

    SubspaceConfig(int pp, int qq, int rr) : p(pp), q(qq), r(rr) {
        if (p < 1 || q < 1 || r < 1 || r >= p)
            throw std::invalid_argument("SubspaceConfig: need 1 <= r < p, q >= 1");
    }
    int m() const { return std::min(r, q); }
};

// ---------------------------------------------------------------------------
// Domain membership and basic matrix helpers.

inline bool in_domain(const CMat& Z, double tol = 1e-12) {
    CMat H = CMat::Identity(Z.cols(), Z.cols()) - Z.adjoint() * Z;
    Eigen::SelfAdjointEigenSolver<CMat> es((H + H.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff() > -tol;
}

struct DomainPoint {
    CMat Z;

    explicit DomainPoint(CMat z) : Z(std::move(z)) {
        if (!in_domain(Z)) throw std::invalid_argument("DomainPoint: Z*Z < I violated");
    }
    int p() const { return static_cast<int>(Z.rows()); }
    int q() const { return static_cast<int>(Z.cols()); }
};

// Hermitian inverse square root via eigendecomposition (with symmetrization).
inline CMat inv_sqrt_herm(const CMat& H) {
    Eigen::SelfAdjointEigenSolver<CMat> es((H + H.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() <= 0)
        throw std::domain_error("inv_sqrt_herm: matrix not positive definite");
    Eigen::VectorXd d = es.eigenvalues().array().rsqrt();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

// ---------------------------------------------------------------------------
// Group elements and the fractional-linear action.

inline CMat upq_form(int p, int q) {
    CMat Q = CMat::Zero(p + q, p + q);
    Q.topLeftCorner(p, p).setIdentity();
    Q.bottomRightCorner(q, q) = -CMat::Identity(q, q);
    return Q;
}

struct GroupElement {
    CMat g; // (p+q) x (p+q)
    int p = 1;
    int q = 1;

    GroupElement(CMat mat, int pp, int qq) : g(std::move(mat)), p(pp), q(qq) {
        if (g.rows() != p + q || g.cols() != p + q)
            throw std::invalid_argument("GroupElement: size mismatch");
        CMat Q = upq_form(p, q);
        if ((g.adjoint() * Q * g - Q).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("GroupElement: g*Qg = Q violated");
    }
    CMat A() const { return g.topLeftCorner(p, p); }
    CMat B() const { return g.topRightCorner(p, q); }
    CMat C() const { return g.bottomLeftCorner(q, p); }
    CMat D() const { return g.bottomRightCorner(q, q); }

    static GroupElement identity(int p, int q) {
        return GroupElement(CMat::Identity(p + q, p + q), p, q);
    }
};

struct ActResult {
    CMat gZ; // p x q
    CMat j;  // q x q, = CZ + D
    CMat l;  // p x p, = A - (gZ)C
};

inline ActResult act(const GroupElement& g, const CMat& Z) {
    CMat j = g.C() * Z + g.D();
    Eigen::FullPivLU<CMat> lu(j);
    if (!lu.isInvertible())
        throw std::runtime_error("act: singular automorphy factor (inconsistent input)");
    CMat gZ = (g.A() * Z + g.B()) * lu.inverse();
    return ActResult{gZ, j, g.A() - gZ * g.C()};
}

// Transvection moving the origin to Z (an element of U(p,q)).
inline GroupElement transvection(const CMat& Z) {
    int p = static_cast<int>(Z.rows()), q = static_cast<int>(Z.cols());
    CMat s1 = inv_sqrt_herm(CMat::Identity(p, p) - Z * Z.adjoint());
    CMat s2 = inv_sqrt_herm(CMat::Identity(q, q) - Z.adjoint() * Z);
    CMat g(p + q, p + q);
    g.topLeftCorner(p, p) = s1;
    g.topRightCorner(p, q) = s1 * Z;
    g.bottomLeftCorner(q, p) = s2 * Z.adjoint();
    g.bottomRightCorner(q, q) = s2;
    return GroupElement(std::move(g), p, q);
}

// ---------------------------------------------------------------------------
// The invariant functions A, B, C and the distance functions.

struct ABC {
    double A = 1; // det(I_q - Z*Z)
    double B = 1; // same with the last r rows of Z removed
    double C = 0; // B - A
};

inline ABC abc(const CMat& Z, const SubspaceConfig& cfg) {
    if (Z.rows() != cfg.p || Z.cols() != cfg.q)
        throw std::invalid_argument("abc: size mismatch");
    CMat Z1 = Z.topRows(cfg.p - cfg.r);
    ABC out;
    out.A = (CMat::Identity(cfg.q, cfg.q) - Z.adjoint() * Z).determinant().real();
    out.B = (CMat::Identity(cfg.q, cfg.q) - Z1.adjoint() * Z1).determinant().real();
    out.C = out.B - out.A;
    return out;
}

// Geodesic distance from the origin: d^2 = sum artanh(sigma_i)^2 over the
// singular values of Z.
inline double dist0(const CMat& Z) {
    Eigen::JacobiSVD<CMat> svd(Z);
    double acc = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        double s = svd.singularValues()(i);
        if (s >= 1) throw std::domain_error("dist0: point outside the domain");
        acc += std::atanh(s) * std::atanh(s);
    }
    return std::sqrt(acc);
}

// Geodesic distance to D_V: move Z_1 to 0 by an element of G_V, then measure
// the transported second block W = Z_2 (I_q - Z_1*Z_1)^{-1/2} from the origin.
inline double dist_to_subspace(const CMat& Z, const SubspaceConfig& cfg) {
    if (Z.rows() != cfg.p || Z.cols() != cfg.q)
        throw std::invalid_argument("dist_to_subspace: size mismatch");
    CMat Z1 = Z.topRows(cfg.p - cfg.r);
    CMat Z2 = Z.bottomRows(cfg.r);
    CMat W = Z2 * inv_sqrt_herm(CMat::Identity(cfg.q, cfg.q) - Z1.adjoint() * Z1);
    return dist0(W);
}

// ---------------------------------------------------------------------------
// Volumes and the Gamma integration identity.

// vol B(rho) = (2^n sigma_{2n-1} / 2n) sinh^{2n}(rho) on H^n_C, with
// sigma_{2n-1} = 2 pi^n / (n-1)! the Euclidean area of the unit (2n-1)-sphere.
inline double ball_volume(int n, double rho) {
    if (n < 1 || rho <= 0) throw std::invalid_argument("ball_volume: need n >= 1, rho > 0");
    double fact = 1;
    for (int i = 2; i < n; ++i) fact *= i;
    double sigma = 2 * std::pow(M_PI, n) / fact;
    return std::pow(2.0, n) * sigma / (2 * n) * std::pow(std::sinh(rho), 2 * n);
}

// Monte Carlo oracle: the invariant volume element on the ball model is
// 2^n (1-|x|^2)^{-(n+1)} times Lebesgue measure on R^{2n}, and the metric
// ball of radius rho is the Euclidean ball |x| <= tanh(rho).
inline double ball_volume_mc(int n, double rho, std::uint64_t samples, std::uint64_t seed) {
    double R = std::tanh(rho);
    Rng rng(seed);
    std::vector<double> x(2 * n);
    double acc = 0;
    for (std::uint64_t it = 0; it < samples; ++it) {
        double r2 = 0;
        for (int i = 0; i < 2 * n; ++i) {
            double v = R * rng.sym();
            r2 += v * v;
        }
        if (r2 < R * R) {
            double w = 1 - r2, d = 1;
            for (int k = 0; k <= n; ++k) d *= w;
            acc += 1 / d;
        }
    }
    double box = std::pow(2 * R, 2 * n);
    return std::pow(2.0, n) * box * acc / static_cast<double>(samples);
}

// Tube volume growth around D_V.  For r = 1 the exact radial density shape
// sinh(2t) sinh^{2(q-1)}(t) cosh^{2(p-1)}(t); in general the upper bound
// c (1 + t^{pq}) e^{2(p+q-1) sqrt(m) t}.
inline double tube_growth_r1(int p, int q, double t) {
    if (p < 2 || q < 1) throw std::invalid_argument("tube_growth_r1: need p >= 2, q >= 1");
    return std::sinh(2 * t) * std::pow(std::sinh(t), 2 * (q - 1)) *
           std::pow(std::cosh(t), 2 * (p - 1));
}

inline double tube_growth_bound(const SubspaceConfig& cfg, double t, double c = 1.0) {
    double m = cfg.m();
    return c * (1 + std::pow(t, cfg.p * cfg.q)) *
           std::exp(2 * (cfg.p + cfg.q - 1) * std::sqrt(m) * t);
}

// | integral over D_{p,q} of A^s {dZ} | = (2 pi)^{pq} prod_{i=1}^p
// Gamma(s+i)/Gamma(s+q+i), with {dZ} = 2^{pq} Lebesgue.
inline double gamma_integral(int p, int q, double s) {
    if (s <= -1) throw std::invalid_argument("gamma_integral: need Re(s) > -1");
    double logv = p * q * std::log(2 * M_PI);
    for (int i = 1; i <= p; ++i) logv += std::lgamma(s + i) - std::lgamma(s + q + i);
    return std::exp(logv);
}

namespace detail {

// det(I_q - Z*Z) for a sample stored as interleaved re/im entries (row-major
// p x q), with fast paths for the shapes used by the oracle suite; returns a
// negative value when the sample is outside the domain.
inline double det_one_minus_ztz(const double* x, int p, int q) {
    if (p == 1 || q == 1) {
        double n2 = 0;
        for (int i = 0; i < 2 * p * q; ++i) n2 += x[i] * x[i];
        return 1 - n2;
    }
    if (q == 2) {
        // M = I_2 - Z*Z, Hermitian 2x2.
        double m00 = 1, m11 = 1;
        Cd m01 = 0;
        for (int i = 0; i < p; ++i) {
            Cd zi0(x[4 * i], x[4 * i + 1]), zi1(x[4 * i + 2], x[4 * i + 3]);
            m00 -= std::norm(zi0);
            m11 -= std::norm(zi1);
            m01 -= std::conj(zi0) * zi1;
        }
        if (m00 <= 0 || m11 <= 0) return -1;
        return m00 * m11 - std::norm(m01);
    }
    CMat Z(p, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) Z(i, j) = Cd(x[2 * (i * q + j)], x[2 * (i * q + j) + 1]);
    CMat H = CMat::Identity(q, q) - Z.adjoint() * Z;
    Eigen::SelfAdjointEigenSolver<CMat> es((H + H.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() <= 0) return -1;
    return es.eigenvalues().prod();
}

} // namespace detail

// Monte Carlo oracle for gamma_integral: A^s against 2^{pq} x Lebesgue over
// the unit-box sample space, rejecting samples outside the domain.  For q = 2
// membership is equivalent to both diagonal minors and the determinant of
// I - Z*Z being positive, which the fast path checks.
inline double gamma_integral_mc(int p, int q, double s, std::uint64_t samples,
                                std::uint64_t seed) {
    Rng rng(seed);
    int dim = 2 * p * q;
    std::vector<double> x(dim);
    double acc = 0;
    for (std::uint64_t it = 0; it < samples; ++it) {
        for (int i = 0; i < dim; ++i) x[i] = rng.sym();
        double a = detail::det_one_minus_ztz(x.data(), p, q);
        if (a > 0) acc += (s == 0) ? 1.0 : (s == 1 ? a : std::pow(a, s));
    }
    // box volume 2^{2pq} times the measure factor 2^{pq}
    return std::pow(2.0, 3 * p * q) * acc / static_cast<double>(samples);
}

// ---------------------------------------------------------------------------
// Hessian of F = dist(., D_V): closed-form eigenvalue multiset.

// Direction profile of the normal geodesic through Z: unit vector lambda
// (length max(r,q), descending, zero past min(r,q)) and the distance F.
struct LambdaProfile {
    std::vector<double> lambda;
    double F = 0;
};

inline LambdaProfile lambda_profile(const CMat& Z, const SubspaceConfig& cfg) {
    CMat Z1 = Z.topRows(cfg.p - cfg.r);
    CMat Z2 = Z.bottomRows(cfg.r);
    CMat W = Z2 * inv_sqrt_herm(CMat::Identity(cfg.q, cfg.q) - Z1.adjoint() * Z1);
    Eigen::JacobiSVD<CMat> svd(W);
    LambdaProfile out;
    double f2 = 0;
    std::vector<double> a;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        double v = std::atanh(svd.singularValues()(i));
        a.push_back(v);
        f2 += v * v;
    }
    out.F = std::sqrt(f2);
    if (out.F == 0) throw std::domain_error("lambda_profile: Z lies on D_V");
    int l = std::max(cfg.r, cfg.q);
    out.lambda.assign(l, 0.0);
    for (std::size_t i = 0; i < a.size() && i < static_cast<std::size_t>(l); ++i)
        out.lambda[i] = a[i] / out.F;
    std::sort(out.lambda.begin(), out.lambda.end(), std::greater<double>());
    return out;
}

// The 2pq Hessian eigenvalues of F at a point with direction profile lambda
// and distance F: 2(p-r) tangential values lambda_b tanh(lambda_b F) for each
// b = 1..q, plus the normal values n_{ij}, m_{ij}, 1 <= i <= r, 1 <= j <= q.
inline std::vector<double> hessian_F_eigenvalues(const std::vector<double>& lambda, double F,
                                                 const SubspaceConfig& cfg) {
    int l = std::max(cfg.r, cfg.q);
    if (static_cast<int>(lambda.size()) != l)
        throw std::invalid_argument("hessian_F_eigenvalues: lambda must have length max(r,q)");
    double s2 = 0;
    for (int i = 0; i < l; ++i) {
        if (lambda[i] < 0 || (i + 1 < l && lambda[i] < lambda[i + 1]))
            throw std::invalid_argument("hessian_F_eigenvalues: lambda must be descending >= 0");
        if (i >= cfg.m() && lambda[i] != 0)
            throw std::invalid_argument("hessian_F_eigenvalues: lambda_i = 0 required past min(r,q)");
        s2 += lambda[i] * lambda[i];
    }
    if (std::abs(s2 - 1) > 1e-9)
        throw std::invalid_argument("hessian_F_eigenvalues: lambda must be a unit vector");
    if (F <= 0) throw std::invalid_argument("hessian_F_eigenvalues: F must be positive");

    std::vector<double> out;
    for (int b = 0; b < cfg.q; ++b) {
        double v = lambda[b] * std::tanh(lambda[b] * F);
        for (int k = 0; k < 2 * (cfg.p - cfg.r); ++k) out.push_back(v);
    }
    for (int i = 0; i < cfg.r; ++i)
        for (int j = 0; j < cfg.q; ++j) {
            double sum = lambda[i] + lambda[j];
            out.push_back(sum != 0 ? sum * std::cosh(sum * F) / std::sinh(sum * F) : 1 / F);
            double dif = std::abs(lambda[i] - lambda[j]);
            if (i == 0 && j == 0)
                out.push_back(0.0);
            else
                out.push_back(dif != 0 ? dif * std::cosh(dif * F) / std::sinh(dif * F) : 1 / F);
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline CMat coords_to_matrix(const std::vector<double>& x, int p, int q) {
    CMat Z(p, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) Z(i, j) = Cd(x[2 * (i * q + j)], x[2 * (i * q + j) + 1]);
    return Z;
}

} // namespace detail

// Image of a tangent vector at the origin under the Riemannian exponential:
// X = U Sigma V* maps to U tanh(Sigma) V*.
inline CMat exp0(const CMat& X) {
    Eigen::JacobiSVD<CMat> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd t = svd.singularValues().array().tanh();
    return svd.matrixU() * t.asDiagonal() * svd.matrixV().adjoint();
}

// Finite-difference oracle: Euclidean Hessian at 0 of X -> F(g exp_0(X)) with
// g the transvection sending 0 to Z.  Since g is an isometry and the metric
// at the origin is Euclidean in these coordinates, this is the Riemannian
// Hessian in an orthonormal frame.
inline std::vector<double> hessian_fd_eigenvalues(const CMat& Z, const SubspaceConfig& cfg,
                                                  double h = 1e-3) {
    GroupElement g = transvection(Z);
    int dim = 2 * cfg.p * cfg.q;
    auto f = [&](const std::vector<double>& x) {
        return dist_to_subspace(act(g, exp0(detail::coords_to_matrix(x, cfg.p, cfg.q))).gZ, cfg);
    };
    std::vector<double> x0(dim, 0.0);
    double f0 = f(x0);
    RMat H(dim, dim);
    for (int a = 0; a < dim; ++a) {
        for (int b = a; b < dim; ++b) {
            std::vector<double> x = x0;
            double v;
            if (a == b) {
                x[a] = h;  double fp = f(x);
                x[a] = -h; double fm = f(x);
                v = (fp - 2 * f0 + fm) / (h * h);
            } else {
                x[a] = h;  x[b] = h;  double fpp = f(x);
                x[b] = -h;            double fpm = f(x);
                x[a] = -h; x[b] = h;  double fmp = f(x);
                x[b] = -h;            double fmm = f(x);
                v = (fpp - fpm - fmp + fmm) / (4 * h * h);
            }
            H(a, b) = v;
            H(b, a) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(H);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Levi form of log(B/A) and the invariant metric matrix.

// Matrix of the invariant Hermitian metric in the coordinates Z_11..Z_1q,
// Z_21..: kron((I_p - conj(Z) Z^T)^{-1}, (I_q - Z* Z)^{-1}).
inline CMat metric_matrix(const CMat& Z) {
    int p = static_cast<int>(Z.rows()), q = static_cast<int>(Z.cols());
    CMat L = (CMat::Identity(p, p) - Z.conjugate() * Z.transpose()).inverse();
    CMat R = (CMat::Identity(q, q) - Z.adjoint() * Z).inverse();
    CMat G(p * q, p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            for (int k = 0; k < p; ++k)
                for (int l = 0; l < q; ++l) G(i * q + j, k * q + l) = L(i, k) * R(j, l);
    return G;
}

// Closed-form eigenvalues of the Levi form of log(B/A) in a metric-orthonormal
// frame: 1 with multiplicity qr, and each eigenvalue of
// (I - Z_1*Z_1)^{-1/2} Z_2*Z_2 (I - Z_1*Z_1)^{-1/2} with multiplicity p-r.
inline std::vector<double> levi_logBA_eigenvalues(const CMat& Z, const SubspaceConfig& cfg) {
    CMat Z1 = Z.topRows(cfg.p - cfg.r);
    CMat Z2 = Z.bottomRows(cfg.r);
    CMat S = inv_sqrt_herm(CMat::Identity(cfg.q, cfg.q) - Z1.adjoint() * Z1);
    CMat WtW = S * Z2.adjoint() * Z2 * S;
    Eigen::SelfAdjointEigenSolver<CMat> es((WtW + WtW.adjoint()) / 2.0);
    std::vector<double> out;
    for (int i = 0; i < cfg.q * cfg.r; ++i) out.push_back(1.0);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        for (int k = 0; k < cfg.p - cfg.r; ++k) out.push_back(es.eigenvalues()(i));
    std::sort(out.begin(), out.end());
    return out;
}

// Finite-difference oracle for the Levi spectrum: Wirtinger mixed Hessian
// L_{ab} = d^2 phi / dZ_a dconj(Z_b) of phi = log(B/A) assembled from real
// central differences, then the generalized eigenproblem L v = mu G v against
// the metric matrix.
inline std::vector<double> levi_fd_eigenvalues(const CMat& Z, const SubspaceConfig& cfg,
                                               double h = 1e-4) {
    int p = cfg.p, q = cfg.q, dim = 2 * p * q;
    auto f = [&](const std::vector<double>& x) {
        ABC v = abc(detail::coords_to_matrix(x, p, q), cfg);
        return std::log(v.B / v.A);
    };
    std::vector<double> x0(dim);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            x0[2 * (i * q + j)] = Z(i, j).real();
            x0[2 * (i * q + j) + 1] = Z(i, j).imag();
        }
    double f0 = f(x0);
    RMat H(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            std::vector<double> x = x0;
            double v;
            if (a == b) {
                x[a] += h;     double fp = f(x);
                x[a] -= 2 * h; double fm = f(x);
                v = (fp - 2 * f0 + fm) / (h * h);
            } else {
                x[a] += h; x[b] += h;     double fpp = f(x);
                x[b] -= 2 * h;            double fpm = f(x);
                x[a] -= 2 * h; x[b] += 2 * h; double fmp = f(x);
                x[b] -= 2 * h;            double fmm = f(x);
                v = (fpp - fpm - fmp + fmm) / (4 * h * h);
            }
            H(a, b) = v;
            H(b, a) = v;
        }
    // L_{ab} = ((H_xx + H_yy) + i (H_xy - H_yx))/4 in Wirtinger coordinates.
    CMat L(p * q, p * q);
    for (int a = 0; a < p * q; ++a)
        for (int b = 0; b < p * q; ++b)
            L(a, b) = Cd(H(2 * a, 2 * b) + H(2 * a + 1, 2 * b + 1),
                         H(2 * a, 2 * b + 1) - H(2 * a + 1, 2 * b)) / 4.0;
    L = (L + L.adjoint()) / 2.0;
    Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(L, metric_matrix(Z));
    std::vector<double> out(ges.eigenvalues().data(), ges.eigenvalues().data() + p * q);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Norm comparison and counting bounds.

// Pointwise comparison multipliers between the invariant and Euclidean norms
// on degree-l forms: A^l |.|_0 <= |.| <= |.|_0.
inline std::pair<double, double> norm_comparison(int l, const CMat& Z) {
    int pq = static_cast<int>(Z.rows() * Z.cols());
    if (l < 0 || l > 2 * pq) throw std::invalid_argument("norm_comparison: degree out of range");
    double A = (CMat::Identity(Z.cols(), Z.cols()) - Z.adjoint() * Z).determinant().real();
    return {std::pow(A, l), 1.0};
}

inline double poincare_exponent(const SubspaceConfig& cfg) {
    return (cfg.p + cfg.q - 1) * std::sqrt(static_cast<double>(cfg.m()));
}

// c1 * integral_0^{t+1} (1 + u^{2pq}) e^{2(p+q-1) sqrt(m) u} du by Simpson
// quadrature.
inline double counting_bound(const SubspaceConfig& cfg, double t, double c1 = 1.0) {
    double a = 2 * poincare_exponent(cfg);
    double top = t + 1;
    int steps = 2000;
    double hh = top / steps;
    auto f = [&](double u) { return (1 + std::pow(u, 2 * cfg.p * cfg.q)) * std::exp(a * u); };
    double acc = f(0) + f(top);
    for (int i = 1; i < steps; ++i) acc += f(i * hh) * (i % 2 ? 4.0 : 2.0);
    return c1 * acc * hh / 3.0;
}

// ---------------------------------------------------------------------------
// Random generators for the invariance suites.

inline CMat random_complex_gaussian(int rows, int cols, Rng& rng) {
    CMat M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = Cd(rng.normal(), rng.normal());
    return M;
}

inline CMat random_unitary(int k, Rng& rng) {
    Eigen::HouseholderQR<CMat> qr(random_complex_gaussian(k, k, rng));
    CMat Q = qr.householderQ();
    CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (int i = 0; i < k; ++i) Q.col(i) *= R(i, i) / std::abs(R(i, i));
    return Q;
}

// Random point with prescribed rank and singular values bounded by max_sigma.
inline CMat random_rank_m_point(int p, int q, int m, Rng& rng, double max_sigma = 0.9) {
    if (m < 0 || m > std::min(p, q))
        throw std::invalid_argument("random_rank_m_point: rank out of range");
    CMat U = random_unitary(p, rng);
    CMat V = random_unitary(q, rng);
    CMat S = CMat::Zero(p, q);
    for (int i = 0; i < m; ++i) S(i, i) = rng.uniform(0.05, max_sigma);
    return U * S * V.adjoint();
}

inline CMat random_domain_point(int p, int q, Rng& rng, double max_sigma = 0.9) {
    return random_rank_m_point(p, q, std::min(p, q), rng, max_sigma);
}

// Random element of U(p,q) as exp of a Lie algebra element
// [[iH1, B], [B*, iH2]] with H1, H2 Hermitian.
inline GroupElement random_group_element(int p, int q, Rng& rng, double scale = 0.5) {
    CMat H1 = random_complex_gaussian(p, p, rng);
    CMat H2 = random_complex_gaussian(q, q, rng);
    CMat B = random_complex_gaussian(p, q, rng);
    CMat X = CMat::Zero(p + q, p + q);
    X.topLeftCorner(p, p) = (H1 - H1.adjoint()) / 2.0;
    X.bottomRightCorner(q, q) = (H2 - H2.adjoint()) / 2.0;
    X.topRightCorner(p, q) = B;
    X.bottomLeftCorner(q, p) = B.adjoint();
    X *= scale;
    return GroupElement(X.exp(), p, q);
}

// Random element of G_V = U(p-r,q) x U(r), embedded block-diagonally with the
// U(r) factor acting on the last r of the first p coordinates.
inline GroupElement random_gv_element(const SubspaceConfig& cfg, Rng& rng, double scale = 0.5) {
    GroupElement h = random_group_element(cfg.p - cfg.r, cfg.q, rng, scale);
    CMat u = random_unitary(cfg.r, rng);
    int p = cfg.p, q = cfg.q, r = cfg.r;
    CMat g = CMat::Zero(p + q, p + q);
    g.topLeftCorner(p - r, p - r) = h.A();
    g.block(0, p, p - r, q) = h.B();
    g.block(p - r, p - r, r, r) = u;
    g.block(p, 0, q, p - r) = h.C();
    g.bottomRightCorner(q, q) = h.D();
    return GroupElement(std::move(g), p, q);
}

} // namespace hyperspec
