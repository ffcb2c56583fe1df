// Scalar radial spherical-function equation on H^n_C (trivial K-type):
//
//   F''(t) + (2 coth(2t) + 2(n-1) coth(t)) F'(t) = (s^2 - n^2) F(t),
//
// integrated from a series start near the singular origin, together with the
// frozen-coefficient model F'' + 2n F' + (n^2 - s^2) F = 0 (characteristic
// roots -n +- s) and the asymptotic decay-exponent fit.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace hyperspec {

struct RadialSolution {
    int n = 2;
    std::complex<double> s;
    std::vector<double> grid;                 // strictly increasing times
    std::vector<std::complex<double>> values; // F on the grid
    double t_max = 0;
};

// Characteristic roots -n +- s of the model equation.
inline std::pair<std::complex<double>, std::complex<double>>
model_exponents(int n, std::complex<double> s) {
    s = std::conj(s);
    return {std::complex<double>(-n, 0) + s, std::complex<double>(-n, 0) - s};
}

// Regular solution of the radial equation, normalized to F ~ 1 + a t^2 near
// the origin with a = (s^2 - n^2)/(4n); classical RK4 from t0 = step.
inline RadialSolution radial_solve(int n, std::complex<double> s, double t_max, double step) {
    if (n < 1) throw std::invalid_argument("radial_solve: n must be >= 1");
    if (!(step > 0) || step > 1e-3 * t_max)
        throw std::invalid_argument("radial_solve: need 0 < step <= 1e-3 * t_max");
    if (!(s.real() > 0) || !(s.real() < n))
        throw std::invalid_argument("radial_solve: need Re(s) in (0, n)");
    std::complex<double> sb = std::conj(s);
    std::complex<double> rhs = sb * sb - std::complex<double>(n * n, 0);

    auto deriv = [&](double t, std::complex<double> F, std::complex<double> G,
                     std::complex<double>& dF, std::complex<double>& dG) {
        double coef = 2.0 / std::tanh(2 * t) + 2.0 * (n - 1) / std::tanh(t);
        dF = G;
        dG = rhs * F - coef * G;
    };

    RadialSolution sol;
    sol.n = n;
    sol.s = s;
    sol.t_max = t_max;

    double t = step;
    std::complex<double> a = rhs / (4.0 * n);
    std::complex<double> F = 1.0 + a * t * t;
    std::complex<double> G = 2.0 * a * t;
    sol.grid.push_back(t);
    sol.values.push_back(F);
    while (t < t_max - step / 2) {
        // The drift coefficient behaves like (2n-1)/t near the origin; cap
        // the step there so RK4 stays in its stability region.
        double dt = std::min(step, t / (2 * n));
        if (t + dt > t_max) dt = t_max - t;
        std::complex<double> k1F, k1G, k2F, k2G, k3F, k3G, k4F, k4G;
        deriv(t, F, G, k1F, k1G);
        deriv(t + dt / 2, F + dt / 2 * k1F, G + dt / 2 * k1G, k2F, k2G);
        deriv(t + dt / 2, F + dt / 2 * k2F, G + dt / 2 * k2G, k3F, k3G);
        deriv(t + dt, F + dt * k3F, G + dt * k3G, k4F, k4G);
        F += dt / 6.0 * (k1F + 2.0 * k2F + 2.0 * k3F + k4F);
        G += dt / 6.0 * (k1G + 2.0 * k2G + 2.0 * k3G + k4G);
        t += dt;
        if (!std::isfinite(std::abs(F)))
            throw std::runtime_error("radial_solve: solution blew up");
        sol.grid.push_back(t);
        sol.values.push_back(F);
    }
    return sol;
}

// Least-squares slope of log|F| over the last third of the grid; converges to
// Re(s) - n when t_max >= 20 / min(Re s, n - Re s).
inline double asymptotic_exponent(const RadialSolution& sol) {
    double need = 20.0 / std::min(sol.s.real(), sol.n - sol.s.real());
    if (sol.t_max < need)
        throw std::invalid_argument("asymptotic_exponent: t_max too small for a stable fit");
    std::size_t from = sol.grid.size() - sol.grid.size() / 3;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double m = 0;
    for (std::size_t i = from; i < sol.grid.size(); ++i) {
        double x = sol.grid[i], y = std::log(std::abs(sol.values[i]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        m += 1;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// Integrates the frozen-coefficient model equation with the same scheme, for
// the consistency property test.
inline RadialSolution model_solve(int n, std::complex<double> s, double t_max, double step) {
    std::complex<double> sb = std::conj(s);
    std::complex<double> rhs = sb * sb - std::complex<double>(n * n, 0);
    RadialSolution sol;
    sol.n = n;
    sol.s = s;
    sol.t_max = t_max;
    double t = step;
    std::complex<double> F = 1.0, G = 0.0;
    auto deriv = [&](std::complex<double> Fv, std::complex<double> Gv,
                     std::complex<double>& dF, std::complex<double>& dG) {
        dF = Gv;
        dG = rhs * Fv - 2.0 * n * Gv;
    };
    sol.grid.push_back(t);
    sol.values.push_back(F);
    while (t < t_max - step / 2) {
        std::complex<double> k1F, k1G, k2F, k2G, k3F, k3G, k4F, k4G;
        deriv(F, G, k1F, k1G);
        deriv(F + step / 2 * k1F, G + step / 2 * k1G, k2F, k2G);
        deriv(F + step / 2 * k2F, G + step / 2 * k2G, k3F, k3G);
        deriv(F + step * k3F, G + step * k3G, k4F, k4G);
        F += step / 6.0 * (k1F + 2.0 * k2F + 2.0 * k3F + k4F);
        G += step / 6.0 * (k1G + 2.0 * k2G + 2.0 * k3G + k4G);
        t += step;
        sol.grid.push_back(t);
        sol.values.push_back(F);
    }
    return sol;
}

} // namespace hyperspec
