#include "brillouin/analytic.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "brillouin/dynamics.hpp"

namespace brillouin {

double steady_state_limit(const CouplingParams& p) {
    validate(p);
    const double sg = p.Gamma + p.gamma;
    const double d1sq = p.delta1 * p.delta1;
    const double num = 4.0 * p.g * p.g * sg + p.gamma * sg * sg + 4.0 * p.gamma * d1sq;
    const double den =
        4.0 * p.g * p.g * sg + p.gamma * p.Gamma * sg + 4.0 * p.gamma * p.Gamma * d1sq / sg;
    return num / den * p.Gamma / sg * p.n_th;
}

AnalyticCoefficients analytic_coefficients(const CouplingParams& p) {
    AnalyticCoefficients c;
    const double g2 = p.g * p.g;
    const double sg = p.Gamma + p.gamma;
    const double dg = p.Gamma - p.gamma;
    const double d1sq = p.delta1 * p.delta1;

    const double s = 8.0 * g2 + 2.0 * d1sq - 0.5 * dg * dg;
    c.Upsilon = s * s + 4.0 * dg * dg * d1sq;
    const double root = std::sqrt(c.Upsilon);
    c.Omega = 0.5 * std::sqrt(std::max(root + s, 0.0));
    c.Gamma0 = 0.5 * std::sqrt(std::max(root - s, 0.0));
    c.Nb_ss = steady_state_limit(p);

    const double om2 = c.Omega * c.Omega;
    const double g02 = c.Gamma0 * c.Gamma0;
    const double p2 = sg * sg + 4.0 * om2;
    const double u = 16.0 * g2 * p.gamma - sg * p2;
    const double denom = 4.0 * (om2 + g02);

    c.sum_c12 = (-(8.0 * g2 - sg * sg - 4.0 * om2) * p.n_th - p2 * c.Nb_ss) / denom;
    c.pole_c12 = (u * p.n_th + sg * p2 * c.Nb_ss) / (2.0 * denom);
    c.C3 = ((8.0 * g2 + 4.0 * g02 - sg * sg) * p.n_th + (sg * sg - 4.0 * g02) * c.Nb_ss) / denom;
    c.C4 = ((16.0 * g2 * p.gamma + 4.0 * sg * g02 - sg * sg * sg) * p.n_th +
            (sg * sg - 4.0 * g02) * sg * c.Nb_ss) /
           (2.0 * c.Omega * denom);

    // As-printed C1/C2 (may blow up at the degenerate point Gamma0 -> 0).
    if (c.Gamma0 > 0.0) {
        c.C1 = 0.5 * (c.sum_c12 + c.pole_c12 / c.Gamma0);
        c.C2 = 0.5 * (c.sum_c12 - c.pole_c12 / c.Gamma0);
    } else {
        c.C1 = c.C2 = 0.5 * c.sum_c12;
    }

    const double omr2 = 4.0 * g2 + d1sq - 0.25 * dg * dg;
    c.Omega_reduced = std::sqrt(std::max(omr2, 0.0));
    c.Ct1 = -(2.0 * dg * g2 - p.gamma * (d1sq + p.gamma * p.Gamma)) / (sg * omr2) * p.n_th;
    c.Ct2 = (2.0 * g2 - p.gamma * sg / 4.0) / omr2 * p.n_th;
    c.Ct3 = p.g > 0.0
                ? (p.gamma * p.g - p.gamma * sg * sg / (16.0 * p.g)) / omr2 * p.n_th
                : 0.0;
    return c;
}

namespace {

double sinhc(double x) {
    if (std::abs(x) < 1e-6) return 1.0 + x * x / 6.0;
    return std::sinh(x) / x;
}

}  // namespace

double analytic_nb_full(const CouplingParams& p, double t) {
    validate(p);
    const AnalyticCoefficients c = analytic_coefficients(p);
    const double beta = 0.5 * (p.gamma + p.Gamma);
    const double x = c.Gamma0 * t;
    // C1 e^{-(beta+G0)t} + C2 e^{-(beta-G0)t}
    //   = e^{-beta t} (sum cosh(G0 t) - (pole/G0) sinh(G0 t)); sinh/G0 is
    // evaluated as t*sinhc(G0 t) so the degenerate limit is exact.
    const double nonosc = c.sum_c12 * std::cosh(x) - c.pole_c12 * t * sinhc(x);
    return std::exp(-beta * t) *
               (nonosc + c.C3 * std::cos(c.Omega * t) + c.C4 * std::sin(c.Omega * t)) +
           c.Nb_ss;
}

double analytic_nb_reduced(const CouplingParams& p, double t) {
    validate(p);
    const AnalyticCoefficients c = analytic_coefficients(p);
    const double beta = 0.5 * (p.gamma + p.Gamma);
    const double e = std::exp(-beta * t);
    return c.Ct1 * e + c.Ct2 * e * std::cos(c.Omega_reduced * t) +
           c.Ct3 * e * std::sin(c.Omega_reduced * t) + p.Gamma / (p.Gamma + p.gamma) * p.n_th;
}

RabiMode rabi_frequency_numeric(const CouplingParams& p) {
    validate(p);
    const DriftMatrix drift = DriftMatrix::build(p, p.g);
    Eigen::Matrix4d a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = drift.a[i][j];
    Eigen::EigenSolver<Eigen::Matrix4d> solver(a, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("drift eigenvalue solver failed to converge");
    RabiMode mode;
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
        const auto ev = solver.eigenvalues()[i];
        if (ev.imag() > best) {
            best = ev.imag();
            mode.omega = ev.imag();
            mode.decay = -ev.real();
        }
    }
    if (mode.omega < 0.0) mode.omega = 0.0;
    return mode;
}

double rabi_omega_main_text(const CouplingParams& p) {
    const double v = 4.0 * p.g * p.g + 2.0 * p.delta1 * p.delta1 -
                     0.25 * (p.Gamma - p.gamma) * (p.Gamma - p.gamma);
    return std::sqrt(std::max(v, 0.0));
}

double rabi_omega_appendix(const CouplingParams& p) {
    const double v = 4.0 * p.g * p.g + p.delta1 * p.delta1 -
                     0.25 * (p.Gamma - p.gamma) * (p.Gamma - p.gamma);
    return std::sqrt(std::max(v, 0.0));
}

double instantaneous_limit(const CouplingParams& p) {
    validate(p);
    if (p.g <= 0.0) throw InvalidParams("instantaneous limit requires g > 0");
    return std::numbers::pi * p.Gamma * p.n_th / (4.0 * p.g);
}

double upper_limit(const CouplingParams& p) {
    validate(p);
    if (p.g <= 0.0) throw InvalidParams("upper limit requires g > 0");
    return (1.0 + std::numbers::pi) * p.Gamma * p.n_th / (4.0 * p.g);
}

}  // namespace brillouin
