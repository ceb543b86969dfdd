#include "brillouin/kernels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace brillouin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Scales {
    double alpha;  // sqrt(g^2 + gamma*Gamma/4), integrand peak scale
    double beta;   // (gamma+Gamma)/2
    double sigma;  // delta1 + delta2
    double d;      // (gamma*delta2 + Gamma*delta1)/2
    double a2md;   // alpha^2 - delta1*delta2
};

Scales scales(const CouplingParams& p) {
    Scales s;
    s.alpha = std::sqrt(p.g * p.g + p.gamma * p.Gamma / 4.0);
    s.beta = 0.5 * (p.gamma + p.Gamma);
    s.sigma = p.delta1 + p.delta2;
    s.d = 0.5 * (p.gamma * p.delta2 + p.Gamma * p.delta1);
    s.a2md = s.alpha * s.alpha - p.delta1 * p.delta2;
    return s;
}

// Lambda2(w) = alpha^2 - (w+d1)(w+d2) + i(beta*w + d); complex quadratic with
// leading coefficient -1.
Complex lambda2(const CouplingParams& p, double w) {
    const Scales s = scales(p);
    return Complex(s.a2md - w * (w + s.sigma), s.beta * w + s.d);
}

// Roots of Lambda2; Lambda1(w) = |Lambda2(w)|^2 on the real axis factors as
// prod (w - root_i) over these two roots and their conjugates.
std::array<Complex, 2> lambda2_roots(const CouplingParams& p) {
    const Scales s = scales(p);
    // w^2 + (sigma - i beta) w - (a2md + i d) = 0
    const Complex b(s.sigma, -s.beta);
    const Complex c(-s.a2md, -s.d);
    const Complex disc = std::sqrt(b * b - 4.0 * c);
    return {0.5 * (-b + disc), 0.5 * (-b - disc)};
}

std::array<Complex, 4> lambda1_roots(const CouplingParams& p) {
    const auto r = lambda2_roots(p);
    return {r[0], r[1], std::conj(r[0]), std::conj(r[1])};
}

bool nearly_degenerate(const std::array<Complex, 4>& roots) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-8 * std::max(std::abs(roots[i]), 1.0))
                return true;
    return false;
}

// Contour integral over the real line of N(w)/prod(w - root_i), closed in the
// upper half-plane. Requires exactly two roots strictly above the axis.
Complex residue_integral(const std::array<Complex, 4>& roots,
                         const std::function<Complex(Complex)>& numerator) {
    int upper = 0;
    for (const auto& r : roots)
        if (r.imag() > 0.0) ++upper;
    if (upper != 2)
        throw std::runtime_error("kernel quartic does not have two upper-half-plane roots");
    Complex sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (roots[i].imag() <= 0.0) continue;
        Complex denom = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != i) denom *= roots[i] - roots[j];
        sum += numerator(roots[i]) / denom;
    }
    return Complex(0.0, kTwoPi) * sum;
}

// --- adaptive Gauss-Kronrod 15(7) quadrature --------------------------------

constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GK15Result {
    double value;
    double error;
};

GK15Result gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * kKronrodNodes[i];
        const double fv = (i == 7) ? f(c) : f(c - x) + f(c + x);
        kron += kKronrodWeights[i] * fv;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fv;
    }
    return {kron * h, std::abs(kron - gauss) * h};
}

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int depth = 0) {
    const GK15Result r = gk15(f, a, b);
    if (r.error <= abs_tol || depth >= 48) return r.value;
    const double c = 0.5 * (a + b);
    return adaptive_quadrature(f, a, c, 0.5 * abs_tol, depth + 1) +
           adaptive_quadrature(f, c, b, 0.5 * abs_tol, depth + 1);
}

// Integrate f over the whole real line via the w = scale*tan(u) substitution.
double integrate_real_line(const std::function<double(double)>& f, double scale,
                           double abs_tol) {
    auto mapped = [&](double u) {
        const double cu = std::cos(u);
        const double w = scale * std::tan(u);
        return f(w) * scale / (cu * cu);
    };
    const double half = 0.5 * std::numbers::pi;
    const double eps = 1e-12;
    return adaptive_quadrature(mapped, -half + eps, half - eps, abs_tol);
}

double lambda1(const CouplingParams& p, double w) { return std::norm(lambda2(p, w)); }

double drive_numerator(const CouplingParams& p, double w) {
    const Scales s = scales(p);
    const double shifted = w + p.delta1;
    return p.gamma * s.alpha * s.alpha + p.Gamma * shifted * shifted;
}

// Core integrals shared by the backward and forward kernels:
//   I1 = int N(w)/Lambda1 dw  (real),  I2 = int dw/Lambda2  (complex).
double integral_i1_residue(const CouplingParams& p, KernelDiagnostics* diag);

double integral_i1_quadrature(const CouplingParams& p) {
    const Scales s = scales(p);
    const double scale = std::max(s.alpha, s.beta);
    // Peak height ~ gamma*alpha^2 / (beta*alpha)^2-ish; tolerance pinned to the
    // dimensionless 2*pi target instead.
    return integrate_real_line([&](double w) { return drive_numerator(p, w) / lambda1(p, w); },
                               scale, 1e-10 * kTwoPi);
}

double integral_i1_residue(const CouplingParams& p, KernelDiagnostics* diag) {
    const auto roots = lambda1_roots(p);
    if (nearly_degenerate(roots)) {
        if (diag) diag->quadrature_fallback = true;
        return integral_i1_quadrature(p);
    }
    const Scales s = scales(p);
    const Complex value = residue_integral(roots, [&](Complex w) {
        const Complex shifted = w + p.delta1;
        return Complex(p.gamma * s.alpha * s.alpha, 0.0) + p.Gamma * shifted * shifted;
    });
    return value.real();
}

Complex integral_i2_residue(const CouplingParams& p, KernelDiagnostics* diag);

Complex integral_i2_quadrature(const CouplingParams& p) {
    const Scales s = scales(p);
    const double scale = std::max(s.alpha, s.beta);
    const double tol = 1e-10 * kTwoPi / std::max(s.alpha, 1e-300);
    const double re = integrate_real_line(
        [&](double w) { return (1.0 / lambda2(p, w)).real(); }, scale, tol);
    const double im = integrate_real_line(
        [&](double w) { return (1.0 / lambda2(p, w)).imag(); }, scale, tol);
    return {re, im};
}

Complex integral_i2_residue(const CouplingParams& p, KernelDiagnostics* diag) {
    const auto r = lambda2_roots(p);
    if (std::abs(r[0] - r[1]) < 1e-8 * std::max(std::abs(r[0]), 1.0)) {
        if (diag) diag->quadrature_fallback = true;
        return integral_i2_quadrature(p);
    }
    // Lambda2 = -(w - r0)(w - r1); close the contour above.
    Complex sum = 0.0;
    if (r[0].imag() > 0.0) sum += -1.0 / (r[0] - r[1]);
    if (r[1].imag() > 0.0) sum += -1.0 / (r[1] - r[0]);
    return Complex(0.0, kTwoPi) * sum;
}

}  // namespace

QuarticRoots normalized_quartic_roots(const CouplingParams& p) {
    validate(p);
    QuarticRoots q;
    q.alpha = std::sqrt(p.g * p.g + p.gamma * p.Gamma / 4.0);
    q.beta = 0.5 * (p.gamma + p.Gamma);
    q.eta1 = 1.0 - q.beta * q.beta / (2.0 * q.alpha * q.alpha);
    q.eta2 = p.delta1 / q.alpha;

    const Complex inner(0.5 * (1.0 + q.eta1) + 0.25 * q.eta2 * q.eta2,
                        -q.eta2 * std::sqrt(0.5 * (1.0 - q.eta1)));
    q.amplitude = std::abs(inner);
    q.theta = std::arg(inner);

    // Companion matrix of w^4 - 2 eta2 w^3 + (eta2^2 - 2 eta1) w^2 + 2 eta2 w + 1.
    Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
    companion(0, 3) = -1.0;
    companion(1, 3) = -2.0 * q.eta2;
    companion(2, 3) = -(q.eta2 * q.eta2 - 2.0 * q.eta1);
    companion(3, 3) = 2.0 * q.eta2;
    companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
    Eigen::EigenSolver<Eigen::Matrix4d> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("quartic companion eigenvalue solve failed");
    for (int i = 0; i < 4; ++i) q.lambda[i] = solver.eigenvalues()[i];
    return q;
}

ResidueCoefficients normalized_residues(const CouplingParams& p) {
    const QuarticRoots q = normalized_quartic_roots(p);
    ResidueCoefficients r;
    for (int i = 0; i < 4; ++i) {
        const Complex li = q.lambda[i];
        Complex denom = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != i) denom *= li - q.lambda[j];
        r.a[i] = (p.gamma + p.Gamma * li * li) / denom;
    }
    return r;
}

double kernel_xi2b(const CouplingParams& p, KernelDiagnostics* diag) {
    validate(p);
    return std::sqrt(p.Gamma) * p.n_th * integral_i1_residue(p, diag) / kTwoPi;
}

double kernel_xi2b_quadrature(const CouplingParams& p) {
    validate(p);
    return std::sqrt(p.Gamma) * p.n_th * integral_i1_quadrature(p) / kTwoPi;
}

Complex kernel_cross(const CouplingParams& p, KernelDiagnostics* diag) {
    validate(p);
    const Complex i2 = integral_i2_residue(p, diag);
    return Complex(0.0, 1.0) * p.g * p.Gamma * p.n_th * i2 / kTwoPi;
}

Complex kernel_cross_quadrature(const CouplingParams& p) {
    validate(p);
    return Complex(0.0, 1.0) * p.g * p.Gamma * p.n_th * integral_i2_quadrature(p) / kTwoPi;
}

double kernel_xi1a(const CouplingParams& p) {
    validate(p);
    return 0.0;
}

ForwardKernels forward_kernels(const CouplingParams& p, KernelDiagnostics* diag) {
    validate(p);
    ForwardKernels k;
    k.drive = p.Gamma * p.n_th * integral_i1_residue(p, diag) / kTwoPi;
    k.cross = Complex(0.0, 1.0) * p.g * p.Gamma * p.n_th * integral_i2_residue(p, diag) / kTwoPi;
    return k;
}

ForwardKernels forward_kernels_quadrature(const CouplingParams& p) {
    validate(p);
    ForwardKernels k;
    k.drive = p.Gamma * p.n_th * integral_i1_quadrature(p) / kTwoPi;
    k.cross = Complex(0.0, 1.0) * p.g * p.Gamma * p.n_th * integral_i2_quadrature(p) / kTwoPi;
    return k;
}

}  // namespace brillouin
