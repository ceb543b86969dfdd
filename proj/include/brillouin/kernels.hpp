#pragma once

#include <array>
#include <complex>

#include "brillouin/params.hpp"

namespace brillouin {

using Complex = std::complex<double>;

// Roots of the scale-normalized quartic denominator
//   w^4 - 2 eta2 w^3 + (eta2^2 - 2 eta1) w^2 + 2 eta2 w + 1
// with eta1 = 1 - beta^2/(2 alpha^2), eta2 = delta1/alpha,
// alpha = sqrt(g^2 + gamma*Gamma/4), beta = (gamma+Gamma)/2.
struct QuarticRoots {
    std::array<Complex, 4> lambda{};
    double eta1 = 0.0;
    double eta2 = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double amplitude = 0.0;  // |z| of the inner radicand, polar form
    double theta = 0.0;      // arg(z)
};

QuarticRoots normalized_quartic_roots(const CouplingParams& params);

// Partial-fraction coefficients of (gamma + Gamma w^2) over the normalized
// quartic. Sum to zero (degree gap >= 2).
struct ResidueCoefficients {
    std::array<Complex, 4> a{};
};

ResidueCoefficients normalized_residues(const CouplingParams& params);

// Degenerate-root condition was hit and the quadrature route was used instead.
struct KernelDiagnostics {
    bool quadrature_fallback = false;
};

// Equal-time drive correlation <xi2^dag b> + c.c. The integrand keeps the
// exact denominator with both detunings; the value approaches
// sqrt(Gamma)*n_th in the paper's regime.
double kernel_xi2b(const CouplingParams& params, KernelDiagnostics* diag = nullptr);
double kernel_xi2b_quadrature(const CouplingParams& params);

// Cross correlation sqrt(gamma)<xi1^dag b> + sqrt(Gamma)<a^dag xi2>.
Complex kernel_cross(const CouplingParams& params, KernelDiagnostics* diag = nullptr);
Complex kernel_cross_quadrature(const CouplingParams& params);

// Vacuum optical bath: identically zero; kept explicit so the moment-equation
// assembly is auditable.
double kernel_xi1a(const CouplingParams& params);

// Forward-intermodal kernels; same integrals with Gamma*n_th prefactors.
struct ForwardKernels {
    double drive = 0.0;
    Complex cross{};
};

ForwardKernels forward_kernels(const CouplingParams& params, KernelDiagnostics* diag = nullptr);
ForwardKernels forward_kernels_quadrature(const CouplingParams& params);

}  // namespace brillouin
