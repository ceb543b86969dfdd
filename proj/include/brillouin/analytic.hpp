#pragma once

#include "brillouin/params.hpp"

namespace brillouin {

// Closed-form ingredients of the constant-coupling phonon-number solution
//   N_b(t) = C1 e^{-(beta+Gamma0)t} + C2 e^{-(beta-Gamma0)t}
//          + C3 e^{-beta t} cos(Omega t) + C4 e^{-beta t} sin(Omega t) + Nb_ss,
// plus the reduced three-term strong-coupling form (Ct1..Ct3, Omega_reduced).
// The C1/C2 pair has a removable 1/Gamma0 singularity; sum_c12 and pole_c12
// store the regularized split C1 + C2 and Gamma0*(C1 - C2), which stay finite
// for all parameters.
struct AnalyticCoefficients {
    double Omega = 0.0;
    double Gamma0 = 0.0;
    double Upsilon = 0.0;
    double Nb_ss = 0.0;
    double C1 = 0.0, C2 = 0.0, C3 = 0.0, C4 = 0.0;
    double sum_c12 = 0.0;
    double pole_c12 = 0.0;
    double Ct1 = 0.0, Ct2 = 0.0, Ct3 = 0.0;
    double Omega_reduced = 0.0;
};

AnalyticCoefficients analytic_coefficients(const CouplingParams& params);

// Full closed-form N_b(t) with thermal initial condition.
double analytic_nb_full(const CouplingParams& params, double t);

// Reduced strong-coupling three-term form.
double analytic_nb_reduced(const CouplingParams& params, double t);

// Full rational steady-state limit; tends to n_th*Gamma/(Gamma+gamma) as
// g -> infinity and to n_th at g = 0.
double steady_state_limit(const CouplingParams& params);

struct RabiMode {
    double omega = 0.0;  // largest imaginary part over drift eigenvalues
    double decay = 0.0;  // negated real part of that eigenpair
};

// Ground-truth Rabi frequency from the eigenvalues of the homogeneous drift.
RabiMode rabi_frequency_numeric(const CouplingParams& params);

// The two printed approximations to Omega; the main text and the appendix
// disagree on the delta1^2 prefactor, so both ship as labeled variants.
double rabi_omega_main_text(const CouplingParams& params);      // sqrt(4g^2 + 2 d1^2 - (G-g)^2/4)
double rabi_omega_appendix(const CouplingParams& params);       // sqrt(4g^2 +   d1^2 - (G-g)^2/4)

// Pulsed-protocol limit bands: pi*Gamma*n_th/(4g) and (1+pi)*Gamma*n_th/(4g).
double instantaneous_limit(const CouplingParams& params);
double upper_limit(const CouplingParams& params);

}  // namespace brillouin
