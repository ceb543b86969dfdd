#pragma once

#include <stdexcept>
#include <string>

namespace brillouin {

// All rates are dimensionless in one user-chosen reference rate (Gamma for
// backward scenarios, gamma for forward ones); time is measured in its inverse.
struct CouplingParams {
    double gamma = 1.0;   // optical amplitude dissipation rate
    double Gamma = 1.0;   // acoustic dissipation rate
    double g = 0.0;       // pump-enhanced coupling strength
    double delta1 = 0.0;  // optical detuning k*v_o
    double delta2 = 0.0;  // acoustic detuning k*v_ac
    double n_th = 0.0;    // thermal phonon occupation
};

// Labels the scattering geometry of a scenario. The dynamics are identical;
// only the default parameter regime differs (Gamma >> gamma backward,
// gamma >> Gamma forward).
enum class Regime { Backward, ForwardIntermodal };

struct ValidationReport {
    bool strong_coupling = false;            // g > 5*max(gamma, Gamma)
    bool detunings_within_linewidth = false; // |delta1|, |delta2| < Gamma
};

class InvalidParams : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Throws InvalidParams on non-positive dissipation, negative g or n_th, or
// non-finite fields. The regime inequalities are advisory flags, not errors.
ValidationReport validate(const CouplingParams& params);

// Second-order moments (N_a, N_b, <a^dag b>) at one instant.
struct MomentState {
    double n_a = 0.0;
    double n_b = 0.0;
    double c_re = 0.0;
    double c_im = 0.0;
};

// Positivity tolerance scales with n_th since moment magnitudes do.
inline double positivity_tolerance(const CouplingParams& params) {
    return 1e-9 * (params.n_th > 1.0 ? params.n_th : 1.0);
}

// Cauchy-Schwarz bound |<a^dag b>|^2 <= N_a * N_b, with relative slack.
bool satisfies_cauchy_schwarz(const MomentState& state, double slack = 1e-6);

// Vacuum optical mode, thermal acoustic mode: (0, n_th, 0).
MomentState thermal_initial_state(const CouplingParams& params);

}  // namespace brillouin
