#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "brillouin/params.hpp"
#include "brillouin/schedule.hpp"

namespace brillouin {

// Euler-Maruyama ensemble of the complex Langevin pair, the independent
// validation path for the moment equations.
struct EnsembleSpec {
    int n_traj = 10000;
    double dt = 0.0;  // <= 0 selects 0.002 / max(g, Gamma, gamma, |delta1|)
    std::uint64_t seed = 1;
    CouplingParams params;
    PulseSchedule schedule;
    std::vector<double> sample_times;  // strictly increasing, within the span
};

struct EnsembleResult {
    std::vector<double> times;
    std::vector<double> na_mean, na_stderr;
    std::vector<double> nb_mean, nb_stderr;
    std::vector<std::complex<double>> c_mean;
};

// Classical complex-Gaussian trajectories: a(0) = 0, b(0) ~ CN(0, n_th);
// db picks up a complex Wiener increment with <dW* dW> = n_th dt. Vacuum
// optical noise contributes nothing to normally ordered moments and is
// omitted. VacuumReset zeroes a per trajectory. Per-trajectory counter-based
// RNG streams keep parallel runs bit-identical to sequential ones.
EnsembleResult run_ensemble(const EnsembleSpec& spec);

}  // namespace brillouin
