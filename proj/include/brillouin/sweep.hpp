#pragma once

#include <string>
#include <vector>

#include "brillouin/params.hpp"
#include "brillouin/pulse.hpp"

namespace brillouin {

// Continuum k-mode sweep. k_offsets are expressed directly as delta1 values
// (v_o * (k - k_ac0)); v_ratio = v_ac/v_o maps each to delta2.
struct KSweep {
    std::vector<double> k_offsets;
    double v_ratio = 1e-4;
    CouplingParams base;  // gamma, Gamma, g, n_th shared across modes
    ScheduleMode schedule_mode = ScheduleMode::AnalyticPeriodic;
    double tau_fraction = 0.05;
    // Per-k schedules recompute T/2 from that mode's Omega (default). The
    // global alternative reuses the k = 0 schedule everywhere, matching a
    // single physical pump.
    bool global_schedule = false;
};

struct SweepPoint {
    double k_offset = 0.0;
    double R = 1.0;
    CoolingMetrics metrics;
    bool ok = true;
    std::string error;
};

// Runs the protocol independently per k-offset. Per-point failures are
// recorded and the sweep continues. Deterministic and order-independent.
std::vector<SweepPoint> sweep(const KSweep& spec, double span, double rel_tol = 1e-8);

}  // namespace brillouin
