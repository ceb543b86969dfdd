#pragma once

#include <utility>
#include <vector>

#include "brillouin/dynamics.hpp"
#include "brillouin/params.hpp"
#include "brillouin/schedule.hpp"

namespace brillouin {

struct PulseOptions {
    double tau_fraction = 0.05;  // switch-off time as a fraction of the Rabi period
    double t_start = -1.0;       // first switch-off; < 0 means T/2
};

// Builds the pulsed-coupling schedule. AnalyticPeriodic uses the numeric Rabi
// period T = 2*pi/Omega: an on-window of t_start (default T/2), then repeating
// [off: tau][on+reset: T/2 - tau] until the span is tiled. MinimumDetect is
// resolved during execution (see run_protocol); its schedule is built by
// integrating to each detected minimum of n_b.
PulseSchedule build_schedule(const CouplingParams& params, ScheduleMode mode, double span,
                             const PulseOptions& options = {});

struct CoolingMetrics {
    double nb_min = 0.0;
    double plateau_mean = 0.0;
    double plateau_lo = 0.0;
    double plateau_hi = 0.0;
    double R = 1.0;  // achieved instantaneous-limit ratio, plateau floor / n_th
    double ins_limit = 0.0;
    double upp_limit = 0.0;
    double ss_limit = 0.0;
    bool zero_load = false;  // n_th == 0, R reported as 1
};

struct ProtocolResult {
    SimulationResult trace;
    CoolingMetrics metrics;
};

// Integrates the schedule and computes cooling metrics over the plateau
// window (the final 50% of the span, after at least 5 modulation cycles).
// plateau_mean is the time-weighted mean over that window.
ProtocolResult run_protocol(const CouplingParams& params, const PulseSchedule& schedule,
                            double rel_tol = 1e-9, double sampling = -1.0);

// Metrics over [plateau_start, end of trace].
CoolingMetrics compute_metrics(const CouplingParams& params, const SimulationResult& trace,
                               double plateau_start);

// Constant-on coupling everywhere except inside the given disjoint windows,
// where the AnalyticPeriodic modulation runs, restarted at each window start.
SimulationResult switchability_trace(const CouplingParams& params,
                                     const std::vector<std::pair<double, double>>& on_windows,
                                     double span, double rel_tol = 1e-9,
                                     const PulseOptions& options = {});

// First minimum of n_b under constant coupling from the given state, located
// by sign change of dn_b/dt and refined by bisection to 1e-6 of the Rabi
// period. Searches (0, t_max].
double find_nb_minimum(const CouplingParams& params, double g_on, const MomentState& from,
                       double t_max, double rel_tol = 1e-9);

// MinimumDetect execution: on-windows end at the detected n_b minimum.
ProtocolResult run_minimum_detect(const CouplingParams& params, double span,
                                  const PulseOptions& options = {}, double rel_tol = 1e-9);

}  // namespace brillouin
