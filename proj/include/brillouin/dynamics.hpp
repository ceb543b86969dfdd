#pragma once

#include <array>
#include <vector>

#include "brillouin/params.hpp"
#include "brillouin/schedule.hpp"

namespace brillouin {

// Real 4x4 drift of the moment vector x = (n_a, n_b, Re c, Im c):
// dx/dt = A x + f, with beta = (gamma+Gamma)/2 and Delta = delta1 - delta2.
struct DriftMatrix {
    std::array<std::array<double, 4>, 4> a{};
    std::array<double, 4> f{};

    static DriftMatrix build(const CouplingParams& params, double g_now);

    std::array<double, 4> apply(const std::array<double, 4>& x) const;
    double trace() const;
};

std::array<double, 4> moment_rhs(const MomentState& state, const CouplingParams& params,
                                 double g_now);

struct SimulationResult {
    std::vector<double> times;
    std::vector<MomentState> states;
    std::vector<double> g_trace;
    std::vector<ScheduleEvent> events;

    const MomentState& final_state() const { return states.back(); }
    // Linear interpolation of n_b; times must bracket t.
    double nb_at(double t) const;
};

class IntegrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) over the schedule.
// Steps land exactly on segment boundaries and on sample times; VacuumReset is
// applied as a discrete map (n_a <- 0, c <- 0) at the start of each segment
// that requests it. Output holds t = 0, every multiple of `sampling`, every
// event time, and t_end.
SimulationResult integrate(const CouplingParams& params, const PulseSchedule& schedule,
                           const MomentState& initial, double t_end, double sampling,
                           double rel_tol = 1e-9);

// Advance `state` in place by dt under constant coupling g_now.
void advance(const CouplingParams& params, double g_now, MomentState& state, double dt,
             double rel_tol = 1e-9);

}  // namespace brillouin
