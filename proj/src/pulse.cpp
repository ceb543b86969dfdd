#include "brillouin/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "brillouin/analytic.hpp"

namespace brillouin {

namespace {

// Appends the periodic [off tau][on+reset on_len] tiling over [t, t_end).
void tile_modulation(std::vector<Segment>& segments, double t, double t_end, double tau,
                     double on_len, double g_on) {
    const double eps = 1e-12 * std::max(1.0, t_end);
    while (t < t_end - eps) {
        const double off = std::min(tau, t_end - t);
        segments.push_back({off, 0.0, false});
        t += off;
        if (t >= t_end - eps) break;
        const double on = std::min(on_len, t_end - t);
        segments.push_back({on, g_on, true});
        t += on;
    }
}

}  // namespace

PulseSchedule build_schedule(const CouplingParams& params, ScheduleMode mode, double span,
                             const PulseOptions& options) {
    validate(params);
    if (span <= 0.0) throw InvalidParams("schedule span must be positive");

    PulseSchedule schedule;
    schedule.mode = mode;
    switch (mode) {
        case ScheduleMode::ConstantOn:
            schedule.segments.push_back({span, params.g, false});
            return schedule;
        case ScheduleMode::Custom:
            throw InvalidParams("custom schedules are built directly from segments");
        case ScheduleMode::AnalyticPeriodic: {
            if (params.g <= 0.0) throw InvalidParams("periodic modulation requires g > 0");
            const double omega = rabi_frequency_numeric(params).omega;
            const double period = 2.0 * std::numbers::pi / omega;
            const double tau = options.tau_fraction * period;
            const double half = 0.5 * period;
            const double first_on = options.t_start >= 0.0 ? options.t_start : half;
            if (span < half) throw InvalidParams("span shorter than one half Rabi period");
            if (tau >= half - tau)
                throw InvalidParams("switch-off time must be shorter than the on-window");
            schedule.segments.push_back({std::min(first_on, span), params.g, false});
            tile_modulation(schedule.segments, std::min(first_on, span), span, tau, half - tau,
                            params.g);
            return schedule;
        }
        case ScheduleMode::MinimumDetect: {
            if (params.g <= 0.0) throw InvalidParams("minimum detection requires g > 0");
            const double omega = rabi_frequency_numeric(params).omega;
            const double period = 2.0 * std::numbers::pi / omega;
            const double tau = options.tau_fraction * period;
            MomentState state = thermal_initial_state(params);
            double t = 0.0;
            const double eps = 1e-12 * std::max(1.0, span);
            while (t < span - eps) {
                const double window = std::min(2.0 * period, span - t);
                const double t_min = find_nb_minimum(params, params.g, state, window);
                Segment on{t_min, params.g, t > 0.0};
                if (on.reset_at_start) {
                    state.n_a = 0.0;
                    state.c_re = 0.0;
                    state.c_im = 0.0;
                }
                advance(params, params.g, state, on.duration);
                schedule.segments.push_back(on);
                t += on.duration;
                if (t >= span - eps) break;
                const double off = std::min(tau, span - t);
                advance(params, 0.0, state, off);
                schedule.segments.push_back({off, 0.0, false});
                t += off;
            }
            return schedule;
        }
    }
    throw InvalidParams("unknown schedule mode");
}

double find_nb_minimum(const CouplingParams& params, double g_on, const MomentState& from,
                       double t_max, double rel_tol) {
    const double omega = rabi_frequency_numeric(params).omega;
    const double period = omega > 0.0 ? 2.0 * std::numbers::pi / omega : t_max;
    const double dt = std::min(period / 256.0, t_max / 16.0);

    auto nb_slope = [&](const MomentState& s) { return moment_rhs(s, params, g_on)[1]; };

    MomentState state = from;
    double t = 0.0;
    bool was_negative = false;
    double prev_t = 0.0;
    MomentState prev = state;
    while (t < t_max) {
        prev = state;
        prev_t = t;
        const double step = std::min(dt, t_max - t);
        advance(params, g_on, state, step, rel_tol);
        t += step;
        const double slope = nb_slope(state);
        if (slope < 0.0) was_negative = true;
        if (was_negative && slope >= 0.0) {
            // refine by bisection on [prev_t, t]
            double lo = 0.0, hi = t - prev_t;
            const double tol = 1e-6 * period;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                MomentState probe = prev;
                advance(params, g_on, probe, mid, rel_tol);
                if (nb_slope(probe) < 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            return prev_t + 0.5 * (lo + hi);
        }
    }
    return t_max;
}

CoolingMetrics compute_metrics(const CouplingParams& params, const SimulationResult& trace,
                               double plateau_start) {
    CoolingMetrics m;
    m.ss_limit = steady_state_limit(params);
    if (params.g > 0.0) {
        m.ins_limit = instantaneous_limit(params);
        m.upp_limit = upper_limit(params);
    }

    m.nb_min = trace.states.front().n_b;
    for (const auto& s : trace.states) m.nb_min = std::min(m.nb_min, s.n_b);

    double lo = 0.0, hi = 0.0, weighted = 0.0, length = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        if (trace.times[i] < plateau_start) continue;
        const double nb = trace.states[i].n_b;
        if (first) {
            lo = hi = nb;
            first = false;
        }
        lo = std::min(lo, nb);
        hi = std::max(hi, nb);
        if (i + 1 < trace.times.size()) {
            const double dt = trace.times[i + 1] - trace.times[i];
            weighted += 0.5 * (nb + trace.states[i + 1].n_b) * dt;
            length += dt;
        }
    }
    m.plateau_lo = lo;
    m.plateau_hi = hi;
    m.plateau_mean = length > 0.0 ? weighted / length : lo;

    if (params.n_th <= 0.0) {
        m.zero_load = true;
        m.R = 1.0;
    } else {
        m.R = m.plateau_lo / params.n_th;
    }
    return m;
}

ProtocolResult run_protocol(const CouplingParams& params, const PulseSchedule& schedule,
                            double rel_tol, double sampling) {
    const double span = schedule.span();
    if (sampling <= 0.0) {
        sampling = span / 2048.0;
        if (params.g > 0.0) {
            const double period = 2.0 * std::numbers::pi / rabi_frequency_numeric(params).omega;
            sampling = std::min(sampling, period / 64.0);
            sampling = std::max(sampling, span / 250000.0);
        }
    }
    ProtocolResult result;
    result.trace = integrate(params, schedule, thermal_initial_state(params), span, sampling,
                             rel_tol);

    // Plateau: final 50% of the span, but never before 5 modulation cycles.
    double plateau_start = 0.5 * span;
    if (schedule.segments.size() > 10) {
        double t5 = 0.0;
        for (std::size_t i = 0; i < 11; ++i) t5 += schedule.segments[i].duration;
        plateau_start = std::max(plateau_start, t5);
    }
    result.metrics = compute_metrics(params, result.trace, plateau_start);
    return result;
}

SimulationResult switchability_trace(const CouplingParams& params,
                                     const std::vector<std::pair<double, double>>& on_windows,
                                     double span, double rel_tol, const PulseOptions& options) {
    validate(params);
    double prev_end = 0.0;
    for (const auto& [a, b] : on_windows) {
        if (a < prev_end || b <= a)
            throw InvalidParams("modulation windows must be disjoint and ordered");
        prev_end = b;
    }

    const double omega = rabi_frequency_numeric(params).omega;
    const double period = 2.0 * std::numbers::pi / omega;
    const double tau = options.tau_fraction * period;
    const double half = 0.5 * period;

    PulseSchedule schedule;
    schedule.mode = ScheduleMode::Custom;
    double t = 0.0;
    for (const auto& [a, b] : on_windows) {
        const double end = std::min(b, span);
        if (a >= span) break;
        if (a > t) schedule.segments.push_back({a - t, params.g, false});
        const double first_on = std::min(half, end - a);
        schedule.segments.push_back({first_on, params.g, false});
        tile_modulation(schedule.segments, a + first_on, end, tau, half - tau, params.g);
        t = end;
    }
    if (span > t) schedule.segments.push_back({span - t, params.g, false});

    const double sampling = std::min(span / 2048.0, period / 64.0);
    return integrate(params, schedule, thermal_initial_state(params), span, sampling, rel_tol);
}

ProtocolResult run_minimum_detect(const CouplingParams& params, double span,
                                  const PulseOptions& options, double rel_tol) {
    const PulseSchedule schedule =
        build_schedule(params, ScheduleMode::MinimumDetect, span, options);
    return run_protocol(params, schedule, rel_tol);
}

}  // namespace brillouin
