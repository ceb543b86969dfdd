#include "brillouin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace brillouin {

DriftMatrix DriftMatrix::build(const CouplingParams& p, double g_now) {
    const double beta = 0.5 * (p.gamma + p.Gamma);
    const double delta = p.delta1 - p.delta2;
    DriftMatrix m;
    m.a = {{{-p.gamma, 0.0, 0.0, 2.0 * g_now},
            {0.0, -p.Gamma, 0.0, -2.0 * g_now},
            {0.0, 0.0, -beta, delta},
            {-g_now, g_now, -delta, -beta}}};
    m.f = {0.0, p.Gamma * p.n_th, 0.0, 0.0};
    return m;
}

std::array<double, 4> DriftMatrix::apply(const std::array<double, 4>& x) const {
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        double acc = f[i];
        for (int j = 0; j < 4; ++j) acc += a[i][j] * x[j];
        out[i] = acc;
    }
    return out;
}

double DriftMatrix::trace() const { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

std::array<double, 4> moment_rhs(const MomentState& s, const CouplingParams& p, double g_now) {
    return DriftMatrix::build(p, g_now).apply({s.n_a, s.n_b, s.c_re, s.c_im});
}

double SimulationResult::nb_at(double t) const {
    auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return states.front().n_b;
    if (it == times.end()) return states.back().n_b;
    const std::size_t i = static_cast<std::size_t>(it - times.begin());
    const double t1 = times[i - 1], t2 = times[i];
    if (t2 <= t1) return states[i].n_b;
    const double w = (t - t1) / (t2 - t1);
    return (1.0 - w) * states[i - 1].n_b + w * states[i].n_b;
}

namespace {

using Vec4 = std::array<double, 4>;

Vec4 axpy(const Vec4& x, double h, const Vec4& d) {
    return {x[0] + h * d[0], x[1] + h * d[1], x[2] + h * d[2], x[3] + h * d[3]};
}

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Stepper {
    DriftMatrix drift;
    double rel_tol;
    double abs_tol;

    Vec4 rhs(const Vec4& x) const { return drift.apply(x); }

    // One accepted adaptive step from (t, x); updates t, x, h. Returns the
    // actually taken step size.
    void step(double& t, Vec4& x, double& h, double t_limit) {
        const double h_min = 1e-14 * std::max(1.0, std::abs(t_limit));
        for (;;) {
            h = std::min(h, t_limit - t);
            Vec4 k[7];
            k[0] = rhs(x);
            for (int s = 1; s < 7; ++s) {
                Vec4 y = x;
                for (int j = 0; j < s; ++j)
                    for (int i = 0; i < 4; ++i) y[i] += h * kA[s][j] * k[j][i];
                k[s] = rhs(y);
            }
            Vec4 x5 = x, x4 = x;
            for (int s = 0; s < 7; ++s)
                for (int i = 0; i < 4; ++i) {
                    x5[i] += h * kB5[s] * k[s][i];
                    x4[i] += h * kB4[s] * k[s][i];
                }
            double err = 0.0;
            for (int i = 0; i < 4; ++i) {
                const double scale =
                    abs_tol + rel_tol * std::max(std::abs(x[i]), std::abs(x5[i]));
                const double e = (x5[i] - x4[i]) / scale;
                err += e * e;
            }
            err = std::sqrt(err / 4.0);
            if (err <= 1.0) {
                t += h;
                x = x5;
                const double grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
                h *= std::clamp(grow, 0.2, 5.0);
                return;
            }
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
            if (h < h_min)
                throw IntegrationError("step-size underflow at t = " + std::to_string(t));
        }
    }
};

}  // namespace

void advance(const CouplingParams& p, double g_now, MomentState& state, double dt,
             double rel_tol) {
    if (dt <= 0.0) return;
    Stepper st{DriftMatrix::build(p, g_now), rel_tol,
               rel_tol * std::max(1.0, p.n_th)};
    Vec4 x{state.n_a, state.n_b, state.c_re, state.c_im};
    double t = 0.0;
    double h = dt;
    while (t < dt * (1.0 - 1e-15)) st.step(t, x, h, dt);
    state = {x[0], x[1], x[2], x[3]};
}

SimulationResult integrate(const CouplingParams& params, const PulseSchedule& schedule,
                           const MomentState& initial, double t_end, double sampling,
                           double rel_tol) {
    validate(params);
    if (t_end <= 0.0) throw InvalidParams("t_end must be positive");
    if (rel_tol <= 0.0 || rel_tol > 1e-3) throw InvalidParams("rel_tol must be in (0, 1e-3]");
    if (sampling <= 0.0) throw InvalidParams("sampling interval must be positive");
    if (schedule.segments.empty() || schedule.span() < t_end * (1.0 - 1e-12))
        throw IntegrationError("schedule does not cover the requested horizon");

    SimulationResult result;
    result.events = schedule.events();

    const double abs_tol = rel_tol * std::max(1.0, params.n_th);
    Vec4 x{initial.n_a, initial.n_b, initial.c_re, initial.c_im};
    double t = 0.0;
    long next_sample = 1;

    auto record = [&](double time, double g_now) {
        if (!result.times.empty() && time <= result.times.back() * (1.0 + 1e-15) &&
            time - result.times.back() < 1e-15 * std::max(1.0, t_end))
            return;
        result.times.push_back(time);
        result.states.push_back({x[0], x[1], x[2], x[3]});
        result.g_trace.push_back(g_now);
    };

    record(0.0, schedule.segments.front().g_value);

    double seg_start = 0.0;
    for (const auto& seg : schedule.segments) {
        if (seg_start >= t_end * (1.0 - 1e-15)) break;
        const double seg_end = std::min(seg_start + seg.duration, t_end);
        if (seg.reset_at_start) {
            x[0] = 0.0;
            x[2] = 0.0;
            x[3] = 0.0;
        }
        Stepper st{DriftMatrix::build(params, seg.g_value), rel_tol, abs_tol};
        double h = (seg_end - seg_start) * 0.1;
        while (t < seg_end * (1.0 - 1e-15)) {
            // Never straddle a sample point or the segment end.
            double limit = seg_end;
            const double ts = next_sample * sampling;
            if (ts > t * (1.0 + 1e-15) && ts < limit) limit = ts;
            st.step(t, x, h, limit);
            if (std::abs(t - ts) <= 1e-12 * std::max(1.0, ts)) {
                record(t, seg.g_value);
                ++next_sample;
            }
        }
        t = seg_end;
        record(t, seg.g_value);
        while (next_sample * sampling <= t * (1.0 + 1e-12)) ++next_sample;
        seg_start += seg.duration;
    }
    return result;
}

}  // namespace brillouin
