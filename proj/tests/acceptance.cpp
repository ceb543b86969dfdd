// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Each check pins the tolerances it was specified with;
// nothing here is loosened to force a pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "brillouin/analytic.hpp"
#include "brillouin/dynamics.hpp"
#include "brillouin/ensemble.hpp"
#include "brillouin/kernels.hpp"
#include "brillouin/pulse.hpp"
#include "brillouin/sweep.hpp"

using namespace brillouin;

namespace {

int g_failures = 0;

void report(int index, const char* title, bool ok, const std::string& detail) {
    std::printf("criterion %2d [%s]: %s%s%s\n", index, title, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CouplingParams fig2_params(double g) {
    CouplingParams p;
    p.gamma = 0.01;
    p.Gamma = 1.0;
    p.g = g;
    p.delta1 = 0.3;
    p.delta2 = 3e-5;
    p.n_th = 1000.0;
    return p;
}

CouplingParams fig3_params(double g) {
    CouplingParams p;
    p.gamma = 1.0;
    p.Gamma = 0.1;
    p.g = g;
    p.delta1 = 0.05;
    p.delta2 = 5e-6;
    p.n_th = 1000.0;
    return p;
}

double rabi_period(const CouplingParams& p) {
    return 2.0 * std::numbers::pi / rabi_frequency_numeric(p).omega;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void criterion_1() {
    bool ok = true;
    std::string detail;
    for (double g : {5.0, 50.0}) {
        const auto t0 = std::chrono::steady_clock::now();
        const CouplingParams p = fig2_params(g);
        const auto res = integrate(p, PulseSchedule::constant(g, 8.0),
                                   thermal_initial_state(p), 8.0, 0.01, 1e-10);
        double max_full = 0.0, max_reduced = 0.0;
        for (std::size_t i = 0; i < res.times.size(); ++i) {
            max_full = std::max(max_full,
                                std::abs(res.states[i].n_b - analytic_nb_full(p, res.times[i])));
            if (g == 50.0)
                max_reduced =
                    std::max(max_reduced, std::abs(res.states[i].n_b -
                                                   analytic_nb_reduced(p, res.times[i])));
        }
        const double elapsed = seconds_since(t0);
        ok = ok && max_full < 0.01 * p.n_th && elapsed < 1.0;
        if (g == 50.0) ok = ok && max_reduced < 0.02 * p.n_th;
        detail += "g=" + fmt(g) + " max|full-ode|=" + fmt(max_full);
        if (g == 50.0) detail += " max|reduced-ode|=" + fmt(max_reduced);
        detail += " (" + fmt(elapsed) + "s) ";
    }
    report(1, "analytic/numeric overlay", ok, detail);
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    for (double g : {2.0, 10.0}) {
        const CouplingParams p = fig2_params(g);
        const auto res = integrate(p, PulseSchedule::constant(g, 50.0),
                                   thermal_initial_state(p), 50.0, 10.0, 1e-10);
        const double ss = steady_state_limit(p);
        const double rel = std::abs(res.final_state().n_b - ss) / ss;
        ok = ok && rel < 0.005;
        detail += "g=" + fmt(g) + " nb(50)=" + fmt(res.final_state().n_b) + " ss=" + fmt(ss) +
                  " rel=" + fmt(rel) + " ";
    }
    const double ss10 = steady_state_limit(fig2_params(10.0));
    ok = ok && std::abs(ss10 - 990.2) < 0.005 * 990.2;
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 1.0;
    detail += "(" + fmt(elapsed) + "s)";
    report(2, "steady-state limit", ok, detail);
}

void criterion_3() {
    const CouplingParams p = fig2_params(10.0);
    const double omega = rabi_frequency_numeric(p).omega;
    const double expected_t = std::numbers::pi / omega;
    const double t_min = find_nb_minimum(p, p.g, thermal_initial_state(p), 2.0 * rabi_period(p));
    MomentState probe = thermal_initial_state(p);
    advance(p, p.g, probe, t_min, 1e-10);
    const double target = std::numbers::pi * p.Gamma * p.n_th / (4.0 * p.g);
    const bool ok = std::abs(t_min - expected_t) < 0.05 * expected_t &&
                    std::abs(probe.n_b - target) < 0.15 * target;
    report(3, "Rabi first minimum", ok,
           "t_min=" + fmt(t_min) + " pi/Omega=" + fmt(expected_t) + " nb_min=" +
               fmt(probe.n_b) + " target=" + fmt(target));
}

void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const CouplingParams p = fig2_params(10.0);
    const double span = 30.0 * rabi_period(p);
    const auto sched = build_schedule(p, ScheduleMode::AnalyticPeriodic, span, {0.05, -1.0});
    const auto res = run_protocol(p, sched, 1e-8);
    const double elapsed = seconds_since(t0);
    const double r_steady = steady_state_limit(p) / p.n_th;
    const double improvement = r_steady / res.metrics.R;
    const bool ok = res.metrics.plateau_mean >= 0.7 * 78.53981633974482 &&
                    res.metrics.plateau_mean <= 1.3 * 103.53981633974483 &&
                    improvement >= 10.0 && elapsed < 5.0;
    report(4, "pulsed plateau", ok,
           "plateau_mean=" + fmt(res.metrics.plateau_mean) + " R=" + fmt(res.metrics.R) +
               " improvement=" + fmt(improvement) + "x (" + fmt(elapsed) + "s)");
}

void criterion_5() {
    bool ok = true;
    std::string detail = "R:";
    double prev = 1.0, last = 1.0;
    for (double g : {3.0, 5.0, 10.0, 15.0, 30.0}) {
        const CouplingParams p = fig2_params(g);
        const double span = 30.0 * rabi_period(p);
        const auto sched = build_schedule(p, ScheduleMode::AnalyticPeriodic, span, {0.05, -1.0});
        const auto res = run_protocol(p, sched, 1e-8);
        ok = ok && res.metrics.R < prev;
        prev = res.metrics.R;
        last = res.metrics.R;
        detail += " " + fmt(res.metrics.R);
    }
    ok = ok && last < 0.03;
    report(5, "R-vs-g trend", ok, detail);
}

void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> log_rate(-1.5, 1.5);
    std::uniform_real_distribution<double> det(-2.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        CouplingParams p;
        p.gamma = std::pow(10.0, log_rate(rng));
        p.Gamma = std::pow(10.0, log_rate(rng));
        p.g = std::pow(10.0, log_rate(rng));
        p.delta1 = det(rng);
        p.delta2 = 0.1 * det(rng);
        p.n_th = 1000.0;
        const double r1 = kernel_xi2b(p);
        const double r2 = kernel_xi2b_quadrature(p);
        const double rel = std::abs(r1 - r2) / std::max(std::abs(r1), 1e-3 * p.n_th);
        worst = std::max(worst, rel);
        ok = ok && rel < 1e-6;
    }
    const CouplingParams p2 = fig2_params(10.0);
    const double xi2b = kernel_xi2b(p2);
    const double cross = std::abs(kernel_cross(p2));
    const CouplingParams p3 = fig3_params(15.0);
    const double drive = forward_kernels(p3).drive;
    const double elapsed = seconds_since(t0);
    ok = ok && std::abs(xi2b - std::sqrt(p2.Gamma) * p2.n_th) < 0.01 * std::sqrt(p2.Gamma) * p2.n_th;
    ok = ok && cross < 0.02 * p2.Gamma * p2.n_th;
    ok = ok && std::abs(drive - p3.Gamma * p3.n_th) < 0.01 * p3.Gamma * p3.n_th;
    ok = ok && elapsed < 1.0;
    report(6, "noise kernels", ok,
           "worst residue/quadrature rel=" + fmt(worst) + " xi2b=" + fmt(xi2b) + " |cross|=" +
               fmt(cross) + " fwd_drive=" + fmt(drive) + " (" + fmt(elapsed) + "s)");
}

void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    EnsembleSpec spec;
    spec.params = fig2_params(2.0);
    spec.schedule = PulseSchedule::constant(2.0, 5.0);
    spec.n_traj = 10000;
    spec.seed = 20240817;
    spec.dt = 2e-4;  // small enough that discretization bias stays below the MC noise
    for (int i = 1; i <= 20; ++i) spec.sample_times.push_back(5.0 * i / 20.0);
    const auto res = run_ensemble(spec);
    const auto ode = integrate(spec.params, spec.schedule, thermal_initial_state(spec.params),
                               5.0, 0.25, 1e-10);
    int agree = 0;
    for (std::size_t i = 0; i < res.times.size(); ++i)
        if (std::abs(res.nb_mean[i] - ode.nb_at(res.times[i])) < 3.0 * res.nb_stderr[i])
            ++agree;
    const auto res2 = run_ensemble(spec);
    bool identical = true;
    for (std::size_t i = 0; i < res.times.size(); ++i)
        identical = identical &&
                    std::memcmp(&res.nb_mean[i], &res2.nb_mean[i], sizeof(double)) == 0 &&
                    std::memcmp(&res.na_mean[i], &res2.na_mean[i], sizeof(double)) == 0;
    const double elapsed = seconds_since(t0);
    const bool ok = agree >= 19 && identical && elapsed < 60.0;
    report(7, "stochastic oracle", ok,
           fmt(agree) + "/20 checkpoints within 3 SE, rerun identical=" +
               (identical ? "yes" : "no") + " (" + fmt(elapsed) + "s)");
}

void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    bool min_at_center = true;
    bool ordered = true;
    bool edges_near_one = true;
    double prev_center = 1.0;
    std::string edge_detail;
    for (double g : {3.0, 5.0, 10.0, 15.0}) {
        CouplingParams base = fig2_params(g);
        base.delta1 = 0.0;
        base.delta2 = 0.0;
        KSweep spec;
        spec.base = base;
        spec.v_ratio = 1e-4;
        spec.schedule_mode = ScheduleMode::AnalyticPeriodic;
        spec.tau_fraction = 0.05;
        const int n = 13;
        for (int i = 0; i < n; ++i)
            spec.k_offsets.push_back(-3.0 * g + 6.0 * g * i / (n - 1));
        const double span = 30.0 * rabi_period(base);
        const auto points = sweep(spec, span, 1e-8);
        double center = 1.0;
        for (const auto& pt : points)
            if (pt.k_offset == 0.0) center = pt.R;
        for (const auto& pt : points) min_at_center = min_at_center && pt.R >= center - 1e-12;
        ordered = ordered && center < prev_center;
        prev_center = center;
        const double r_edge = std::max(points.front().R, points.back().R);
        edges_near_one = edges_near_one && std::abs(r_edge - 1.0) <= 0.02;
        edge_detail += " g=" + fmt(g) + ":R(3g)=" + fmt(r_edge);
    }
    const double elapsed = seconds_since(t0);
    const bool ok = min_at_center && ordered && edges_near_one && elapsed < 60.0;
    report(8, "continuum sweep", ok,
           std::string("min at k=0: ") + (min_at_center ? "yes" : "no") +
               ", ordered in g: " + (ordered ? "yes" : "no") +
               ", R within 2% of 1 at |delta1|=3g: " + (edges_near_one ? "yes" : "no") +
               edge_detail + " (" + fmt(elapsed) + "s)");
}

void criterion_9() {
    bool ok = true;
    std::string detail = "oscillation minima:";
    // Strong-coupling transition: the number of Rabi dips over a fixed horizon
    // grows sharply with g while the weak-coupling curve relaxes smoothly.
    std::vector<int> minima_counts;
    for (double g : {0.3, 2.0, 15.0}) {
        const CouplingParams p = fig3_params(g);
        const auto res = integrate(p, PulseSchedule::constant(g, 10.0),
                                   thermal_initial_state(p), 10.0, 0.01, 1e-9);
        int minima = 0;
        for (std::size_t i = 2; i < res.times.size(); ++i) {
            const double a = res.states[i - 2].n_b, b = res.states[i - 1].n_b,
                         c = res.states[i].n_b;
            if (b < a && b < c && (a - b) + (c - b) > 1e-5 * p.n_th) ++minima;
        }
        minima_counts.push_back(minima);
        detail += " g=" + fmt(g) + ":" + fmt(minima);
    }
    ok = ok && minima_counts[0] <= 1 && minima_counts[1] > minima_counts[0] &&
         minima_counts[2] > 3 * std::max(minima_counts[1], 1);

    const CouplingParams p = fig3_params(15.0);
    const double span = 30.0 * rabi_period(p);
    const auto sched = build_schedule(p, ScheduleMode::AnalyticPeriodic, span, {0.1, -1.0});
    const auto res = run_protocol(p, sched, 1e-8);
    const double ins = instantaneous_limit(p);
    const double upp = upper_limit(p);
    ok = ok && res.metrics.plateau_mean >= 0.7 * ins && res.metrics.plateau_mean <= 1.3 * upp;
    detail += "; pulsed plateau_mean=" + fmt(res.metrics.plateau_mean) + " band=[" +
              fmt(0.7 * ins) + "," + fmt(1.3 * upp) + "]";
    report(9, "forward regime", ok, detail);
}

void criterion_10() {
    const CouplingParams p = fig2_params(10.0);
    const double span = 30.0;
    const std::vector<std::pair<double, double>> windows = {{0.0, 5.0}, {15.0, 20.0}};
    const auto trace = switchability_trace(p, windows, span, 1e-9, {0.05, -1.0});
    const double ss = steady_state_limit(p);
    const double settle = 8.0 / (p.gamma + p.Gamma);
    bool ok = true;
    std::string detail;
    for (double w_end : {5.0, 20.0}) {
        const double nb = trace.nb_at(w_end + settle);
        const double rel = std::abs(nb - ss) / ss;
        ok = ok && rel < 0.02;
        detail += "after " + fmt(w_end) + ": rel=" + fmt(rel) + " ";
    }
    const double T = rabi_period(p);
    const double ins = instantaneous_limit(p);
    const double upp = upper_limit(p);
    for (double w_start : {0.0, 15.0}) {
        // Within 3 cycles the trace must have dropped into the pulsed band.
        double best = 1e300;
        for (double t = w_start; t <= w_start + 3.0 * T; t += T / 32.0)
            best = std::min(best, trace.nb_at(t));
        const bool entered = best >= 0.5 * ins && best <= 1.3 * upp;
        ok = ok && entered;
        detail += "band entry after " + fmt(w_start) + ": nb=" + fmt(best) + " ";
    }
    report(10, "switchability", ok, detail);
}

void criterion_11() {
    bool ok = true;
    std::string detail;

    // Affine linearity.
    {
        const CouplingParams p = fig2_params(4.0);
        CouplingParams p2 = p;
        p2.n_th *= 2.0;
        const auto sched = PulseSchedule::constant(p.g, 3.0);
        const auto a = integrate(p, sched, thermal_initial_state(p), 3.0, 0.5, 1e-10);
        const auto b = integrate(p2, sched, thermal_initial_state(p2), 3.0, 0.5, 1e-10);
        for (std::size_t i = 0; i < a.times.size(); ++i)
            ok = ok && std::abs(b.states[i].n_b - 2.0 * a.states[i].n_b) < 1e-6 * p.n_th;
        detail += "affine ";
    }
    // g = 0 closed form.
    {
        const CouplingParams p = fig2_params(0.0);
        const auto res = integrate(p, PulseSchedule::constant(0.0, 4.0),
                                   MomentState{0.0, 0.0, 0.0, 0.0}, 4.0, 0.2, 1e-10);
        for (std::size_t i = 0; i < res.times.size(); ++i) {
            const double expect = p.n_th * (1.0 - std::exp(-p.Gamma * res.times[i]));
            ok = ok && std::abs(res.states[i].n_b - expect) < 1e-6 * p.n_th;
        }
        detail += "g0 ";
    }
    // Undamped conservation.
    {
        CouplingParams p;
        p.gamma = 1e-12;
        p.Gamma = 1e-12;
        p.g = 2.0;
        p.n_th = 100.0;
        const auto res = integrate(p, PulseSchedule::constant(p.g, 3.0),
                                   thermal_initial_state(p), 3.0, 0.1, 1e-10);
        for (const auto& s : res.states)
            ok = ok && std::abs(s.n_a + s.n_b - p.n_th) < 1e-7 * p.n_th;
        detail += "conservation ";
    }
    // Cauchy-Schwarz preservation.
    {
        const CouplingParams p = fig2_params(10.0);
        const auto res = integrate(p, PulseSchedule::constant(p.g, 8.0),
                                   thermal_initial_state(p), 8.0, 0.02, 1e-9);
        for (const auto& s : res.states) ok = ok && satisfies_cauchy_schwarz(s);
        detail += "cauchy-schwarz ";
    }
    // Trivial kernel identities.
    {
        CouplingParams p;
        p.gamma = 0.7;
        p.Gamma = 1.3;
        p.g = 0.0;
        p.n_th = 500.0;
        ok = ok && std::abs(kernel_xi2b(p) - std::sqrt(p.Gamma) * p.n_th) <
                       1e-6 * std::sqrt(p.Gamma) * p.n_th;
        ok = ok && std::abs(kernel_cross(p)) == 0.0;
        ok = ok && kernel_xi1a(p) == 0.0;
        detail += "kernel-identities";
    }
    report(11, "property suites", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%d of 11 criteria passed\n", 11 - g_failures);
    return g_failures;
}
