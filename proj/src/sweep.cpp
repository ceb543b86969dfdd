#include "brillouin/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <future>
#include <thread>

namespace brillouin {

namespace {

unsigned thread_budget() {
    if (const char* env = std::getenv("BRILLOUIN_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace

std::vector<SweepPoint> sweep(const KSweep& spec, double span, double rel_tol) {
    validate(spec.base);
    if (!std::is_sorted(spec.k_offsets.begin(), spec.k_offsets.end()))
        throw InvalidParams("k_offsets must be sorted");
    if (spec.v_ratio <= 0.0 || spec.v_ratio >= 1.0)
        throw InvalidParams("v_ratio must lie in (0, 1)");

    PulseOptions options;
    options.tau_fraction = spec.tau_fraction;

    // Global mode: one schedule from the phase-matched k = 0 mode.
    PulseSchedule global;
    if (spec.global_schedule && spec.schedule_mode != ScheduleMode::ConstantOn) {
        CouplingParams matched = spec.base;
        matched.delta1 = 0.0;
        matched.delta2 = 0.0;
        global = build_schedule(matched, spec.schedule_mode, span, options);
    }

    auto run_point = [&](double k_offset) {
        SweepPoint point;
        point.k_offset = k_offset;
        try {
            CouplingParams p = spec.base;
            p.delta1 = k_offset;
            p.delta2 = spec.v_ratio * k_offset;
            const PulseSchedule schedule =
                spec.global_schedule && spec.schedule_mode != ScheduleMode::ConstantOn
                    ? global
                    : build_schedule(p, spec.schedule_mode, span, options);
            const ProtocolResult result = run_protocol(p, schedule, rel_tol);
            point.metrics = result.metrics;
            point.R = result.metrics.R;
        } catch (const std::exception& e) {
            point.ok = false;
            point.error = e.what();
        }
        return point;
    };

    const std::size_t n = spec.k_offsets.size();
    std::vector<SweepPoint> points(n);
    const unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) points[i] = run_point(spec.k_offsets[i]);
        return points;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                points[i] = run_point(spec.k_offsets[i]);
            }
        });
    }
    for (auto& th : pool) th.join();
    return points;
}

}  // namespace brillouin
