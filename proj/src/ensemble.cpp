#include "brillouin/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace brillouin {

namespace {

// SplitMix64: counter-based, so per-trajectory streams are independent of
// execution order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1]
    double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return mix.next();
}

struct Gaussian {
    SplitMix64 rng;
    double spare = 0.0;
    bool has_spare = false;

    explicit Gaussian(std::uint64_t s) : rng(s) {}

    double operator()() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        const double u1 = rng.uniform();
        const double u2 = rng.uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        spare = r * std::sin(phi);
        has_spare = true;
        return r * std::cos(phi);
    }
};

unsigned thread_budget() {
    if (const char* env = std::getenv("BRILLOUIN_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleSpec& spec) {
    validate(spec.params);
    const CouplingParams& p = spec.params;
    if (spec.n_traj < 100) throw InvalidParams("ensemble needs at least 100 trajectories");
    if (spec.sample_times.empty() ||
        !std::is_sorted(spec.sample_times.begin(), spec.sample_times.end()))
        throw InvalidParams("sample_times must be non-empty and increasing");
    if (spec.schedule.segments.empty() ||
        spec.schedule.span() < spec.sample_times.back() * (1.0 - 1e-12))
        throw InvalidParams("schedule does not cover the sample horizon");

    const double rate_scale =
        std::max({p.g, p.Gamma, p.gamma, std::abs(p.delta1), std::abs(p.delta2)});
    const double dt_bound = 0.01 / std::max(rate_scale, 1e-300);
    const double dt = spec.dt > 0.0 ? spec.dt : 0.2 * dt_bound;
    if (dt > dt_bound) throw InvalidParams("dt exceeds the stability bound 0.01/max rate");

    const std::size_t n_samples = spec.sample_times.size();
    const std::size_t n_traj = static_cast<std::size_t>(spec.n_traj);

    // Per-trajectory checkpoint records: |a|^2, |b|^2, Re a* b, Im a* b.
    std::vector<double> buffer(n_traj * n_samples * 4);

    const std::complex<double> drift_a(-0.5 * p.gamma, p.delta1);
    const std::complex<double> drift_b(-0.5 * p.Gamma, p.delta2);
    const double noise_scale = std::sqrt(p.Gamma);

    auto run_trajectory = [&](std::size_t idx) {
        Gaussian gauss(stream_seed(spec.seed, idx));
        const double init_sigma = std::sqrt(0.5 * p.n_th);
        std::complex<double> a(0.0, 0.0);
        std::complex<double> b(init_sigma * gauss(), init_sigma * gauss());

        double t = 0.0;
        std::size_t sample = 0;
        double* out = buffer.data() + idx * n_samples * 4;

        for (const auto& seg : spec.schedule.segments) {
            if (sample >= n_samples) break;
            if (seg.reset_at_start) a = 0.0;
            const double seg_end = t + seg.duration;
            const std::complex<double> ig(0.0, seg.g_value);
            while (t < seg_end * (1.0 - 1e-15) && sample < n_samples) {
                double h = std::min(dt, seg_end - t);
                if (spec.sample_times[sample] > t && spec.sample_times[sample] < t + h)
                    h = spec.sample_times[sample] - t;
                const double w_sigma = std::sqrt(0.5 * p.n_th * h);
                const std::complex<double> dw(w_sigma * gauss(), w_sigma * gauss());
                const std::complex<double> da = (drift_a * a - ig * b) * h;
                const std::complex<double> db = (drift_b * b - ig * a) * h + noise_scale * dw;
                a += da;
                b += db;
                t += h;
                while (sample < n_samples &&
                       spec.sample_times[sample] <= t * (1.0 + 1e-14)) {
                    const std::complex<double> cross = std::conj(a) * b;
                    out[sample * 4 + 0] = std::norm(a);
                    out[sample * 4 + 1] = std::norm(b);
                    out[sample * 4 + 2] = cross.real();
                    out[sample * 4 + 3] = cross.imag();
                    ++sample;
                }
            }
            t = seg_end;
        }
    };

    const unsigned workers = std::min<unsigned>(thread_budget(), n_traj);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n_traj; ++i) run_trajectory(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n_traj) return;
                    run_trajectory(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction in trajectory order.
    EnsembleResult result;
    result.times = spec.sample_times;
    result.na_mean.resize(n_samples);
    result.na_stderr.resize(n_samples);
    result.nb_mean.resize(n_samples);
    result.nb_stderr.resize(n_samples);
    result.c_mean.resize(n_samples);
    for (std::size_t s = 0; s < n_samples; ++s) {
        double sa = 0.0, sa2 = 0.0, sb = 0.0, sb2 = 0.0, cr = 0.0, ci = 0.0;
        for (std::size_t i = 0; i < n_traj; ++i) {
            const double* rec = buffer.data() + (i * n_samples + s) * 4;
            sa += rec[0];
            sa2 += rec[0] * rec[0];
            sb += rec[1];
            sb2 += rec[1] * rec[1];
            cr += rec[2];
            ci += rec[3];
        }
        const double n = static_cast<double>(n_traj);
        result.na_mean[s] = sa / n;
        result.nb_mean[s] = sb / n;
        result.c_mean[s] = {cr / n, ci / n};
        const double var_a = std::max(sa2 / n - (sa / n) * (sa / n), 0.0);
        const double var_b = std::max(sb2 / n - (sb / n) * (sb / n), 0.0);
        result.na_stderr[s] = std::sqrt(var_a / n);
        result.nb_stderr[s] = std::sqrt(var_b / n);
    }
    return result;
}

}  // namespace brillouin
