#include "brillouin/brillouin.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "brillouin/analytic.hpp"
#include "brillouin/dynamics.hpp"
#include "brillouin/kernels.hpp"
#include "brillouin/params.hpp"
#include "brillouin/pulse.hpp"
#include "brillouin/scenario.hpp"

namespace {

thread_local std::string g_last_error = "ok";

brl_status fail(brl_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

brillouin::CouplingParams convert(const brl_params& p) {
    brillouin::CouplingParams out;
    out.gamma = p.gamma;
    out.Gamma = p.Gamma;
    out.g = p.g;
    out.delta1 = p.delta1;
    out.delta2 = p.delta2;
    out.n_th = p.n_th;
    return out;
}

template <typename Fn>
brl_status guarded(Fn&& fn) {
    try {
        fn();
        return BRL_OK;
    } catch (const brillouin::ConfigError& e) {
        return fail(BRL_ERR_PARSE, e.what());
    } catch (const brillouin::InvalidParams& e) {
        return fail(BRL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BRL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(BRL_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(BRL_ERR_RUNTIME, e.what());
    }
}

}  // namespace

struct brl_protocol {
    brillouin::ProtocolResult result;
};

extern "C" {

const char* brl_last_error(void) { return g_last_error.c_str(); }

brl_status brl_validate(const brl_params* params, int* strong_coupling,
                        int* detunings_within_linewidth) {
    if (!params) return fail(BRL_ERR_INVALID_ARGUMENT, "params is NULL");
    return guarded([&] {
        const auto report = brillouin::validate(convert(*params));
        if (strong_coupling) *strong_coupling = report.strong_coupling ? 1 : 0;
        if (detunings_within_linewidth)
            *detunings_within_linewidth = report.detunings_within_linewidth ? 1 : 0;
    });
}

brl_status brl_steady_state_limit(const brl_params* params, double* out) {
    if (!params || !out) return fail(BRL_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *out = brillouin::steady_state_limit(convert(*params)); });
}

brl_status brl_pulsed_limits(const brl_params* params, double* ins_limit, double* upp_limit) {
    if (!params) return fail(BRL_ERR_INVALID_ARGUMENT, "params is NULL");
    return guarded([&] {
        const auto p = convert(*params);
        if (ins_limit) *ins_limit = brillouin::instantaneous_limit(p);
        if (upp_limit) *upp_limit = brillouin::upper_limit(p);
    });
}

brl_status brl_rabi_frequency(const brl_params* params, double* omega, double* decay) {
    if (!params) return fail(BRL_ERR_INVALID_ARGUMENT, "params is NULL");
    return guarded([&] {
        const auto mode = brillouin::rabi_frequency_numeric(convert(*params));
        if (omega) *omega = mode.omega;
        if (decay) *decay = mode.decay;
    });
}

brl_status brl_analytic_nb(const brl_params* params, double t, double* nb_full,
                           double* nb_reduced) {
    if (!params) return fail(BRL_ERR_INVALID_ARGUMENT, "params is NULL");
    return guarded([&] {
        const auto p = convert(*params);
        if (nb_full) *nb_full = brillouin::analytic_nb_full(p, t);
        if (nb_reduced) *nb_reduced = brillouin::analytic_nb_reduced(p, t);
    });
}

brl_status brl_kernels(const brl_params* params, double* xi2b, double* cross_re,
                       double* cross_im, double* forward_drive, int* quadrature_fallback) {
    if (!params) return fail(BRL_ERR_INVALID_ARGUMENT, "params is NULL");
    return guarded([&] {
        const auto p = convert(*params);
        brillouin::KernelDiagnostics diag;
        if (xi2b) *xi2b = brillouin::kernel_xi2b(p, &diag);
        if (cross_re || cross_im) {
            const auto c = brillouin::kernel_cross(p, &diag);
            if (cross_re) *cross_re = c.real();
            if (cross_im) *cross_im = c.imag();
        }
        if (forward_drive) *forward_drive = brillouin::forward_kernels(p, &diag).drive;
        if (quadrature_fallback) *quadrature_fallback = diag.quadrature_fallback ? 1 : 0;
    });
}

brl_status brl_run_protocol(const brl_params* params, const char* mode, double span,
                            double tau_fraction, double rel_tol, brl_protocol** out) {
    if (!params || !mode || !out) return fail(BRL_ERR_INVALID_ARGUMENT, "NULL argument");
    *out = nullptr;
    return guarded([&] {
        const auto p = convert(*params);
        brillouin::ScheduleMode m;
        if (std::strcmp(mode, "constant_on") == 0)
            m = brillouin::ScheduleMode::ConstantOn;
        else if (std::strcmp(mode, "analytic_periodic") == 0)
            m = brillouin::ScheduleMode::AnalyticPeriodic;
        else if (std::strcmp(mode, "minimum_detect") == 0)
            m = brillouin::ScheduleMode::MinimumDetect;
        else
            throw brillouin::InvalidParams(std::string("unknown mode '") + mode + "'");
        brillouin::PulseOptions options;
        if (tau_fraction > 0.0) options.tau_fraction = tau_fraction;
        if (rel_tol <= 0.0) rel_tol = 1e-9;
        const auto schedule = brillouin::build_schedule(p, m, span, options);
        auto handle = new brl_protocol{brillouin::run_protocol(p, schedule, rel_tol)};
        *out = handle;
    });
}

void brl_protocol_free(brl_protocol* handle) { delete handle; }

size_t brl_protocol_rows(const brl_protocol* handle) {
    return handle ? handle->result.trace.times.size() : 0;
}

brl_status brl_protocol_row(const brl_protocol* handle, size_t index, double* t, double* g_t,
                            double* n_a, double* n_b, double* c_re, double* c_im) {
    if (!handle) return fail(BRL_ERR_INVALID_ARGUMENT, "handle is NULL");
    const auto& trace = handle->result.trace;
    if (index >= trace.times.size())
        return fail(BRL_ERR_INVALID_ARGUMENT, "row index out of range");
    if (t) *t = trace.times[index];
    if (g_t) *g_t = trace.g_trace[index];
    const auto& s = trace.states[index];
    if (n_a) *n_a = s.n_a;
    if (n_b) *n_b = s.n_b;
    if (c_re) *c_re = s.c_re;
    if (c_im) *c_im = s.c_im;
    return BRL_OK;
}

brl_status brl_protocol_metrics(const brl_protocol* handle, brl_metrics* out) {
    if (!handle || !out) return fail(BRL_ERR_INVALID_ARGUMENT, "NULL argument");
    const auto& m = handle->result.metrics;
    out->nb_min = m.nb_min;
    out->plateau_mean = m.plateau_mean;
    out->plateau_lo = m.plateau_lo;
    out->plateau_hi = m.plateau_hi;
    out->R = m.R;
    out->ins_limit = m.ins_limit;
    out->upp_limit = m.upp_limit;
    out->ss_limit = m.ss_limit;
    return BRL_OK;
}

brl_status brl_run_scenario_file(const char* config_path, const char* out_dir) {
    if (!config_path) return fail(BRL_ERR_INVALID_ARGUMENT, "config_path is NULL");
    return guarded([&] {
        const auto config = brillouin::load_config(config_path);
        brillouin::run_scenario(config, out_dir ? out_dir : "");
    });
}

const char* brl_scenario_names(void) {
    static const std::string joined = [] {
        std::string out;
        for (const auto& name : brillouin::scenario_names()) {
            if (!out.empty()) out += '\n';
            out += name;
        }
        return out;
    }();
    return joined.c_str();
}

brl_status brl_emit_plot_script(const char* out_dir) {
    if (!out_dir) return fail(BRL_ERR_INVALID_ARGUMENT, "out_dir is NULL");
    return guarded([&] { brillouin::emit_plot_script(out_dir); });
}

const char* brl_version(void) { return brillouin::kVersion; }

}  // extern "C"
