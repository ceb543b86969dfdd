#include "brillouin/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "brillouin/analytic.hpp"
#include "brillouin/dynamics.hpp"
#include "brillouin/ensemble.hpp"
#include "brillouin/pulse.hpp"
#include "brillouin/sweep.hpp"

namespace fs = std::filesystem;

namespace brillouin {

const char* const kVersion = "0.1.0";

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": not a number: '" + value + "'");
    }
}

int parse_int(const std::string& value, int line) {
    const double v = parse_number(value, line);
    if (v != std::floor(v))
        throw ConfigError("line " + std::to_string(line) + ": expected an integer");
    return static_cast<int>(v);
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("line " + std::to_string(line) + ": expected true/false");
}

std::vector<double> parse_list(const std::string& value, int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_number(item, line));
    }
    if (out.empty()) throw ConfigError("line " + std::to_string(line) + ": empty list");
    return out;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;  // "" = top level
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("line " + std::to_string(line) + ": unterminated section");
            section = trim(s.substr(1, s.size() - 2));
            static const std::set<std::string> known = {"params", "schedule", "sweep", "oracle",
                                                        "output"};
            if (!known.count(section))
                throw ConfigError("line " + std::to_string(line) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected key=value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (value.empty())
            throw ConfigError("line " + std::to_string(line) + ": empty value for '" + key + "'");

        if (section.empty()) {
            if (key == "scenario")
                cfg.scenario = value;
            else if (key == "rel_tol")
                cfg.rel_tol = parse_number(value, line);
            else if (key == "seed")
                cfg.seed = static_cast<std::uint64_t>(parse_int(value, line));
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        } else if (section == "params") {
            if (key == "gamma")
                cfg.gamma = parse_number(value, line);
            else if (key == "Gamma")
                cfg.Gamma = parse_number(value, line);
            else if (key == "g")
                cfg.g = parse_number(value, line);
            else if (key == "delta1")
                cfg.delta1 = parse_number(value, line);
            else if (key == "delta2")
                cfg.delta2 = parse_number(value, line);
            else if (key == "n_th")
                cfg.n_th = parse_number(value, line);
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown [params] key '" +
                                  key + "'");
        } else if (section == "schedule") {
            if (key == "mode")
                cfg.schedule_mode = value;
            else if (key == "tau_fraction")
                cfg.tau_fraction = parse_number(value, line);
            else if (key == "span")
                cfg.span = parse_number(value, line);
            else if (key == "span_periods")
                cfg.span_periods = parse_number(value, line);
            else if (key == "t_start")
                cfg.t_start = parse_number(value, line);
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown [schedule] key '" +
                                  key + "'");
        } else if (section == "sweep") {
            if (key == "k_min")
                cfg.sweep_k_min = parse_number(value, line);
            else if (key == "k_max")
                cfg.sweep_k_max = parse_number(value, line);
            else if (key == "n_points")
                cfg.sweep_n_points = parse_int(value, line);
            else if (key == "v_ratio")
                cfg.sweep_v_ratio = parse_number(value, line);
            else if (key == "global_schedule")
                cfg.sweep_global_schedule = parse_bool(value, line);
            else if (key == "g_values")
                cfg.sweep_g_values = parse_list(value, line);
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown [sweep] key '" +
                                  key + "'");
        } else if (section == "oracle") {
            if (key == "n_traj")
                cfg.oracle_n_traj = parse_int(value, line);
            else if (key == "dt")
                cfg.oracle_dt = parse_number(value, line);
            else if (key == "checkpoints")
                cfg.oracle_checkpoints = parse_int(value, line);
            else if (key == "t_end")
                cfg.oracle_t_end = parse_number(value, line);
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown [oracle] key '" +
                                  key + "'");
        } else {  // output
            if (key == "dir")
                cfg.output_dir = value;
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown [output] key '" +
                                  key + "'");
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

enum class Pipeline { Timeseries, TimeseriesAnalytic, Switchability, GSweep, KSweepRun, Ensemble };

struct Resolved {
    Pipeline pipeline = Pipeline::Timeseries;
    CouplingParams params;
    ScheduleMode mode = ScheduleMode::ConstantOn;
    double tau_fraction = 0.05;
    double span = 0.0;          // absolute, if > 0
    double span_periods = 0.0;  // used when span == 0
    double t_start = -1.0;
    double rel_tol = 1e-8;
    std::uint64_t seed = 1;

    std::vector<double> sweep_g_values;            // GSweep
    double k_min = 0.0, k_max = 0.0;               // KSweepRun
    int k_points = 25;
    double v_ratio = 1e-4;
    bool global_schedule = false;
    std::vector<double> kweep_g_values;

    int n_traj = 10000;
    double oracle_dt = 0.0;
    int checkpoints = 20;
    double oracle_t_end = 5.0;

    std::vector<std::pair<double, double>> windows;  // Switchability
};

CouplingParams backward_base() {
    CouplingParams p;
    p.gamma = 0.01;
    p.Gamma = 1.0;
    p.delta1 = 0.3;
    p.delta2 = 3e-5;
    p.n_th = 1000.0;
    return p;
}

CouplingParams forward_base() {
    CouplingParams p;
    p.gamma = 1.0;
    p.Gamma = 0.1;
    p.delta1 = 0.05;
    p.delta2 = 5e-6;
    p.n_th = 1000.0;
    return p;
}

Resolved resolve(const ScenarioConfig& cfg) {
    Resolved r;
    const std::string& name = cfg.scenario;
    if (name == "fig2a") {
        r.params = backward_base();
        r.params.g = 10.0;
        r.mode = ScheduleMode::ConstantOn;
        r.span = 10.0;
    } else if (name == "fig2cd") {
        r.params = backward_base();
        r.params.g = 10.0;
        r.mode = ScheduleMode::AnalyticPeriodic;
        r.tau_fraction = 0.05;
        r.span_periods = 30.0;
    } else if (name == "fig2e") {
        r.pipeline = Pipeline::GSweep;
        r.params = backward_base();
        r.mode = ScheduleMode::AnalyticPeriodic;
        r.tau_fraction = 0.05;
        r.span_periods = 30.0;
        r.sweep_g_values = {3.0, 5.0, 10.0, 15.0, 30.0};
    } else if (name == "fig3a") {
        r.params = forward_base();
        r.params.g = 15.0;
        r.mode = ScheduleMode::ConstantOn;
        r.span = 10.0;
    } else if (name == "fig3b") {
        r.params = forward_base();
        r.params.g = 15.0;
        r.mode = ScheduleMode::AnalyticPeriodic;
        r.tau_fraction = 0.1;
        r.span_periods = 30.0;
    } else if (name == "figS1") {
        r.pipeline = Pipeline::TimeseriesAnalytic;
        r.params = backward_base();
        r.params.g = 5.0;
        r.mode = ScheduleMode::ConstantOn;
        r.span = 8.0;
    } else if (name == "figS2") {
        r.params = backward_base();
        r.params.g = 10.0;
        r.mode = ScheduleMode::AnalyticPeriodic;
        r.tau_fraction = 0.05;
        r.span_periods = 30.0;
        r.t_start = -2.1;  // negative magnitude > 1 marks "periods"; resolved later
    } else if (name == "figS3") {
        r.pipeline = Pipeline::Switchability;
        r.params = backward_base();
        r.params.g = 10.0;
        r.tau_fraction = 0.05;
        r.span = 30.0;
        r.windows = {{0.0, 5.0}, {15.0, 20.0}};
    } else if (name == "figS4") {
        r.pipeline = Pipeline::KSweepRun;
        r.params = backward_base();
        r.params.delta1 = 0.0;
        r.params.delta2 = 0.0;
        r.mode = ScheduleMode::AnalyticPeriodic;
        r.tau_fraction = 0.05;
        r.span_periods = 30.0;
        r.kweep_g_values = {3.0, 5.0, 10.0, 15.0};
        r.k_min = 0.0;  // per-g grid filled at run time as [-3g, 3g]
        r.k_max = 0.0;
    } else if (name == "figS6") {
        r.params = forward_base();
        r.params.Gamma = 0.2;
        r.params.g = 15.0;
        r.mode = ScheduleMode::AnalyticPeriodic;
        r.tau_fraction = 0.1;
        r.span_periods = 30.0;
    } else if (name == "figS7") {
        r.pipeline = Pipeline::Switchability;
        r.params = forward_base();
        r.params.g = 15.0;
        r.tau_fraction = 0.1;
        r.span = 30.0;
        r.windows = {{0.0, 5.0}, {15.0, 20.0}};
    } else if (name == "ensemble") {
        r.pipeline = Pipeline::Ensemble;
        r.params = backward_base();
        r.params.g = 2.0;
        r.mode = ScheduleMode::ConstantOn;
        r.span = 5.0;
        r.oracle_t_end = 5.0;
    } else if (name == "custom") {
        r.params = CouplingParams{};
        if (cfg.oracle_n_traj)
            r.pipeline = Pipeline::Ensemble;
        else if (cfg.sweep_n_points)
            r.pipeline = Pipeline::KSweepRun;
        if (!cfg.span && !cfg.span_periods && r.pipeline == Pipeline::Timeseries)
            throw ConfigError("custom scenario needs [schedule] span or span_periods");
    } else {
        throw ConfigError("unknown scenario '" + name + "'");
    }

    if (cfg.gamma) r.params.gamma = *cfg.gamma;
    if (cfg.Gamma) r.params.Gamma = *cfg.Gamma;
    if (cfg.g) r.params.g = *cfg.g;
    if (cfg.delta1) r.params.delta1 = *cfg.delta1;
    if (cfg.delta2) r.params.delta2 = *cfg.delta2;
    if (cfg.n_th) r.params.n_th = *cfg.n_th;
    if (cfg.rel_tol) r.rel_tol = *cfg.rel_tol;
    if (cfg.seed) r.seed = *cfg.seed;
    if (cfg.tau_fraction) r.tau_fraction = *cfg.tau_fraction;
    if (cfg.span) {
        r.span = *cfg.span;
        r.span_periods = 0.0;
    }
    if (cfg.span_periods) {
        r.span_periods = *cfg.span_periods;
        r.span = 0.0;
    }
    if (cfg.t_start) r.t_start = *cfg.t_start;
    if (cfg.schedule_mode) {
        const std::string& m = *cfg.schedule_mode;
        if (m == "constant_on")
            r.mode = ScheduleMode::ConstantOn;
        else if (m == "analytic_periodic")
            r.mode = ScheduleMode::AnalyticPeriodic;
        else if (m == "minimum_detect")
            r.mode = ScheduleMode::MinimumDetect;
        else
            throw ConfigError("unknown schedule mode '" + m + "'");
    }
    if (cfg.sweep_k_min) r.k_min = *cfg.sweep_k_min;
    if (cfg.sweep_k_max) r.k_max = *cfg.sweep_k_max;
    if (cfg.sweep_n_points) r.k_points = *cfg.sweep_n_points;
    if (cfg.sweep_v_ratio) r.v_ratio = *cfg.sweep_v_ratio;
    if (cfg.sweep_global_schedule) r.global_schedule = *cfg.sweep_global_schedule;
    if (!cfg.sweep_g_values.empty()) {
        r.sweep_g_values = cfg.sweep_g_values;
        r.kweep_g_values = cfg.sweep_g_values;
    }
    if (cfg.oracle_n_traj) r.n_traj = *cfg.oracle_n_traj;
    if (cfg.oracle_dt) r.oracle_dt = *cfg.oracle_dt;
    if (cfg.oracle_checkpoints) r.checkpoints = *cfg.oracle_checkpoints;
    if (cfg.oracle_t_end) r.oracle_t_end = *cfg.oracle_t_end;
    return r;
}

double rabi_period(const CouplingParams& p) {
    return 2.0 * std::numbers::pi / rabi_frequency_numeric(p).omega;
}

double resolved_span(const Resolved& r, const CouplingParams& p) {
    if (r.span > 0.0) return r.span;
    return r.span_periods * rabi_period(p);
}

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

std::string timeseries_csv(const SimulationResult& trace) {
    // Event labels by time; a reset coincides with its switch-on and wins.
    std::map<double, std::string> labels;
    for (const auto& ev : trace.events) {
        const std::string label = to_string(ev.kind);
        auto it = labels.find(ev.time);
        if (it == labels.end() || label == "reset") labels[ev.time] = label;
    }
    std::string out = "t,g_t,n_a,n_b,c_re,c_im,event\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        const double t = trace.times[i];
        const MomentState& s = trace.states[i];
        out += format_double(t);
        out += ',';
        out += format_double(trace.g_trace[i]);
        out += ',';
        out += format_double(s.n_a);
        out += ',';
        out += format_double(s.n_b);
        out += ',';
        out += format_double(s.c_re);
        out += ',';
        out += format_double(s.c_im);
        out += ',';
        auto it = labels.find(t);
        if (it != labels.end()) out += it->second;
        out += '\n';
    }
    return out;
}

std::string sweep_row(double x, const std::string& label, const CoolingMetrics& m) {
    std::string out = format_double(x);
    out += ',';
    out += label;
    out += ',';
    out += format_double(m.R);
    out += ',';
    out += format_double(m.plateau_mean);
    out += ',';
    out += format_double(m.plateau_lo);
    out += ',';
    out += format_double(m.plateau_hi);
    out += ',';
    out += format_double(m.ins_limit);
    out += ',';
    out += format_double(m.upp_limit);
    out += ',';
    out += format_double(m.ss_limit);
    out += '\n';
    return out;
}

const char* pipeline_name(Pipeline p) {
    switch (p) {
        case Pipeline::Timeseries: return "timeseries";
        case Pipeline::TimeseriesAnalytic: return "timeseries+analytic";
        case Pipeline::Switchability: return "switchability";
        case Pipeline::GSweep: return "g_sweep";
        case Pipeline::KSweepRun: return "k_sweep";
        case Pipeline::Ensemble: return "ensemble";
    }
    return "?";
}

const char* mode_name(ScheduleMode m) {
    switch (m) {
        case ScheduleMode::ConstantOn: return "constant_on";
        case ScheduleMode::AnalyticPeriodic: return "analytic_periodic";
        case ScheduleMode::MinimumDetect: return "minimum_detect";
        case ScheduleMode::Custom: return "custom";
    }
    return "?";
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"fig2a", "fig2cd", "fig2e", "fig3a",  "fig3b", "figS1",    "figS2",
            "figS3", "figS4",  "figS6", "figS7", "ensemble", "custom"};
}

RunOutcome run_scenario(const ScenarioConfig& config, const std::string& out_dir_override) {
    const auto t0 = std::chrono::steady_clock::now();
    const Resolved r = resolve(config);
    validate(r.params);

    std::string dir = !out_dir_override.empty()
                          ? out_dir_override
                          : config.output_dir.value_or(std::string("."));
    fs::create_directories(dir);

    RunOutcome outcome;
    auto emit = [&](const std::string& name, const std::string& content) {
        const fs::path path = fs::path(dir) / name;
        atomic_write(path, content);
        outcome.files.push_back(path.string());
    };

    switch (r.pipeline) {
        case Pipeline::Timeseries:
        case Pipeline::TimeseriesAnalytic: {
            const double span = resolved_span(r, r.params);
            PulseOptions opt;
            opt.tau_fraction = r.tau_fraction;
            if (r.t_start >= 0.0)
                opt.t_start = r.t_start;
            else if (r.t_start < -1.0)
                opt.t_start = -r.t_start * rabi_period(r.params);
            const PulseSchedule schedule = build_schedule(r.params, r.mode, span, opt);
            const ProtocolResult res = run_protocol(r.params, schedule, r.rel_tol);
            emit("timeseries.csv", timeseries_csv(res.trace));
            if (r.pipeline == Pipeline::TimeseriesAnalytic) {
                std::string csv = "t,n_b_full,n_b_reduced\n";
                for (double t : res.trace.times) {
                    csv += format_double(t);
                    csv += ',';
                    csv += format_double(analytic_nb_full(r.params, t));
                    csv += ',';
                    csv += format_double(analytic_nb_reduced(r.params, t));
                    csv += '\n';
                }
                emit("analytic.csv", csv);
            }
            break;
        }
        case Pipeline::Switchability: {
            const SimulationResult trace =
                switchability_trace(r.params, r.windows, r.span, r.rel_tol,
                                    PulseOptions{r.tau_fraction, -1.0});
            emit("timeseries.csv", timeseries_csv(trace));
            break;
        }
        case Pipeline::GSweep: {
            std::string csv =
                "x,label,R,nb_plateau_mean,nb_plateau_lo,nb_plateau_hi,ins_limit,upp_limit,"
                "ss_limit\n";
            for (double g : r.sweep_g_values) {
                CouplingParams p = r.params;
                p.g = g;
                const double span = resolved_span(r, p);
                PulseOptions opt;
                opt.tau_fraction = r.tau_fraction;
                const PulseSchedule schedule = build_schedule(p, r.mode, span, opt);
                const ProtocolResult res = run_protocol(p, schedule, r.rel_tol);
                csv += sweep_row(g, "g_over_ref", res.metrics);
            }
            emit("sweep.csv", csv);
            break;
        }
        case Pipeline::KSweepRun: {
            std::string csv =
                "x,label,R,nb_plateau_mean,nb_plateau_lo,nb_plateau_hi,ins_limit,upp_limit,"
                "ss_limit\n";
            std::vector<double> g_values = r.kweep_g_values;
            if (g_values.empty()) g_values = {r.params.g};
            for (double g : g_values) {
                CouplingParams base = r.params;
                base.g = g;
                KSweep spec;
                spec.base = base;
                spec.v_ratio = r.v_ratio;
                spec.schedule_mode = r.mode;
                spec.tau_fraction = r.tau_fraction;
                spec.global_schedule = r.global_schedule;
                double lo = r.k_min, hi = r.k_max;
                if (lo == 0.0 && hi == 0.0) {
                    lo = -3.0 * g;
                    hi = 3.0 * g;
                }
                const int n = std::max(r.k_points, 2);
                for (int i = 0; i < n; ++i)
                    spec.k_offsets.push_back(lo + (hi - lo) * i / (n - 1));
                CouplingParams matched = base;
                matched.delta1 = 0.0;
                matched.delta2 = 0.0;
                const double span = resolved_span(r, matched);
                const auto points = sweep(spec, span, r.rel_tol);
                const std::string label = "g=" + format_double(g);
                for (const auto& pt : points) {
                    if (!pt.ok)
                        throw std::runtime_error("sweep point failed at x=" +
                                                 format_double(pt.k_offset) + ": " + pt.error);
                    csv += sweep_row(pt.k_offset, label, pt.metrics);
                }
            }
            emit("sweep.csv", csv);
            break;
        }
        case Pipeline::Ensemble: {
            EnsembleSpec spec;
            spec.params = r.params;
            spec.n_traj = r.n_traj;
            spec.dt = r.oracle_dt;
            spec.seed = r.seed;
            const double t_end = r.oracle_t_end;
            spec.schedule = PulseSchedule::constant(r.params.g, t_end);
            for (int i = 1; i <= r.checkpoints; ++i)
                spec.sample_times.push_back(t_end * i / r.checkpoints);
            const EnsembleResult res = run_ensemble(spec);
            std::string csv = "t,n_b_mean,n_b_stderr,n_a_mean,n_a_stderr\n";
            for (std::size_t i = 0; i < res.times.size(); ++i) {
                csv += format_double(res.times[i]);
                csv += ',';
                csv += format_double(res.nb_mean[i]);
                csv += ',';
                csv += format_double(res.nb_stderr[i]);
                csv += ',';
                csv += format_double(res.na_mean[i]);
                csv += ',';
                csv += format_double(res.na_stderr[i]);
                csv += '\n';
            }
            emit("ensemble.csv", csv);
            break;
        }
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double wall_ms =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
    std::string meta;
    meta += "version=" + std::string(kVersion) + "\n";
    meta += "scenario=" + config.scenario + "\n";
    meta += "pipeline=" + std::string(pipeline_name(r.pipeline)) + "\n";
    meta += "gamma=" + format_double(r.params.gamma) + "\n";
    meta += "Gamma=" + format_double(r.params.Gamma) + "\n";
    meta += "g=" + format_double(r.params.g) + "\n";
    meta += "delta1=" + format_double(r.params.delta1) + "\n";
    meta += "delta2=" + format_double(r.params.delta2) + "\n";
    meta += "n_th=" + format_double(r.params.n_th) + "\n";
    meta += "mode=" + std::string(mode_name(r.mode)) + "\n";
    meta += "tau_fraction=" + format_double(r.tau_fraction) + "\n";
    if (r.span > 0.0)
        meta += "span=" + format_double(r.span) + "\n";
    else
        meta += "span_periods=" + format_double(r.span_periods) + "\n";
    meta += "rel_tol=" + format_double(r.rel_tol) + "\n";
    meta += "seed=" + std::to_string(r.seed) + "\n";
    meta += "plateau_convention=final 50% of span, after at least 5 modulation cycles\n";
    meta += "wall_ms=" + format_double(wall_ms) + "\n";
    emit("run.meta", meta);
    return outcome;
}

std::string emit_plot_script(const std::string& out_dir) {
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / "plot.py";
    static const char* script = R"(#!/usr/bin/env python3
"""Plot helper for the CSV outputs in this directory."""
import csv
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))

def read(name):
    path = os.path.join(here, name)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return list(csv.DictReader(fh))

ts = read("timeseries.csv")
if ts:
    t = [float(r["t"]) for r in ts]
    nb = [float(r["n_b"]) for r in ts]
    na = [float(r["n_a"]) for r in ts]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(t, nb, label="n_b")
    ax.plot(t, na, label="n_a")
    ax.set_xlabel("t")
    ax.set_ylabel("occupation")
    ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(os.path.join(here, "timeseries.png"), dpi=150)

sw = read("sweep.csv")
if sw:
    labels = []
    for r in sw:
        if r["label"] not in labels:
            labels.append(r["label"])
    fig, ax = plt.subplots(figsize=(7, 4))
    for lab in labels:
        xs = [float(r["x"]) for r in sw if r["label"] == lab]
        rs = [float(r["R"]) for r in sw if r["label"] == lab]
        ax.plot(xs, rs, marker="o", label=lab)
    ax.set_xlabel("x")
    ax.set_ylabel("R")
    ax.legend()
    fig.tight_layout()
    fig.savefig(os.path.join(here, "sweep.png"), dpi=150)

en = read("ensemble.csv")
if en:
    t = [float(r["t"]) for r in en]
    nb = [float(r["n_b_mean"]) for r in en]
    err = [3 * float(r["n_b_stderr"]) for r in en]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.errorbar(t, nb, yerr=err, fmt="o-", capsize=3, label="ensemble n_b")
    ax.set_xlabel("t")
    ax.set_ylabel("n_b")
    ax.legend()
    fig.tight_layout()
    fig.savefig(os.path.join(here, "ensemble.png"), dpi=150)

print("wrote plots next to the CSVs")
)";
    atomic_write(path, script);
    return path.string();
}

}  // namespace brillouin
