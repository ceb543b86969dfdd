#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brillouin/params.hpp"
#include "brillouin/schedule.hpp"

namespace brillouin {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Flat INI-style config: a top-level `scenario` key plus [params], [schedule],
// [sweep], [oracle], [output] sections. Unknown keys are rejected with the
// offending line number. Presets are self-contained; every key is an override.
struct ScenarioConfig {
    std::string scenario = "custom";
    std::optional<double> rel_tol;
    std::optional<std::uint64_t> seed;

    std::optional<double> gamma, Gamma, g, delta1, delta2, n_th;

    std::optional<std::string> schedule_mode;  // constant_on | analytic_periodic | minimum_detect
    std::optional<double> tau_fraction;
    std::optional<double> span;          // absolute time units
    std::optional<double> span_periods;  // span as a multiple of the Rabi period
    std::optional<double> t_start;

    std::optional<double> sweep_k_min, sweep_k_max;
    std::optional<int> sweep_n_points;
    std::optional<double> sweep_v_ratio;
    std::optional<bool> sweep_global_schedule;
    std::vector<double> sweep_g_values;

    std::optional<int> oracle_n_traj;
    std::optional<double> oracle_dt;
    std::optional<int> oracle_checkpoints;
    std::optional<double> oracle_t_end;

    std::optional<std::string> output_dir;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

std::vector<std::string> scenario_names();

struct RunOutcome {
    std::vector<std::string> files;  // paths written, run.meta last
};

// Resolves the named scenario against the overrides, runs the pipeline, and
// writes the CSV outputs plus run.meta into the output directory. Files are
// written to a temp name and renamed, so partial output never appears.
RunOutcome run_scenario(const ScenarioConfig& config, const std::string& out_dir_override = "");

// Writes plot.py (a standalone matplotlib helper) into the directory.
std::string emit_plot_script(const std::string& out_dir);

// Shortest round-trip decimal formatting used by every CSV writer.
std::string format_double(double value);

extern const char* const kVersion;

}  // namespace brillouin
