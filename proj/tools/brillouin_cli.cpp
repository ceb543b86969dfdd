#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "brillouin/brillouin.h"

int main(int argc, char** argv) {
    CLI::App app{"Brillouin cooling scenario runner"};
    app.set_version_flag("--version", std::string(brl_version()));

    std::string config_path;
    std::string out_dir;
    bool list_scenarios = false;
    bool emit_plot = false;

    app.add_option("--config", config_path, "Scenario config file (INI-style)");
    app.add_option("--out", out_dir, "Output directory (overrides config)");
    app.add_flag("--list-scenarios", list_scenarios, "List scenario presets and exit");
    app.add_flag("--emit-plot-script", emit_plot,
                 "Write plot.py into the output directory");

    CLI11_PARSE(app, argc, argv);

    if (list_scenarios) {
        std::printf("%s\n", brl_scenario_names());
        return 0;
    }

    if (emit_plot && config_path.empty()) {
        const char* dir = out_dir.empty() ? "." : out_dir.c_str();
        if (brl_emit_plot_script(dir) != BRL_OK) {
            std::fprintf(stderr, "error: %s\n", brl_last_error());
            return 1;
        }
        std::printf("wrote plot script to %s\n", dir);
        return 0;
    }

    if (config_path.empty()) {
        std::fprintf(stderr, "error: --config is required (or --list-scenarios)\n");
        return 2;
    }

    const char* dir = out_dir.empty() ? nullptr : out_dir.c_str();
    const brl_status status = brl_run_scenario_file(config_path.c_str(), dir);
    if (status != BRL_OK) {
        std::fprintf(stderr, "error: %s\n", brl_last_error());
        return static_cast<int>(status);
    }
    if (emit_plot) {
        const char* plot_dir = out_dir.empty() ? "." : out_dir.c_str();
        if (brl_emit_plot_script(plot_dir) != BRL_OK) {
            std::fprintf(stderr, "error: %s\n", brl_last_error());
            return 1;
        }
    }
    return 0;
}
