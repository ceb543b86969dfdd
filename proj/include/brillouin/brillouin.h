#ifndef BRILLOUIN_H
#define BRILLOUIN_H

/* C interface to the Brillouin cooling engine. All entry points return a
 * brl_status; on any non-OK status, brl_last_error() holds a message for the
 * calling thread. Handles are opaque and must be released with their free
 * function. The library is thread-safe for concurrent calls on distinct
 * handles. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum brl_status {
    BRL_OK = 0,
    BRL_ERR_INVALID_ARGUMENT = 1,
    BRL_ERR_PARSE = 2,
    BRL_ERR_IO = 3,
    BRL_ERR_RUNTIME = 4
} brl_status;

typedef struct brl_params {
    double gamma;  /* optical amplitude dissipation rate, > 0 */
    double Gamma;  /* acoustic dissipation rate, > 0 */
    double g;      /* pump-enhanced coupling, >= 0 */
    double delta1; /* optical detuning */
    double delta2; /* acoustic detuning */
    double n_th;   /* thermal phonon occupation, >= 0 */
} brl_params;

/* Message for the most recent failure on this thread; never NULL. */
const char* brl_last_error(void);

/* Parameter validation; advisory flags are optional (pass NULL to skip). */
brl_status brl_validate(const brl_params* params, int* strong_coupling,
                        int* detunings_within_linewidth);

/* Closed-form quantities. */
brl_status brl_steady_state_limit(const brl_params* params, double* out);
brl_status brl_pulsed_limits(const brl_params* params, double* ins_limit, double* upp_limit);
brl_status brl_rabi_frequency(const brl_params* params, double* omega, double* decay);
brl_status brl_analytic_nb(const brl_params* params, double t, double* nb_full,
                           double* nb_reduced);

/* Noise-kernel values; quadrature_fallback is set to 1 when the residue route
 * was abandoned for near-degenerate roots. Outputs are optional. */
brl_status brl_kernels(const brl_params* params, double* xi2b, double* cross_re,
                       double* cross_im, double* forward_drive, int* quadrature_fallback);

/* Pulsed-protocol run. mode is one of "constant_on", "analytic_periodic",
 * "minimum_detect". Pass tau_fraction <= 0 for the default 0.05. */
typedef struct brl_protocol brl_protocol;

brl_status brl_run_protocol(const brl_params* params, const char* mode, double span,
                            double tau_fraction, double rel_tol, brl_protocol** out);
void brl_protocol_free(brl_protocol* handle);

size_t brl_protocol_rows(const brl_protocol* handle);
brl_status brl_protocol_row(const brl_protocol* handle, size_t index, double* t, double* g_t,
                            double* n_a, double* n_b, double* c_re, double* c_im);

typedef struct brl_metrics {
    double nb_min;
    double plateau_mean;
    double plateau_lo;
    double plateau_hi;
    double R;
    double ins_limit;
    double upp_limit;
    double ss_limit;
} brl_metrics;

brl_status brl_protocol_metrics(const brl_protocol* handle, brl_metrics* out);

/* Scenario runner: parses the config file, executes the pipeline, and writes
 * CSV output plus run.meta. out_dir overrides the config when non-NULL. */
brl_status brl_run_scenario_file(const char* config_path, const char* out_dir);

/* Newline-separated scenario names; static storage, do not free. */
const char* brl_scenario_names(void);

/* Writes plot.py into the directory. */
brl_status brl_emit_plot_script(const char* out_dir);

const char* brl_version(void);

#ifdef __cplusplus
}
#endif

#endif /* BRILLOUIN_H */
