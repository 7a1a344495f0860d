/* mmsim C API: finite-difference micromagnetic simulator.
 *
 * All entry points return an int status code (MMSIM_OK == 0 on success) and
 * report results through out-parameters. Handles are opaque; every *_create /
 * *_parse has a matching *_free. mmsim_last_error() returns a thread-local
 * message describing the most recent failure on the calling thread.
 */
#ifndef MMSIM_H
#define MMSIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum mmsim_status {
    MMSIM_OK = 0,
    MMSIM_ERROR_ARGUMENT = 1,   /* bad handle / pointer / parameter */
    MMSIM_ERROR_CONFIG = 2,     /* unparseable or invalid configuration */
    MMSIM_ERROR_NUMERICAL = 3,  /* degenerate cell, spectral residue, ... */
    MMSIM_ERROR_IO = 4,
    MMSIM_ERROR_NOMEM = 5,
    MMSIM_ERROR_VALIDATION = 6, /* validate suite found a failing check */
    MMSIM_ERROR_INTERNAL = 7
};

typedef struct mmsim_config mmsim_config; /* parsed, fully resolved run configuration */
typedef struct mmsim_sim mmsim_sim;       /* live simulation state */

const char* mmsim_status_string(int status);
const char* mmsim_last_error(void);
const char* mmsim_version(void);

/* Frees strings returned through char** out-parameters. */
void mmsim_string_free(char* s);

/* ---- configuration ------------------------------------------------------ */

int mmsim_config_parse(const char* text, mmsim_config** out);
int mmsim_config_load(const char* path, mmsim_config** out);
void mmsim_config_free(mmsim_config* cfg);

/* Resolved config rendered back as a config document. */
int mmsim_config_describe(const mmsim_config* cfg, char** text_out);

/* ---- simulation --------------------------------------------------------- */

int mmsim_sim_create(const mmsim_config* cfg, mmsim_sim** out);
void mmsim_sim_free(mmsim_sim* sim);

/* Advances exactly n steps. */
int mmsim_sim_step(mmsim_sim* sim, long long n);

/* Completed-step count. */
int mmsim_sim_step_index(const mmsim_sim* sim, long long* out);

/* Volume average of M / Ms, componentwise. */
int mmsim_sim_average(const mmsim_sim* sim, double out_mxyz[3]);

/* Total energy diagnostic, internal units. */
int mmsim_sim_energy(mmsim_sim* sim, double* out);

/* max over cells of |M x H_eff| / Ms^2. */
int mmsim_sim_max_torque(mmsim_sim* sim, double* out);

typedef void (*mmsim_record_fn)(void* user, long long step, double mx, double my, double mz);

/* Advances up to `steps` steps, invoking `record` every `cadence` completed
 * steps. steps < 0 means the configured step count. Returns the number of
 * steps executed through *steps_done (may be fewer when the configured
 * torque stop triggers). */
int mmsim_sim_run(mmsim_sim* sim, long long steps, long long cadence, mmsim_record_fn record,
                  void* user, long long* steps_done);

/* ---- whole verbs -------------------------------------------------------- */

/* Full configured run writing the trajectory file (output path from the
 * config unless output_override is non-NULL). */
int mmsim_simulate(const mmsim_config* cfg, const char* output_override);

/* Cube-relaxation scaling benchmark. sizes_csv like "8,16,32,64",
 * backends_csv like "serial,parallel", precisions_csv like "f64,f32".
 * table_out receives the aligned report table, tsv_out the machine-readable
 * rows; either may be NULL when not wanted. */
int mmsim_benchmark(const char* sizes_csv, const char* backends_csv, const char* precisions_csv,
                    long long warmup, long long measure, char** table_out, char** tsv_out);

/* Demag oracle suite and tensor invariants. report_out (optional) receives
 * one line per check. Returns MMSIM_ERROR_VALIDATION when any check fails. */
int mmsim_validate(char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MMSIM_H */
