#include "mmsim.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "mmsim/benchmark.hpp"
#include "mmsim/config.hpp"
#include "mmsim/errors.hpp"
#include "mmsim/llg.hpp"
#include "mmsim/trajectory.hpp"
#include "mmsim/validate.hpp"

// Opaque handle bodies. The C structs wrap the C++ objects one to one.
struct mmsim_config {
    mmsim::RunConfig cfg;
};

struct mmsim_sim {
    mmsim::RunConfig cfg;
    std::unique_ptr<mmsim::SimulationBase> sim;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

// Maps C++ exceptions from the core onto status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const mmsim::config_error& e) {
        set_error(e.what());
        return MMSIM_ERROR_CONFIG;
    } catch (const mmsim::numerical_error& e) {
        set_error(e.what());
        return MMSIM_ERROR_NUMERICAL;
    } catch (const mmsim::io_error& e) {
        set_error(e.what());
        return MMSIM_ERROR_IO;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return MMSIM_ERROR_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return MMSIM_ERROR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return MMSIM_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return MMSIM_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string item =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

extern "C" {

const char* mmsim_status_string(int status) {
    switch (status) {
        case MMSIM_OK: return "ok";
        case MMSIM_ERROR_ARGUMENT: return "invalid argument";
        case MMSIM_ERROR_CONFIG: return "configuration error";
        case MMSIM_ERROR_NUMERICAL: return "numerical failure";
        case MMSIM_ERROR_IO: return "i/o error";
        case MMSIM_ERROR_NOMEM: return "out of memory";
        case MMSIM_ERROR_VALIDATION: return "validation failure";
        case MMSIM_ERROR_INTERNAL: return "internal error";
        default: return "unknown status";
    }
}

const char* mmsim_last_error(void) { return t_last_error.c_str(); }

const char* mmsim_version(void) { return "0.1.0"; }

void mmsim_string_free(char* s) { delete[] s; }

int mmsim_config_parse(const char* text, mmsim_config** out) {
    if (!text || !out) {
        set_error("mmsim_config_parse: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<mmsim_config>();
        handle->cfg = mmsim::parse_config(text);
        *out = handle.release();
        return MMSIM_OK;
    });
}

int mmsim_config_load(const char* path, mmsim_config** out) {
    if (!path || !out) {
        set_error("mmsim_config_load: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<mmsim_config>();
        handle->cfg = mmsim::load_config(path);
        *out = handle.release();
        return MMSIM_OK;
    });
}

void mmsim_config_free(mmsim_config* cfg) { delete cfg; }

int mmsim_config_describe(const mmsim_config* cfg, char** text_out) {
    if (!cfg || !text_out) {
        set_error("mmsim_config_describe: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        *text_out = dup_string(mmsim::serialize_config(cfg->cfg));
        return MMSIM_OK;
    });
}

int mmsim_sim_create(const mmsim_config* cfg, mmsim_sim** out) {
    if (!cfg || !out) {
        set_error("mmsim_sim_create: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<mmsim_sim>();
        handle->cfg = cfg->cfg;
        handle->sim =
            mmsim::make_simulation(cfg->cfg.problem, cfg->cfg.backend, cfg->cfg.precision);
        *out = handle.release();
        return MMSIM_OK;
    });
}

void mmsim_sim_free(mmsim_sim* sim) { delete sim; }

int mmsim_sim_step(mmsim_sim* sim, long long n) {
    if (!sim || n < 0) {
        set_error("mmsim_sim_step: bad handle or negative count");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        for (long long i = 0; i < n; ++i) sim->sim->step();
        return MMSIM_OK;
    });
}

int mmsim_sim_step_index(const mmsim_sim* sim, long long* out) {
    if (!sim || !out) {
        set_error("mmsim_sim_step_index: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    *out = sim->sim->step_index();
    return MMSIM_OK;
}

int mmsim_sim_average(const mmsim_sim* sim, double out_mxyz[3]) {
    if (!sim || !out_mxyz) {
        set_error("mmsim_sim_average: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        const mmsim::Vec3 avg = sim->sim->average_unit();
        out_mxyz[0] = avg.x;
        out_mxyz[1] = avg.y;
        out_mxyz[2] = avg.z;
        return MMSIM_OK;
    });
}

int mmsim_sim_energy(mmsim_sim* sim, double* out) {
    if (!sim || !out) {
        set_error("mmsim_sim_energy: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        *out = sim->sim->energy();
        return MMSIM_OK;
    });
}

int mmsim_sim_max_torque(mmsim_sim* sim, double* out) {
    if (!sim || !out) {
        set_error("mmsim_sim_max_torque: NULL argument");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        *out = sim->sim->max_torque();
        return MMSIM_OK;
    });
}

int mmsim_sim_run(mmsim_sim* sim, long long steps, long long cadence, mmsim_record_fn record,
                  void* user, long long* steps_done) {
    if (!sim) {
        set_error("mmsim_sim_run: NULL handle");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        mmsim::RunOptions opts;
        opts.steps = steps < 0 ? sim->cfg.problem.steps : steps;
        opts.cadence = cadence >= 1 ? cadence : sim->cfg.problem.cadence;
        opts.stop_torque = sim->cfg.stop_torque;
        if (record) {
            opts.sink = [record, user](const mmsim::TrajectoryRecord& r) {
                record(user, r.step, r.mx, r.my, r.mz);
            };
        }
        const long long done = sim->sim->run(opts);
        if (steps_done) *steps_done = done;
        return MMSIM_OK;
    });
}

int mmsim_simulate(const mmsim_config* cfg, const char* output_override) {
    if (!cfg) {
        set_error("mmsim_simulate: NULL config");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        auto sim =
            mmsim::make_simulation(cfg->cfg.problem, cfg->cfg.backend, cfg->cfg.precision);
        std::vector<mmsim::TrajectoryRecord> records;
        mmsim::RunOptions opts;
        opts.steps = cfg->cfg.problem.steps;
        opts.cadence = cfg->cfg.problem.cadence;
        opts.stop_torque = cfg->cfg.stop_torque;
        opts.sink = [&records](const mmsim::TrajectoryRecord& r) { records.push_back(r); };
        sim->run(opts);
        const std::string path = output_override ? output_override : cfg->cfg.output;
        mmsim::write_trajectory(records, path, cfg->cfg.crlf);
        return MMSIM_OK;
    });
}

int mmsim_benchmark(const char* sizes_csv, const char* backends_csv, const char* precisions_csv,
                    long long warmup, long long measure, char** table_out, char** tsv_out) {
    if (!sizes_csv) {
        set_error("mmsim_benchmark: sizes_csv is required");
        return MMSIM_ERROR_ARGUMENT;
    }
    return guarded([&] {
        mmsim::BenchmarkOptions opts;
        for (const std::string& s : split_csv(sizes_csv)) opts.sizes.push_back(std::stoi(s));
        if (backends_csv) {
            opts.backends.clear();
            for (const std::string& s : split_csv(backends_csv))
                opts.backends.push_back(mmsim::backend_from_string(s));
        }
        if (precisions_csv) {
            opts.precisions.clear();
            for (const std::string& s : split_csv(precisions_csv))
                opts.precisions.push_back(mmsim::precision_from_string(s));
        }
        if (warmup >= 0) opts.steps_warmup = warmup;
        if (measure >= 1) opts.steps_measure = measure;
        const mmsim::BenchmarkReport report = mmsim::run_benchmark(opts);
        if (table_out) *table_out = dup_string(mmsim::render_table(report));
        if (tsv_out) *tsv_out = dup_string(mmsim::render_tsv(report));
        return MMSIM_OK;
    });
}

int mmsim_validate(char** report_out) {
    return guarded([&] {
        const mmsim::ValidationReport report = mmsim::run_validation();
        if (report_out) *report_out = dup_string(mmsim::render_report(report));
        if (!report.all_passed()) {
            set_error("validation suite reported failing checks");
            return static_cast<int>(MMSIM_ERROR_VALIDATION);
        }
        return static_cast<int>(MMSIM_OK);
    });
}

} // extern "C"
