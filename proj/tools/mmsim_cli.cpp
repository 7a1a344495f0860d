// Command-line driver. Everything numerical lives behind the mmsim C API in
// the shared library; this translation unit only parses flags and maps status
// codes onto process exit codes.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "mmsim.h"

namespace {

// 0 success, 1 configuration/usage, 2 numerical failure, 3 validation failure.
int exit_code(int status) {
    switch (status) {
        case MMSIM_OK: return 0;
        case MMSIM_ERROR_ARGUMENT:
        case MMSIM_ERROR_CONFIG:
        case MMSIM_ERROR_IO: return 1;
        case MMSIM_ERROR_VALIDATION: return 3;
        default: return 2;
    }
}

int fail(int status) {
    std::fprintf(stderr, "error: %s (%s)\n", mmsim_last_error(), mmsim_status_string(status));
    return exit_code(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmsim: finite-difference micromagnetic simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_override;
    bool describe = false;
    CLI::App* simulate =
        app.add_subcommand("simulate", "run a configured simulation and write its trajectory");
    simulate->add_option("config", config_path, "configuration file")->required();
    simulate->add_option("-o,--output", output_override, "override the trajectory output path");
    simulate->add_flag("--describe", describe,
                       "print the fully resolved configuration and exit");

    std::string sizes = "8,16,32,64";
    std::string backends = "serial";
    std::string precisions = "f64";
    long long warmup = 5;
    long long measure = 20;
    std::string tsv_path;
    CLI::App* benchmark =
        app.add_subcommand("benchmark", "per-step timing across problem sizes");
    benchmark->add_option("--sizes", sizes, "cube edge sizes, comma separated");
    benchmark->add_option("--backends", backends, "serial and/or parallel");
    benchmark->add_option("--precisions", precisions, "f64 and/or f32");
    benchmark->add_option("--warmup", warmup, "unmeasured steps per combination");
    benchmark->add_option("--measure", measure, "measured steps per combination");
    benchmark->add_option("--tsv", tsv_path, "also write machine-readable rows to this file");

    CLI::App* validate =
        app.add_subcommand("validate", "demag oracle suite and tensor invariants");

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) {
        mmsim_config* cfg = nullptr;
        int status = mmsim_config_load(config_path.c_str(), &cfg);
        if (status != MMSIM_OK) return fail(status);
        if (describe) {
            char* text = nullptr;
            status = mmsim_config_describe(cfg, &text);
            if (status == MMSIM_OK) {
                std::fputs(text, stdout);
                mmsim_string_free(text);
            }
            mmsim_config_free(cfg);
            return status == MMSIM_OK ? 0 : fail(status);
        }
        status = mmsim_simulate(cfg, output_override.empty() ? nullptr : output_override.c_str());
        mmsim_config_free(cfg);
        if (status != MMSIM_OK) return fail(status);
        return 0;
    }

    if (benchmark->parsed()) {
        char* table = nullptr;
        char* tsv = nullptr;
        const int status = mmsim_benchmark(sizes.c_str(), backends.c_str(), precisions.c_str(),
                                           warmup, measure, &table,
                                           tsv_path.empty() ? nullptr : &tsv);
        if (status != MMSIM_OK) return fail(status);
        std::fputs(table, stdout);
        mmsim_string_free(table);
        if (tsv) {
            std::FILE* f = std::fopen(tsv_path.c_str(), "wb");
            if (!f) {
                std::fprintf(stderr, "error: cannot write '%s'\n", tsv_path.c_str());
                mmsim_string_free(tsv);
                return 1;
            }
            std::fputs(tsv, f);
            std::fclose(f);
            mmsim_string_free(tsv);
        }
        return 0;
    }

    if (validate->parsed()) {
        char* report = nullptr;
        const int status = mmsim_validate(&report);
        if (report) {
            std::fputs(report, stdout);
            mmsim_string_free(report);
        }
        if (status != MMSIM_OK && status != MMSIM_ERROR_VALIDATION) return fail(status);
        return exit_code(status);
    }

    return 1;
}
