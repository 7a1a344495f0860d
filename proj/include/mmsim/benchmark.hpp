#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmsim/backend.hpp"
#include "mmsim/llg.hpp"

namespace mmsim {

struct BenchmarkOptions {
    std::vector<int> sizes;              // cells per cube edge
    std::vector<Backend> backends{Backend::serial};
    std::vector<Precision> precisions{Precision::f64};
    std::int64_t steps_warmup = 5;
    std::int64_t steps_measure = 20;
};

struct BenchmarkRow {
    std::string size_label; // "8^3"
    int n = 0;
    Backend backend = Backend::serial;
    Precision precision = Precision::f64;
    double ms_per_step = 0.0;
    std::int64_t steps_measured = 0;
    bool ok = false;
    std::string error; // set when ok is false (e.g. allocation failure)
};

struct BenchmarkReport {
    BenchmarkOptions options;
    std::vector<BenchmarkRow> rows;

    const BenchmarkRow* find(int n, Backend b, Precision p) const;
};

// Runs the cube-relaxation benchmark for every (size, backend, precision)
// combination: warmup steps unmeasured, then the mean wall time per step over
// steps_measure. An allocation failure marks its row and the remaining rows
// still run.
BenchmarkReport run_benchmark(const BenchmarkOptions& options);

// Aligned text table, one row per size, per-combination ms columns and a
// speedup column (serial time / backend time, same precision) after each
// non-serial backend.
std::string render_table(const BenchmarkReport& report);

// Machine-readable rows: size<TAB>backend<TAB>precision<TAB>ms_per_step.
std::string render_tsv(const BenchmarkReport& report);

} // namespace mmsim
