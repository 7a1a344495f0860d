#include "mmsim/benchmark.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <new>
#include <sstream>

#include "mmsim/problems.hpp"

namespace mmsim {

const BenchmarkRow* BenchmarkReport::find(int n, Backend b, Precision p) const {
    for (const BenchmarkRow& row : rows)
        if (row.n == n && row.backend == b && row.precision == p) return &row;
    return nullptr;
}

BenchmarkReport run_benchmark(const BenchmarkOptions& options) {
    if (options.sizes.empty())
        throw std::invalid_argument("run_benchmark: at least one size is required");
    if (options.steps_measure < 1)
        throw std::invalid_argument("run_benchmark: steps_measure must be >= 1");

    BenchmarkReport report;
    report.options = options;
    for (int n : options.sizes) {
        for (Precision prec : options.precisions) {
            for (Backend backend : options.backends) {
                BenchmarkRow row;
                row.size_label = std::to_string(n) + "^3";
                row.n = n;
                row.backend = backend;
                row.precision = prec;
                try {
                    ProblemSpec spec = standard_problem_3_benchmark(n);
                    spec.steps = options.steps_warmup + options.steps_measure;
                    auto sim = make_simulation(spec, backend, prec);
                    for (std::int64_t s = 0; s < options.steps_warmup; ++s) sim->step();
                    const auto t0 = std::chrono::steady_clock::now();
                    for (std::int64_t s = 0; s < options.steps_measure; ++s) sim->step();
                    const auto t1 = std::chrono::steady_clock::now();
                    const double ms =
                        std::chrono::duration<double, std::milli>(t1 - t0).count() /
                        static_cast<double>(options.steps_measure);
                    row.ms_per_step = ms;
                    row.steps_measured = options.steps_measure;
                    row.ok = true;
                } catch (const std::bad_alloc&) {
                    row.error = "allocation failure";
                } catch (const std::exception& e) {
                    row.error = e.what();
                }
                report.rows.push_back(row);
            }
        }
    }
    return report;
}

namespace {

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", ms);
    return buf;
}

} // namespace

std::string render_table(const BenchmarkReport& report) {
    const auto& opts = report.options;
    const bool have_serial =
        std::find(opts.backends.begin(), opts.backends.end(), Backend::serial) !=
        opts.backends.end();

    std::vector<std::string> headers{"Size"};
    for (Precision p : opts.precisions) {
        for (Backend b : opts.backends) {
            headers.push_back(std::string(to_string(b)) + " " + to_string(p) + " (ms)");
            if (have_serial && b != Backend::serial) headers.push_back("Speedup");
        }
    }

    std::vector<std::vector<std::string>> grid{headers};
    for (int n : opts.sizes) {
        std::vector<std::string> line;
        line.push_back(std::to_string(n) + "^3");
        for (Precision p : opts.precisions) {
            const BenchmarkRow* serial = report.find(n, Backend::serial, p);
            for (Backend b : opts.backends) {
                const BenchmarkRow* row = report.find(n, b, p);
                if (!row) {
                    line.push_back("-");
                } else if (!row->ok) {
                    line.push_back("failed: " + row->error);
                } else {
                    line.push_back(format_ms(row->ms_per_step));
                }
                if (have_serial && b != Backend::serial) {
                    if (row && row->ok && serial && serial->ok && row->ms_per_step > 0.0) {
                        char buf[32];
                        std::snprintf(buf, sizeof buf, "x%.2f",
                                      serial->ms_per_step / row->ms_per_step);
                        line.push_back(buf);
                    } else {
                        line.push_back("-");
                    }
                }
            }
        }
        grid.push_back(line);
    }

    std::vector<std::size_t> widths(headers.size(), 0);
    for (const auto& line : grid)
        for (std::size_t c = 0; c < line.size(); ++c)
            widths[c] = std::max(widths[c], line[c].size());

    std::ostringstream os;
    for (const auto& line : grid) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(widths[c])) << line[c];
            if (c + 1 < line.size()) os << "  ";
        }
        os << "\n";
    }
    return os.str();
}

std::string render_tsv(const BenchmarkReport& report) {
    std::ostringstream os;
    for (const BenchmarkRow& row : report.rows) {
        os << row.size_label << '\t' << to_string(row.backend) << '\t'
           << to_string(row.precision) << '\t';
        if (row.ok) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", row.ms_per_step);
            os << buf;
        } else {
            os << "nan";
        }
        os << '\n';
    }
    return os.str();
}

} // namespace mmsim
