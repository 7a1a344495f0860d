#include "mmsim/validate.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "mmsim/demag.hpp"
#include "mmsim/demag_tensor.hpp"
#include "mmsim/vector_field.hpp"

namespace mmsim {

bool ValidationReport::all_passed() const {
    for (const ValidationCheck& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

template <typename T>
VectorField<T> random_unit_field(const Grid& grid, double ms, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VectorField<T> m(grid);
    for (std::size_t i = 0; i < m.size(); ++i) {
        double x, y, z, norm;
        do {
            x = dist(rng);
            y = dist(rng);
            z = dist(rng);
            norm = std::sqrt(x * x + y * y + z * z);
        } while (norm < 0.1);
        m.x[i] = static_cast<T>(ms * x / norm);
        m.y[i] = static_cast<T>(ms * y / norm);
        m.z[i] = static_cast<T>(ms * z / norm);
    }
    return m;
}

// max |a - b| over all components, relative to the largest magnitude in b.
template <typename T>
double max_relative_error(const VectorField<T>& a, const VectorField<T>& b) {
    double max_diff = 0.0, max_ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        max_diff = std::max({max_diff, std::abs(double(a.x[i]) - double(b.x[i])),
                             std::abs(double(a.y[i]) - double(b.y[i])),
                             std::abs(double(a.z[i]) - double(b.z[i]))});
        max_ref = std::max({max_ref, std::abs(double(b.x[i])), std::abs(double(b.y[i])),
                            std::abs(double(b.z[i]))});
    }
    return max_ref > 0.0 ? max_diff / max_ref : max_diff;
}

struct Reporter {
    ValidationReport report;

    void check(const std::string& name, bool passed, const std::string& detail) {
        report.checks.push_back({name, passed, detail});
    }

    void check_le(const std::string& name, double value, double bound) {
        std::ostringstream os;
        os << value << " (bound " << bound << ")";
        check(name, value <= bound, os.str());
    }
};

template <typename T>
void check_fft_vs_direct(Reporter& rep, const Grid& grid, double tol, const char* label) {
    const double ms = 800.0;
    const auto tensor = build_demag_tensor<T>(grid);
    const auto spectral = spectral_prepare(tensor);
    const auto m = random_unit_field<T>(grid, ms, 20240u + static_cast<unsigned>(grid.nx));
    const auto h_fft = demag_field_fft(m, spectral);
    const auto h_direct = demag_field_direct(m, tensor);
    std::ostringstream name;
    name << "fft-vs-direct " << label << " " << grid.nx << "x" << grid.ny << "x" << grid.nz;
    rep.check_le(name.str(), max_relative_error(h_fft, h_direct), tol);
}

} // namespace

ValidationReport run_validation() {
    Reporter rep;

    // Tensor invariants at the self offset.
    {
        const TensorEntry e0 = demag_tensor_entry(0, 0, 0, 1.0);
        rep.check_le("tensor trace at zero offset (+1)", std::abs(e0.xx + e0.yy + e0.zz + 1.0),
                     1e-12);
        rep.check_le("tensor kxy at zero offset", std::abs(e0.xy), 1e-12);
    }

    // Traceless far field, parity, and permutation symmetry at sampled offsets.
    {
        std::mt19937 rng(7u);
        std::uniform_int_distribution<int> di(-7, 7), dk(-3, 3);
        double worst_trace = 0.0, worst_parity = 0.0, worst_perm = 0.0;
        int sampled = 0;
        while (sampled < 50) {
            const int I = di(rng), J = di(rng), K = dk(rng);
            if (I == 0 && J == 0 && K == 0) continue;
            ++sampled;
            const TensorEntry e = demag_tensor_entry(I, J, K, 1.0);
            worst_trace = std::max(worst_trace, std::abs(e.xx + e.yy + e.zz));

            const TensorEntry fi = demag_tensor_entry(-I, J, K, 1.0);
            const TensorEntry fj = demag_tensor_entry(I, -J, K, 1.0);
            const TensorEntry fk = demag_tensor_entry(I, J, -K, 1.0);
            worst_parity = std::max({worst_parity,
                                     std::abs(fi.xx - e.xx), std::abs(fj.xx - e.xx),
                                     std::abs(fk.xx - e.xx),
                                     std::abs(fi.xy + e.xy), std::abs(fj.xy + e.xy),
                                     std::abs(fk.xy - e.xy),
                                     std::abs(fi.xz + e.xz), std::abs(fj.xz - e.xz),
                                     std::abs(fk.xz + e.xz),
                                     std::abs(fi.yz - e.yz), std::abs(fj.yz + e.yz),
                                     std::abs(fk.yz + e.yz)});

            const TensorEntry pxy = demag_tensor_entry(J, I, K, 1.0);
            const TensorEntry pxz = demag_tensor_entry(K, J, I, 1.0);
            worst_perm = std::max({worst_perm, std::abs(e.yy - pxy.xx),
                                   std::abs(e.zz - pxz.xx)});
        }
        rep.check_le("tensor trace at 50 nonzero offsets", worst_trace, 1e-12);
        rep.check_le("tensor parity symmetry", worst_parity, 1e-12);
        rep.check_le("tensor permutation symmetry", worst_perm, 1e-12);
    }

    // Spectral path against the quadratic dipolar sum.
    check_fft_vs_direct<double>(rep, Grid(4, 4, 2, 1.0), 1e-10, "f64");
    check_fft_vs_direct<double>(rep, Grid(8, 8, 4, 1.0), 1e-10, "f64");
    check_fft_vs_direct<double>(rep, Grid(5, 3, 2, 1.0), 1e-10, "f64");
    check_fft_vs_direct<float>(rep, Grid(8, 8, 4, 1.0), 1e-4, "f32");

    // Linearity of the spectral path.
    {
        const Grid grid(6, 5, 3, 1.0);
        const auto tensor = build_demag_tensor<double>(grid);
        const auto spectral = spectral_prepare(tensor);
        const auto m1 = random_unit_field<double>(grid, 1.0, 11u);
        const auto m2 = random_unit_field<double>(grid, 1.0, 12u);
        VectorField<double> combo(grid);
        const double a = 2.5, b = -0.75;
        for (std::size_t i = 0; i < combo.size(); ++i) {
            combo.x[i] = a * m1.x[i] + b * m2.x[i];
            combo.y[i] = a * m1.y[i] + b * m2.y[i];
            combo.z[i] = a * m1.z[i] + b * m2.z[i];
        }
        const auto h1 = demag_field_fft(m1, spectral);
        const auto h2 = demag_field_fft(m2, spectral);
        const auto hc = demag_field_fft(combo, spectral);
        VectorField<double> expect(grid);
        for (std::size_t i = 0; i < expect.size(); ++i) {
            expect.x[i] = a * h1.x[i] + b * h2.x[i];
            expect.y[i] = a * h1.y[i] + b * h2.y[i];
            expect.z[i] = a * h1.z[i] + b * h2.z[i];
        }
        rep.check_le("fft linearity", max_relative_error(hc, expect), 1e-10);
    }

    // Shape factors: cube -1/3, extended thin film -> demag factor near 1.
    {
        const double ms = 800.0;
        const Grid cube(8, 8, 8, 1.0);
        const auto tensor = build_demag_tensor<double>(cube);
        const auto spectral = spectral_prepare(tensor);
        const auto m = init_uniform<double>(cube, {1.0, 0.0, 0.0}, ms);
        const auto h = demag_field_fft(m, spectral);
        const Vec3 avg = average_magnetization(h);
        rep.check_le("cube shape factor (avg Hx vs -ms/3)",
                     std::abs(avg.x + ms / 3.0) / (ms / 3.0), 0.02);
    }
    {
        const double ms = 800.0;
        const Grid film(64, 64, 1, 1.0);
        const auto tensor = build_demag_tensor<double>(film);
        const auto spectral = spectral_prepare(tensor);
        const auto m = init_uniform<double>(film, {0.0, 0.0, 1.0}, ms);
        const auto h = demag_field_fft(m, spectral);
        const double hz = h.z[film.index(32, 32, 0)];
        std::ostringstream os;
        os << "Hz = " << hz << " (want within [-ms, -0.95 ms], ms = " << ms << ")";
        rep.check("thin-film central demag factor", hz >= -ms && hz <= -0.95 * ms, os.str());
    }

    return rep.report;
}

std::string render_report(const ValidationReport& report) {
    std::ostringstream os;
    for (const ValidationCheck& c : report.checks)
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    os << (report.all_passed() ? "all checks passed" : "VALIDATION FAILED") << "\n";
    return os.str();
}

} // namespace mmsim
