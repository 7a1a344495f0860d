#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mmsim/demag_tensor.hpp"

using namespace mmsim;

namespace {

// Independent transcription of the eight-term prism sums, kept separate from
// the library code path: corners are enumerated explicitly and each component
// is evaluated by its own closed form.
struct OracleEntry {
    double xx, xy, xz, yy, yz, zz;
};

OracleEntry oracle_entry(int I, int J, int K, double delta) {
    struct Corner {
        double u, v, w;
        double sign;
    };
    Corner corners[8];
    int c = 0;
    for (int i : {0, 1})
        for (int j : {0, 1})
            for (int k : {0, 1})
                corners[c++] = {I + i - 0.5, J + j - 0.5, K + k - 0.5,
                                ((i + j + k) % 2 == 0) ? +1.0 : -1.0};

    const double quarter_pi_inv = 1.0 / (4.0 * std::numbers::pi);
    OracleEntry e{0, 0, 0, 0, 0, 0};
    for (const Corner& s : corners) {
        const double r = delta * std::hypot(s.u, std::hypot(s.v, s.w));
        e.xx += s.sign * std::atan(s.w * s.v * delta / (r * s.u));
        e.yy += s.sign * std::atan(s.u * s.w * delta / (r * s.v));
        e.zz += s.sign * std::atan(s.v * s.u * delta / (r * s.w));
        e.xy -= s.sign * std::log(s.w * delta + r);
        e.xz -= s.sign * std::log(s.v * delta + r);
        e.yz -= s.sign * std::log(s.u * delta + r);
    }
    e.xx *= quarter_pi_inv;
    e.yy *= quarter_pi_inv;
    e.zz *= quarter_pi_inv;
    e.xy *= quarter_pi_inv;
    e.xz *= quarter_pi_inv;
    e.yz *= quarter_pi_inv;
    return e;
}

} // namespace

TEST_CASE("self-demagnetization entry: kxx = -1/3, kxy = 0") {
    for (double delta : {1.0, 3.0}) {
        const TensorEntry e = demag_tensor_entry(0, 0, 0, delta);
        CHECK(std::abs(e.xx + 1.0 / 3.0) <= 1e-12);
        CHECK(std::abs(e.yy + 1.0 / 3.0) <= 1e-12);
        CHECK(std::abs(e.zz + 1.0 / 3.0) <= 1e-12);
        CHECK(std::abs(e.xy) <= 1e-12);
        CHECK(std::abs(e.xz) <= 1e-12);
        CHECK(std::abs(e.yz) <= 1e-12);
        CHECK(std::abs(e.xx + e.yy + e.zz + 1.0) <= 1e-12);

        const OracleEntry o = oracle_entry(0, 0, 0, delta);
        CHECK(e.xx == doctest::Approx(o.xx).epsilon(1e-14));
        CHECK(std::abs(o.xy) <= 1e-12);
    }
}

TEST_CASE("far-field entries are traceless") {
    const TensorEntry e = demag_tensor_entry(3, 1, 2, 1.0);
    CHECK(std::abs(e.xx + e.yy + e.zz) <= 1e-12);
    const OracleEntry o = oracle_entry(3, 1, 2, 1.0);
    CHECK(std::abs(o.xx + o.yy + o.zz) <= 1e-12);
    CHECK(e.xx == doctest::Approx(o.xx).epsilon(1e-13));
}

TEST_CASE("tensor entries match the independent oracle at random offsets") {
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> off(-9, 9);
    for (int sample = 0; sample < 40; ++sample) {
        const int I = off(rng), J = off(rng), K = off(rng);
        const TensorEntry e = demag_tensor_entry(I, J, K, 2.5);
        const OracleEntry o = oracle_entry(I, J, K, 2.5);
        CHECK(std::abs(e.xx - o.xx) <= 1e-13);
        CHECK(std::abs(e.xy - o.xy) <= 1e-13);
        CHECK(std::abs(e.xz - o.xz) <= 1e-13);
        CHECK(std::abs(e.yy - o.yy) <= 1e-13);
        CHECK(std::abs(e.yz - o.yz) <= 1e-13);
        CHECK(std::abs(e.zz - o.zz) <= 1e-13);
        if (I != 0 || J != 0 || K != 0) CHECK(std::abs(e.xx + e.yy + e.zz) <= 1e-12);
    }
}

TEST_CASE("parity under single-index sign flips") {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> off(-6, 6);
    for (int sample = 0; sample < 25; ++sample) {
        const int I = off(rng), J = off(rng), K = off(rng);
        const TensorEntry e = demag_tensor_entry(I, J, K, 1.0);
        const TensorEntry fi = demag_tensor_entry(-I, J, K, 1.0);
        const TensorEntry fj = demag_tensor_entry(I, -J, K, 1.0);
        const TensorEntry fk = demag_tensor_entry(I, J, -K, 1.0);
        // kxx is even under any single flip.
        CHECK(std::abs(fi.xx - e.xx) <= 1e-12);
        CHECK(std::abs(fj.xx - e.xx) <= 1e-12);
        CHECK(std::abs(fk.xx - e.xx) <= 1e-12);
        // kxy is odd under I or J alone, even under K.
        CHECK(std::abs(fi.xy + e.xy) <= 1e-12);
        CHECK(std::abs(fj.xy + e.xy) <= 1e-12);
        CHECK(std::abs(fk.xy - e.xy) <= 1e-12);
        // Cyclic analogues.
        CHECK(std::abs(fi.xz + e.xz) <= 1e-12);
        CHECK(std::abs(fj.xz - e.xz) <= 1e-12);
        CHECK(std::abs(fk.xz + e.xz) <= 1e-12);
        CHECK(std::abs(fi.yz - e.yz) <= 1e-12);
        CHECK(std::abs(fj.yz + e.yz) <= 1e-12);
        CHECK(std::abs(fk.yz + e.yz) <= 1e-12);
    }
}

TEST_CASE("permutation symmetry under axis relabeling") {
    std::mt19937 rng(13u);
    std::uniform_int_distribution<int> off(-6, 6);
    for (int sample = 0; sample < 25; ++sample) {
        const int I = off(rng), J = off(rng), K = off(rng);
        const TensorEntry e = demag_tensor_entry(I, J, K, 1.0);
        CHECK(std::abs(e.yy - demag_tensor_entry(J, I, K, 1.0).xx) <= 1e-12);
        CHECK(std::abs(e.zz - demag_tensor_entry(K, J, I, 1.0).xx) <= 1e-12);
    }
}

TEST_CASE("build_demag_tensor stores entries at shifted indices") {
    const Grid grid(4, 3, 2, 1.5);
    const auto t = build_demag_tensor<double>(grid);
    CHECK(t.dnx == 8);
    CHECK(t.dny == 6);
    CHECK(t.dnz == 4);

    const TensorEntry self = demag_tensor_entry(0, 0, 0, grid.delta);
    CHECK(t.kxx[t.shifted_index(0, 0, 0)] == doctest::Approx(self.xx).epsilon(1e-15));

    const TensorEntry corner = demag_tensor_entry(-3, 2, -1, grid.delta);
    const std::size_t idx = t.shifted_index(-3, 2, -1);
    CHECK(t.kxy[idx] == doctest::Approx(corner.xy).epsilon(1e-15));
    CHECK(t.kzz[idx] == doctest::Approx(corner.zz).epsilon(1e-15));

    // The final slice per axis stays zero.
    for (std::size_t k = 0; k < t.dnz; ++k)
        for (std::size_t j = 0; j < t.dny; ++j)
            for (std::size_t i = 0; i < t.dnx; ++i) {
                if (i != t.dnx - 1 && j != t.dny - 1 && k != t.dnz - 1) continue;
                const std::size_t f = i + t.dnx * (j + t.dny * k);
                CHECK(t.kxx[f] == 0.0);
                CHECK(t.kxy[f] == 0.0);
                CHECK(t.kxz[f] == 0.0);
                CHECK(t.kyy[f] == 0.0);
                CHECK(t.kyz[f] == 0.0);
                CHECK(t.kzz[f] == 0.0);
            }
}
