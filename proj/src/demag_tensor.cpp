#include "mmsim/demag_tensor.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace mmsim {

TensorEntry demag_tensor_entry(int I, int J, int K, double delta) {
    TensorEntry e;
    for (int i = 0; i <= 1; ++i) {
        for (int j = 0; j <= 1; ++j) {
            for (int k = 0; k <= 1; ++k) {
                const double sign = ((i + j + k) & 1) ? -1.0 : 1.0;
                const double x = I + i - 0.5;
                const double y = J + j - 0.5;
                const double z = K + k - 0.5;
                const double r = delta * std::sqrt(x * x + y * y + z * z);
                // Principal-branch arctangent on the diagonal; the half-integer
                // coordinates keep every denominator away from zero.
                e.xx += sign * std::atan(z * y * delta / (r * x));
                e.yy += sign * std::atan(x * z * delta / (r * y));
                e.zz += sign * std::atan(y * x * delta / (r * z));
                // r exceeds |c|*delta for any single coordinate c (the other two
                // are nonzero half-integers), so the log arguments stay positive.
                assert(z * delta + r > 0.0);
                assert(y * delta + r > 0.0);
                assert(x * delta + r > 0.0);
                e.xy += sign * std::log(z * delta + r);
                e.xz += sign * std::log(y * delta + r);
                e.yz += sign * std::log(x * delta + r);
            }
        }
    }
    const double p = 1.0 / (4.0 * std::numbers::pi);
    e.xx *= p;
    e.yy *= p;
    e.zz *= p;
    e.xy *= -p;
    e.xz *= -p;
    e.yz *= -p;
    return e;
}

template <typename T>
DemagTensor<T> build_demag_tensor(const Grid& grid, Backend backend) {
    DemagTensor<T> t;
    t.grid = grid;
    t.dnx = 2 * static_cast<std::size_t>(grid.nx);
    t.dny = 2 * static_cast<std::size_t>(grid.ny);
    t.dnz = 2 * static_cast<std::size_t>(grid.nz);
    const std::size_t count = t.doubled_count();
    t.kxx.assign(count, T(0));
    t.kxy.assign(count, T(0));
    t.kxz.assign(count, T(0));
    t.kyy.assign(count, T(0));
    t.kyz.assign(count, T(0));
    t.kzz.assign(count, T(0));

    const std::size_t snx = static_cast<std::size_t>(2 * grid.nx - 1);
    const std::size_t sny = static_cast<std::size_t>(2 * grid.ny - 1);
    const std::size_t snz = static_cast<std::size_t>(2 * grid.nz - 1);
    const double delta = grid.delta;

    // Every representable offset, including (0,0,0): the self term belongs in
    // the kernel (it carries the -1/3 diagonal of a cube and the cube /
    // thin-film limits depend on it).
    for_each_cell(backend, snx * sny * snz, [&](std::size_t flat) {
        const int oi = static_cast<int>(flat % snx) - (grid.nx - 1);
        const int oj = static_cast<int>((flat / snx) % sny) - (grid.ny - 1);
        const int ok = static_cast<int>(flat / (snx * sny)) - (grid.nz - 1);
        const TensorEntry e = demag_tensor_entry(oi, oj, ok, delta);
        const std::size_t idx = t.shifted_index(oi, oj, ok);
        t.kxx[idx] = static_cast<T>(e.xx);
        t.kxy[idx] = static_cast<T>(e.xy);
        t.kxz[idx] = static_cast<T>(e.xz);
        t.kyy[idx] = static_cast<T>(e.yy);
        t.kyz[idx] = static_cast<T>(e.yz);
        t.kzz[idx] = static_cast<T>(e.zz);
    });
    return t;
}

template DemagTensor<float> build_demag_tensor<float>(const Grid&, Backend);
template DemagTensor<double> build_demag_tensor<double>(const Grid&, Backend);

} // namespace mmsim
