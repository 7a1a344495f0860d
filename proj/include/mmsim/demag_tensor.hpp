#pragma once

#include <cstddef>
#include <vector>

#include "mmsim/backend.hpp"
#include "mmsim/grid.hpp"

namespace mmsim {

// Demagnetization tensor on the doubled grid (2nx, 2ny, 2nz), dimensionless.
// The entry for cell offset (I, J, K), with -n+1 <= offset <= n-1 per axis, is
// stored at shifted index (offset + n - 1); the final slice per axis stays
// zero so that circular convolution on the doubled grid equals the linear
// dipolar sum.
template <typename T>
struct DemagTensor {
    Grid grid;                       // original (undoubled) grid
    std::size_t dnx = 0, dny = 0, dnz = 0;
    std::vector<T> kxx, kxy, kxz, kyy, kyz, kzz;

    std::size_t doubled_count() const { return dnx * dny * dnz; }

    std::size_t shifted_index(int offset_i, int offset_j, int offset_k) const {
        const std::size_t li = static_cast<std::size_t>(offset_i + grid.nx - 1);
        const std::size_t lj = static_cast<std::size_t>(offset_j + grid.ny - 1);
        const std::size_t lk = static_cast<std::size_t>(offset_k + grid.nz - 1);
        return li + dnx * (lj + dny * lk);
    }
};

// One tensor entry: the six components at a single cell offset.
struct TensorEntry {
    double xx = 0.0, xy = 0.0, xz = 0.0, yy = 0.0, yz = 0.0, zz = 0.0;
};

// Eight-term prism sums for offset (I, J, K): arctangent form on the diagonal,
// logarithm form off the diagonal. Valid at every offset including (0,0,0),
// where it yields the self-demagnetization entry (trace -1).
TensorEntry demag_tensor_entry(int I, int J, int K, double delta);

// Tensor over all offsets of the doubled grid. Computed in double precision
// and narrowed to T on store.
template <typename T>
DemagTensor<T> build_demag_tensor(const Grid& grid, Backend backend = Backend::serial);

extern template DemagTensor<float> build_demag_tensor<float>(const Grid&, Backend);
extern template DemagTensor<double> build_demag_tensor<double>(const Grid&, Backend);

} // namespace mmsim
