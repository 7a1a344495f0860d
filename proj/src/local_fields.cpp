#include "mmsim/local_fields.hpp"

namespace mmsim {

template <typename T>
void add_exchange_field(const VectorField<T>& m, const MaterialParams& params, const Grid& grid,
                        Backend backend, VectorField<T>& h) {
    if (!m.grid.same_shape(grid))
        throw std::invalid_argument("exchange_field: magnetization shape does not match grid");
    require_same_shape(m, h, "exchange_field");

    const T coeff = static_cast<T>(params.exchange_coefficient(grid.delta));
    const std::size_t nx = static_cast<std::size_t>(grid.nx);
    const std::size_t ny = static_cast<std::size_t>(grid.ny);
    const std::size_t nz = static_cast<std::size_t>(grid.nz);
    const std::size_t sx = 1, sy = nx, sz = nx * ny;

    const T* srcs[3] = {m.x.data(), m.y.data(), m.z.data()};
    T* outs[3] = {h.x.data(), h.y.data(), h.z.data()};

    for (int c = 0; c < 3; ++c) {
        const T* src = srcs[c];
        T* out = outs[c];
        // A neighbor missing across the boundary is replaced by the center
        // cell, so its difference term vanishes; degenerate axes (n = 1)
        // contribute nothing.
        for_each_cell(backend, nx * ny * nz, [=](std::size_t f) {
            const std::size_t i = f % nx;
            const std::size_t j = (f / nx) % ny;
            const std::size_t k = f / (nx * ny);
            const T center = src[f];
            T sum = T(0);
            if (i > 0) sum += src[f - sx] - center;
            if (i + 1 < nx) sum += src[f + sx] - center;
            if (j > 0) sum += src[f - sy] - center;
            if (j + 1 < ny) sum += src[f + sy] - center;
            if (k > 0) sum += src[f - sz] - center;
            if (k + 1 < nz) sum += src[f + sz] - center;
            out[f] += coeff * sum;
        });
    }
}

template void add_exchange_field<float>(const VectorField<float>&, const MaterialParams&,
                                        const Grid&, Backend, VectorField<float>&);
template void add_exchange_field<double>(const VectorField<double>&, const MaterialParams&,
                                         const Grid&, Backend, VectorField<double>&);

} // namespace mmsim
