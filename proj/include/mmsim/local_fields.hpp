#pragma once

#include "mmsim/backend.hpp"
#include "mmsim/grid.hpp"
#include "mmsim/material.hpp"
#include "mmsim/vector_field.hpp"

namespace mmsim {

// Six-neighbor exchange stencil with Neumann boundaries (a missing neighbor is
// the center cell, contributing zero). Accumulates into h.
template <typename T>
void add_exchange_field(const VectorField<T>& m, const MaterialParams& params, const Grid& grid,
                        Backend backend, VectorField<T>& h);

template <typename T>
VectorField<T> exchange_field(const VectorField<T>& m, const MaterialParams& params,
                              const Grid& grid, Backend backend = Backend::serial) {
    VectorField<T> h(m.grid);
    add_exchange_field(m, params, grid, backend, h);
    return h;
}

// Uniaxial anisotropy, easy axis fixed along +x: H = (hk/ms * Mx, 0, 0).
template <typename T>
void add_anisotropy_field(const VectorField<T>& m, const MaterialParams& params, Backend backend,
                          VectorField<T>& h) {
    const T coeff = static_cast<T>(params.hk / params.ms);
    const T* mx = m.x.data();
    T* hx = h.x.data();
    for_each_cell(backend, m.size(), [=](std::size_t i) { hx[i] += coeff * mx[i]; });
}

template <typename T>
VectorField<T> anisotropy_field(const VectorField<T>& m, const MaterialParams& params,
                                Backend backend = Backend::serial) {
    VectorField<T> h(m.grid);
    add_anisotropy_field(m, params, backend, h);
    return h;
}

template <typename T>
void add_uniform_field(Vec3 value, Backend backend, VectorField<T>& h) {
    const T vx = static_cast<T>(value.x);
    const T vy = static_cast<T>(value.y);
    const T vz = static_cast<T>(value.z);
    T* hx = h.x.data();
    T* hy = h.y.data();
    T* hz = h.z.data();
    for_each_cell(backend, h.size(), [=](std::size_t i) {
        hx[i] += vx;
        hy[i] += vy;
        hz[i] += vz;
    });
}

// Componentwise sum of the three cell fields plus the uniform applied field.
template <typename T>
VectorField<T> effective_field(const VectorField<T>& h_demag, const VectorField<T>& h_exch,
                               const VectorField<T>& h_anis, Vec3 h_applied,
                               Backend backend = Backend::serial) {
    require_same_shape(h_demag, h_exch, "effective_field");
    require_same_shape(h_demag, h_anis, "effective_field");
    VectorField<T> h(h_demag.grid);
    const T ax = static_cast<T>(h_applied.x);
    const T ay = static_cast<T>(h_applied.y);
    const T az = static_cast<T>(h_applied.z);
    const T* dx = h_demag.x.data();
    const T* dy = h_demag.y.data();
    const T* dz = h_demag.z.data();
    const T* ex = h_exch.x.data();
    const T* ey = h_exch.y.data();
    const T* ez = h_exch.z.data();
    const T* nx = h_anis.x.data();
    const T* ny = h_anis.y.data();
    const T* nz = h_anis.z.data();
    T* hx = h.x.data();
    T* hy = h.y.data();
    T* hz = h.z.data();
    for_each_cell(backend, h.size(), [=](std::size_t i) {
        hx[i] = dx[i] + ex[i] + nx[i] + ax;
        hy[i] = dy[i] + ey[i] + ny[i] + ay;
        hz[i] = dz[i] + ez[i] + nz[i] + az;
    });
    return h;
}

extern template void add_exchange_field<float>(const VectorField<float>&, const MaterialParams&,
                                               const Grid&, Backend, VectorField<float>&);
extern template void add_exchange_field<double>(const VectorField<double>&, const MaterialParams&,
                                                const Grid&, Backend, VectorField<double>&);

} // namespace mmsim
