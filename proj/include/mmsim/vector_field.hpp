#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mmsim/backend.hpp"
#include "mmsim/errors.hpp"
#include "mmsim/grid.hpp"

namespace mmsim {

// Three scalar lattices holding one vector quantity per cell (magnetization
// or field), x fastest. T is float or double.
template <typename T>
struct VectorField {
    Grid grid;
    std::vector<T> x, y, z;

    VectorField() = default;
    explicit VectorField(const Grid& g)
        : grid(g), x(g.cell_count(), T(0)), y(g.cell_count(), T(0)), z(g.cell_count(), T(0)) {}

    std::size_t size() const { return x.size(); }

    void fill(T vx, T vy, T vz) {
        std::fill(x.begin(), x.end(), vx);
        std::fill(y.begin(), y.end(), vy);
        std::fill(z.begin(), z.end(), vz);
    }
};

template <typename T>
void require_same_shape(const VectorField<T>& a, const VectorField<T>& b, const char* what) {
    if (!a.grid.same_shape(b.grid))
        throw std::invalid_argument(std::string(what) + ": field shapes differ");
}

// Uniform magnetization of magnitude ms along `direction` (normalized here).
template <typename T>
VectorField<T> init_uniform(const Grid& grid, Vec3 direction, double ms) {
    const double norm = std::sqrt(direction.x * direction.x + direction.y * direction.y +
                                  direction.z * direction.z);
    if (!(norm > 0.0))
        throw std::invalid_argument("init_uniform: direction vector must be nonzero");
    VectorField<T> m(grid);
    m.fill(static_cast<T>(ms * direction.x / norm), static_cast<T>(ms * direction.y / norm),
           static_cast<T>(ms * direction.z / norm));
    return m;
}

// Rescales every cell to magnitude ms, keeping its direction. A zero-magnitude
// cell is a numerical degeneracy and is reported by cell index.
template <typename T>
void renormalize(VectorField<T>& m, double ms, Backend backend = Backend::serial) {
    T* mx = m.x.data();
    T* my = m.y.data();
    T* mz = m.z.data();
    std::atomic<std::int64_t> degenerate{-1};
    for_range(backend, m.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const T mag = std::sqrt(mx[i] * mx[i] + my[i] * my[i] + mz[i] * mz[i]);
            if (mag == T(0)) {
                std::int64_t idx = static_cast<std::int64_t>(i);
                std::int64_t cur = degenerate.load(std::memory_order_relaxed);
                while ((cur < 0 || idx < cur) &&
                       !degenerate.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
                }
                continue;
            }
            const T scale = static_cast<T>(ms) / mag;
            mx[i] *= scale;
            my[i] *= scale;
            mz[i] *= scale;
        }
    });
    const std::int64_t bad = degenerate.load();
    if (bad >= 0)
        throw numerical_error("renormalize: zero-magnitude magnetization at cell " +
                              std::to_string(bad));
}

// Arithmetic mean of each component over all cells.
template <typename T>
Vec3 average_magnetization(const VectorField<T>& m, Backend backend = Backend::serial) {
    if (m.size() == 0)
        throw std::invalid_argument("average_magnetization: empty field");
    const double inv = 1.0 / static_cast<double>(m.size());
    const T* mx = m.x.data();
    const T* my = m.y.data();
    const T* mz = m.z.data();
    Vec3 avg;
    avg.x = inv * blocked_sum(backend, m.size(), [&](std::size_t i) { return double(mx[i]); });
    avg.y = inv * blocked_sum(backend, m.size(), [&](std::size_t i) { return double(my[i]); });
    avg.z = inv * blocked_sum(backend, m.size(), [&](std::size_t i) { return double(mz[i]); });
    return avg;
}

} // namespace mmsim
