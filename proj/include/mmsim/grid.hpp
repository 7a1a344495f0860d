#pragma once

#include <cstddef>
#include <stdexcept>

namespace mmsim {

// Plain 3-vector. Carries averages and uniform applied-field values, in kA/m
// when it holds magnetization or field data.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }

// Regular finite-difference grid of cubic cells, edge length delta in nm.
struct Grid {
    int nx = 1;
    int ny = 1;
    int nz = 1;
    double delta = 1.0; // nm

    Grid() = default;
    Grid(int nx_, int ny_, int nz_, double delta_)
        : nx(nx_), ny(ny_), nz(nz_), delta(delta_) {
        if (nx < 1 || ny < 1 || nz < 1)
            throw std::invalid_argument("Grid: cell counts must be >= 1");
        if (!(delta > 0.0))
            throw std::invalid_argument("Grid: cell edge length must be > 0");
    }

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }

    // Flattened cell index, x fastest.
    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(nx) *
                   (static_cast<std::size_t>(j) +
                    static_cast<std::size_t>(ny) * static_cast<std::size_t>(k));
    }

    bool same_shape(const Grid& o) const {
        return nx == o.nx && ny == o.ny && nz == o.nz;
    }
};

} // namespace mmsim
