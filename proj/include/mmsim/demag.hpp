#pragma once

#include <complex>
#include <cstddef>
#include <memory>

#include "mmsim/backend.hpp"
#include "mmsim/demag_tensor.hpp"
#include "mmsim/fft.hpp"
#include "mmsim/grid.hpp"
#include "mmsim/vector_field.hpp"

namespace mmsim {

// Forward transforms of the six tensor components on the doubled grid.
// Built once per (grid, delta) pair, immutable afterwards, shareable.
template <typename T>
struct SpectralTensor {
    Grid grid;
    std::size_t dnx = 0, dny = 0, dnz = 0;
    ComplexLattice<T> kxx, kxy, kxz, kyy, kyz, kzz;

    std::size_t doubled_count() const { return dnx * dny * dnz; }
};

template <typename T>
SpectralTensor<T> spectral_prepare(const DemagTensor<T>& tensor);

// Per-step spectral evaluation of the demag field: zero-pad M to the doubled
// grid, multiply spectra per the tensor matrix-vector form, inverse transform,
// take the real part at the extraction window. Owns the FFT plans and the
// complex scratch, so one instance serves a whole run.
template <typename T>
class DemagSolver {
public:
    DemagSolver(std::shared_ptr<const SpectralTensor<T>> spectral, Backend backend);

    // h gets the demag field of m (h is overwritten). Throws numerical_error
    // if the imaginary residue before the real-part extraction exceeds
    // tolerance (1e-9 * max|M| in f64, 1e-4 * max|M| in f32).
    void compute(const VectorField<T>& m, VectorField<T>& h);

    const Grid& grid() const { return spectral_->grid; }

private:
    std::shared_ptr<const SpectralTensor<T>> spectral_;
    Backend backend_;
    Fft3<T> fft_;
    ComplexLattice<T> mx_, my_, mz_, acc_;
};

// One-shot convenience form of the spectral path.
template <typename T>
VectorField<T> demag_field_fft(const VectorField<T>& m, const SpectralTensor<T>& spectral,
                               Backend backend = Backend::serial);

// Brute-force dipolar sum over all cell pairs, reading tensor entries at raw
// offsets. Quadratic cost; the independent check for the spectral path.
template <typename T>
VectorField<T> demag_field_direct(const VectorField<T>& m, const DemagTensor<T>& tensor);

extern template struct SpectralTensor<float>;
extern template struct SpectralTensor<double>;
extern template SpectralTensor<float> spectral_prepare<float>(const DemagTensor<float>&);
extern template SpectralTensor<double> spectral_prepare<double>(const DemagTensor<double>&);
extern template class DemagSolver<float>;
extern template class DemagSolver<double>;
extern template VectorField<float> demag_field_fft<float>(const VectorField<float>&,
                                                          const SpectralTensor<float>&, Backend);
extern template VectorField<double> demag_field_fft<double>(const VectorField<double>&,
                                                            const SpectralTensor<double>&, Backend);
extern template VectorField<float> demag_field_direct<float>(const VectorField<float>&,
                                                             const DemagTensor<float>&);
extern template VectorField<double> demag_field_direct<double>(const VectorField<double>&,
                                                               const DemagTensor<double>&);

} // namespace mmsim
