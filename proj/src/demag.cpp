#include "mmsim/demag.hpp"

#include <cmath>
#include <sstream>

#include "mmsim/errors.hpp"

namespace mmsim {

template <typename T>
SpectralTensor<T> spectral_prepare(const DemagTensor<T>& tensor) {
    SpectralTensor<T> st;
    st.grid = tensor.grid;
    st.dnx = tensor.dnx;
    st.dny = tensor.dny;
    st.dnz = tensor.dnz;
    const std::size_t count = tensor.doubled_count();
    Fft3<T> fft(st.dnx, st.dny, st.dnz);
    auto transform = [&](const std::vector<T>& in, ComplexLattice<T>& out) {
        out.resize(count);
        for (std::size_t i = 0; i < count; ++i) out[i] = std::complex<T>(in[i], T(0));
        fft.forward(out.data());
    };
    transform(tensor.kxx, st.kxx);
    transform(tensor.kxy, st.kxy);
    transform(tensor.kxz, st.kxz);
    transform(tensor.kyy, st.kyy);
    transform(tensor.kyz, st.kyz);
    transform(tensor.kzz, st.kzz);
    return st;
}

template <typename T>
DemagSolver<T>::DemagSolver(std::shared_ptr<const SpectralTensor<T>> spectral, Backend backend)
    : spectral_(std::move(spectral)), backend_(backend),
      fft_(spectral_->dnx, spectral_->dny, spectral_->dnz) {
    const std::size_t count = spectral_->doubled_count();
    mx_.resize(count);
    my_.resize(count);
    mz_.resize(count);
    acc_.resize(count);
}

namespace {

template <typename T>
double residue_tolerance_factor() {
    return sizeof(T) == sizeof(double) ? 1e-9 : 1e-4;
}

} // namespace

template <typename T>
void DemagSolver<T>::compute(const VectorField<T>& m, VectorField<T>& h) {
    const Grid& g = spectral_->grid;
    if (!m.grid.same_shape(g))
        throw std::invalid_argument("demag: magnetization shape does not match tensor grid");
    if (!h.grid.same_shape(g)) h = VectorField<T>(g);

    const std::size_t dnx = spectral_->dnx, dny = spectral_->dny, dnz = spectral_->dnz;
    const std::size_t dcount = dnx * dny * dnz;
    const std::size_t nx = static_cast<std::size_t>(g.nx);
    const std::size_t ny = static_cast<std::size_t>(g.ny);
    const std::size_t nz = static_cast<std::size_t>(g.nz);
    const std::size_t rows = ny * nz;

    // Zero padding: M occupies the low corner of the doubled lattice. Work
    // row-wise along x so the copies stay contiguous.
    std::complex<T>* pads[3] = {mx_.data(), my_.data(), mz_.data()};
    const T* comps[3] = {m.x.data(), m.y.data(), m.z.data()};
    for (int c = 0; c < 3; ++c) {
        std::complex<T>* pad = pads[c];
        const T* src = comps[c];
        for_each_cell(backend_, dcount, [=](std::size_t f) { pad[f] = std::complex<T>(); });
        for_each_cell(backend_, rows, [=](std::size_t r) {
            const std::size_t j = r % ny;
            const std::size_t k = r / ny;
            const T* in = src + nx * r;
            std::complex<T>* out = pad + dnx * (j + dny * k);
            for (std::size_t i = 0; i < nx; ++i) out[i] = std::complex<T>(in[i], T(0));
        });
    }
    fft_.forward(mx_.data());
    fft_.forward(my_.data());
    fft_.forward(mz_.data());

    const double max_m = blocked_max(backend_, m.size(), [&](std::size_t i) {
        return std::max(std::abs(double(m.x[i])),
                        std::max(std::abs(double(m.y[i])), std::abs(double(m.z[i]))));
    });
    const double residue_tol = residue_tolerance_factor<T>() * max_m;

    T* outs[3] = {h.x.data(), h.y.data(), h.z.data()};
    const std::complex<T>* spectra[3][3] = {
        {spectral_->kxx.data(), spectral_->kxy.data(), spectral_->kxz.data()},
        {spectral_->kxy.data(), spectral_->kyy.data(), spectral_->kyz.data()},
        {spectral_->kxz.data(), spectral_->kyz.data(), spectral_->kzz.data()},
    };

    for (int c = 0; c < 3; ++c) {
        // Spelled-out complex multiply-accumulate; std::complex layout is
        // guaranteed to be (re, im) pairs.
        const T* k0 = reinterpret_cast<const T*>(spectra[c][0]);
        const T* k1 = reinterpret_cast<const T*>(spectra[c][1]);
        const T* k2 = reinterpret_cast<const T*>(spectra[c][2]);
        const T* fx = reinterpret_cast<const T*>(mx_.data());
        const T* fy = reinterpret_cast<const T*>(my_.data());
        const T* fz = reinterpret_cast<const T*>(mz_.data());
        T* acc = reinterpret_cast<T*>(acc_.data());
        for_each_cell(backend_, dcount, [=](std::size_t f) {
            const std::size_t re = 2 * f, im = 2 * f + 1;
            acc[re] = fx[re] * k0[re] - fx[im] * k0[im] + fy[re] * k1[re] - fy[im] * k1[im] +
                      fz[re] * k2[re] - fz[im] * k2[im];
            acc[im] = fx[re] * k0[im] + fx[im] * k0[re] + fy[re] * k1[im] + fy[im] * k1[re] +
                      fz[re] * k2[im] + fz[im] * k2[re];
        });
        fft_.inverse(acc_.data());

        // Output cell (i,j,k) sits at padded index (i+nx-1, j+ny-1, k+nz-1);
        // track the imaginary residue there before discarding it.
        T* out = outs[c];
        const std::complex<T>* conv = acc_.data();
        std::vector<double> row_imag(rows, 0.0);
        double* row_imag_ptr = row_imag.data();
        for_each_cell(backend_, rows, [=](std::size_t r) {
            const std::size_t j = r % ny;
            const std::size_t k = r / ny;
            const std::complex<T>* in =
                conv + (nx - 1) + dnx * ((j + ny - 1) + dny * (k + nz - 1));
            T* o = out + nx * r;
            double worst = 0.0;
            for (std::size_t i = 0; i < nx; ++i) {
                o[i] = in[i].real();
                worst = std::max(worst, std::abs(double(in[i].imag())));
            }
            row_imag_ptr[r] = worst;
        });
        double max_imag = 0.0;
        for (double w : row_imag) max_imag = std::max(max_imag, w);
        if (max_imag > residue_tol) {
            std::ostringstream msg;
            msg << "demag: imaginary residue " << max_imag << " exceeds tolerance " << residue_tol
                << " (component " << "xyz"[c] << ")";
            throw numerical_error(msg.str());
        }
    }
}

template <typename T>
VectorField<T> demag_field_fft(const VectorField<T>& m, const SpectralTensor<T>& spectral,
                               Backend backend) {
    // Non-owning share; the transient solver must not outlive `spectral`.
    std::shared_ptr<const SpectralTensor<T>> alias(&spectral, [](const SpectralTensor<T>*) {});
    DemagSolver<T> solver(alias, backend);
    VectorField<T> h(m.grid);
    solver.compute(m, h);
    return h;
}

template <typename T>
VectorField<T> demag_field_direct(const VectorField<T>& m, const DemagTensor<T>& tensor) {
    const Grid& g = tensor.grid;
    if (!m.grid.same_shape(g))
        throw std::invalid_argument("demag_field_direct: shape mismatch");
    VectorField<T> h(m.grid);
    for (int kk = 0; kk < g.nz; ++kk) {
        for (int jj = 0; jj < g.ny; ++jj) {
            for (int ii = 0; ii < g.nx; ++ii) {
                double hx = 0.0, hy = 0.0, hz = 0.0;
                for (int sk = 0; sk < g.nz; ++sk) {
                    for (int sj = 0; sj < g.ny; ++sj) {
                        for (int si = 0; si < g.nx; ++si) {
                            const std::size_t o = tensor.shifted_index(ii - si, jj - sj, kk - sk);
                            const std::size_t s = g.index(si, sj, sk);
                            const double mx = m.x[s], my = m.y[s], mz = m.z[s];
                            hx += tensor.kxx[o] * mx + tensor.kxy[o] * my + tensor.kxz[o] * mz;
                            hy += tensor.kxy[o] * mx + tensor.kyy[o] * my + tensor.kyz[o] * mz;
                            hz += tensor.kxz[o] * mx + tensor.kyz[o] * my + tensor.kzz[o] * mz;
                        }
                    }
                }
                const std::size_t c = g.index(ii, jj, kk);
                h.x[c] = static_cast<T>(hx);
                h.y[c] = static_cast<T>(hy);
                h.z[c] = static_cast<T>(hz);
            }
        }
    }
    return h;
}

template struct SpectralTensor<float>;
template struct SpectralTensor<double>;
template SpectralTensor<float> spectral_prepare<float>(const DemagTensor<float>&);
template SpectralTensor<double> spectral_prepare<double>(const DemagTensor<double>&);
template class DemagSolver<float>;
template class DemagSolver<double>;
template VectorField<float> demag_field_fft<float>(const VectorField<float>&,
                                                   const SpectralTensor<float>&, Backend);
template VectorField<double> demag_field_fft<double>(const VectorField<double>&,
                                                     const SpectralTensor<double>&, Backend);
template VectorField<float> demag_field_direct<float>(const VectorField<float>&,
                                                      const DemagTensor<float>&);
template VectorField<double> demag_field_direct<double>(const VectorField<double>&,
                                                        const DemagTensor<double>&);

} // namespace mmsim
