#include "mmsim/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace mmsim {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex g_plan_mutex;

template <typename T>
struct FftwApi;

template <>
struct FftwApi<double> {
    using complex = fftw_complex;
    using plan = fftw_plan;
    static plan plan_dft_3d(int n0, int n1, int n2, complex* in, complex* out, int sign,
                            unsigned flags) {
        return fftw_plan_dft_3d(n0, n1, n2, in, out, sign, flags);
    }
    static void execute_dft(plan p, complex* in, complex* out) { fftw_execute_dft(p, in, out); }
    static void destroy(plan p) { fftw_destroy_plan(p); }
};

template <>
struct FftwApi<float> {
    using complex = fftwf_complex;
    using plan = fftwf_plan;
    static plan plan_dft_3d(int n0, int n1, int n2, complex* in, complex* out, int sign,
                            unsigned flags) {
        return fftwf_plan_dft_3d(n0, n1, n2, in, out, sign, flags);
    }
    static void execute_dft(plan p, complex* in, complex* out) { fftwf_execute_dft(p, in, out); }
    static void destroy(plan p) { fftwf_destroy_plan(p); }
};

} // namespace

template <typename T>
Fft3<T>::Fft3(std::size_t nx, std::size_t ny, std::size_t nz) : count_(nx * ny * nz) {
    using Api = FftwApi<T>;
    if (count_ == 0) throw std::invalid_argument("Fft3: empty transform");
    // Storage is x fastest, so the row-major dims passed to FFTW are reversed.
    // Plans are created on a scratch buffer with the project-wide 64-byte
    // alignment and replayed on any equally aligned lattice. FFTW_ESTIMATE
    // keeps planning deterministic run to run.
    ComplexLattice<T> scratch(count_);
    auto* data = reinterpret_cast<typename Api::complex*>(scratch.data());
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    plan_forward_ = Api::plan_dft_3d(static_cast<int>(nz), static_cast<int>(ny),
                                     static_cast<int>(nx), data, data, FFTW_FORWARD,
                                     FFTW_ESTIMATE);
    plan_inverse_ = Api::plan_dft_3d(static_cast<int>(nz), static_cast<int>(ny),
                                     static_cast<int>(nx), data, data, FFTW_BACKWARD,
                                     FFTW_ESTIMATE);
    if (!plan_forward_ || !plan_inverse_) throw std::runtime_error("Fft3: FFTW planning failed");
}

template <typename T>
Fft3<T>::~Fft3() {
    using Api = FftwApi<T>;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    if (plan_forward_) Api::destroy(static_cast<typename Api::plan>(plan_forward_));
    if (plan_inverse_) Api::destroy(static_cast<typename Api::plan>(plan_inverse_));
}

template <typename T>
Fft3<T>::Fft3(Fft3&& other) noexcept
    : plan_forward_(other.plan_forward_), plan_inverse_(other.plan_inverse_),
      count_(other.count_) {
    other.plan_forward_ = nullptr;
    other.plan_inverse_ = nullptr;
}

template <typename T>
Fft3<T>& Fft3<T>::operator=(Fft3&& other) noexcept {
    if (this != &other) {
        using Api = FftwApi<T>;
        {
            std::lock_guard<std::mutex> lock(g_plan_mutex);
            if (plan_forward_) Api::destroy(static_cast<typename Api::plan>(plan_forward_));
            if (plan_inverse_) Api::destroy(static_cast<typename Api::plan>(plan_inverse_));
        }
        plan_forward_ = other.plan_forward_;
        plan_inverse_ = other.plan_inverse_;
        count_ = other.count_;
        other.plan_forward_ = nullptr;
        other.plan_inverse_ = nullptr;
    }
    return *this;
}

template <typename T>
void Fft3<T>::forward(std::complex<T>* data) const {
    using Api = FftwApi<T>;
    auto* d = reinterpret_cast<typename Api::complex*>(data);
    Api::execute_dft(static_cast<typename Api::plan>(plan_forward_), d, d);
}

template <typename T>
void Fft3<T>::inverse(std::complex<T>* data) const {
    using Api = FftwApi<T>;
    auto* d = reinterpret_cast<typename Api::complex*>(data);
    Api::execute_dft(static_cast<typename Api::plan>(plan_inverse_), d, d);
    const T scale = T(1) / static_cast<T>(count_);
    for (std::size_t i = 0; i < count_; ++i) data[i] *= scale;
}

template class Fft3<float>;
template class Fft3<double>;

} // namespace mmsim
