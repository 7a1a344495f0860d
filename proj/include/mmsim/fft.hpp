#pragma once

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <new>
#include <vector>

namespace mmsim {

// 64-byte aligned allocator so every complex lattice shares one FFTW
// alignment class; plans created on one buffer then run on any other.
template <typename T>
struct AlignedAllocator {
    using value_type = T;
    static constexpr std::size_t kAlign = 64;

    AlignedAllocator() = default;
    template <typename U>
    AlignedAllocator(const AlignedAllocator<U>&) {}

    T* allocate(std::size_t n) {
        const std::size_t bytes = ((n * sizeof(T) + kAlign - 1) / kAlign) * kAlign;
        void* p = std::aligned_alloc(kAlign, bytes);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { std::free(p); }

    template <typename U>
    bool operator==(const AlignedAllocator<U>&) const { return true; }
};

template <typename T>
using AlignedVector = std::vector<T, AlignedAllocator<T>>;

template <typename T>
using ComplexLattice = AlignedVector<std::complex<T>>;

// In-place complex 3-D transforms of an (nx, ny, nz) lattice stored x fastest.
// Plans are created once (FFTW_ESTIMATE, deterministic) and reused on any
// 64-byte aligned buffer of the same shape. forward() is unnormalized,
// inverse() scales by 1/(nx ny nz), matching the fftn/ifftn convention.
template <typename T>
class Fft3 {
public:
    Fft3(std::size_t nx, std::size_t ny, std::size_t nz);
    ~Fft3();

    Fft3(Fft3&& other) noexcept;
    Fft3& operator=(Fft3&& other) noexcept;
    Fft3(const Fft3&) = delete;
    Fft3& operator=(const Fft3&) = delete;

    void forward(std::complex<T>* data) const;
    void inverse(std::complex<T>* data) const;

    std::size_t count() const { return count_; }

private:
    void* plan_forward_ = nullptr;
    void* plan_inverse_ = nullptr;
    std::size_t count_ = 0;
};

extern template class Fft3<float>;
extern template class Fft3<double>;

} // namespace mmsim
