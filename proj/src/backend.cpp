#include "mmsim/backend.hpp"

#include <stdexcept>

#ifdef MMSIM_HAVE_OPENMP
#include <omp.h>
#endif

namespace mmsim {

const char* to_string(Backend b) {
    return b == Backend::serial ? "serial" : "parallel";
}

Backend backend_from_string(const std::string& name) {
    if (name == "serial") return Backend::serial;
    if (name == "parallel") return Backend::parallel;
    throw std::invalid_argument("unknown backend '" + name + "' (expected serial or parallel)");
}

void for_range(Backend b, std::size_t n,
               const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
#ifdef MMSIM_HAVE_OPENMP
    if (b == Backend::parallel) {
#pragma omp parallel
        {
            const std::size_t nthreads = static_cast<std::size_t>(omp_get_num_threads());
            const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
            const std::size_t chunk = (n + nthreads - 1) / nthreads;
            const std::size_t begin = std::min(n, tid * chunk);
            const std::size_t end = std::min(n, begin + chunk);
            if (begin < end) body(begin, end);
        }
        return;
    }
#else
    (void)b;
#endif
    body(0, n);
}

} // namespace mmsim
