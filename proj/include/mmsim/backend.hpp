#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mmsim {

// Execution backend for the cell-parallel kernels. `serial` is the reference
// path; `parallel` dispatches range chunks to OpenMP threads when the library
// is built with OpenMP, and degrades to the serial path otherwise. Per-cell
// arithmetic is identical on both, and reductions go through fixed-size block
// partials combined in block order, so results match bitwise across backends
// and thread counts.
enum class Backend { serial, parallel };

const char* to_string(Backend b);
Backend backend_from_string(const std::string& name);

// Invokes body(begin, end) on disjoint chunks covering [0, n).
void for_range(Backend b, std::size_t n,
               const std::function<void(std::size_t, std::size_t)>& body);

template <typename F>
void for_each_cell(Backend b, std::size_t n, F&& f) {
    for_range(b, n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) f(i);
    });
}

namespace detail {
inline constexpr std::size_t kReduceBlock = 4096;
}

// Deterministic sum of term(i) over [0, n): per-block partial sums (blocks of
// kReduceBlock cells) are computed possibly in parallel, then combined in
// block order.
template <typename F>
double blocked_sum(Backend b, std::size_t n, F&& term) {
    const std::size_t nblocks = (n + detail::kReduceBlock - 1) / detail::kReduceBlock;
    if (nblocks == 0) return 0.0;
    std::vector<double> partial(nblocks, 0.0);
    for_range(b, nblocks, [&](std::size_t b0, std::size_t b1) {
        for (std::size_t blk = b0; blk < b1; ++blk) {
            const std::size_t lo = blk * detail::kReduceBlock;
            const std::size_t hi = std::min(n, lo + detail::kReduceBlock);
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += term(static_cast<std::size_t>(i));
            partial[blk] = s;
        }
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

// Max of term(i) over [0, n); order-independent, same blocking as blocked_sum.
template <typename F>
double blocked_max(Backend b, std::size_t n, F&& term) {
    const std::size_t nblocks = (n + detail::kReduceBlock - 1) / detail::kReduceBlock;
    if (nblocks == 0) return 0.0;
    std::vector<double> partial(nblocks, 0.0);
    for_range(b, nblocks, [&](std::size_t b0, std::size_t b1) {
        for (std::size_t blk = b0; blk < b1; ++blk) {
            const std::size_t lo = blk * detail::kReduceBlock;
            const std::size_t hi = std::min(n, lo + detail::kReduceBlock);
            double m = 0.0;
            for (std::size_t i = lo; i < hi; ++i) m = std::max(m, term(static_cast<std::size_t>(i)));
            partial[blk] = m;
        }
    });
    double total = 0.0;
    for (double p : partial) total = std::max(total, p);
    return total;
}

} // namespace mmsim
