#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace nptcert {

// Sums term(i) over i in [0, n).
//
// The index range is split into fixed-size blocks; each block is accumulated
// serially (possibly on different threads) and the block partials are then
// combined in block order. The floating-point result is therefore identical
// for any number of OpenMP threads, which keeps emitted reports byte-stable.
template <typename T, typename TermFn>
T deterministic_block_sum(std::size_t n, TermFn&& term, std::size_t block_size = 4096) {
    if (n == 0) return T{};
    if (block_size == 0) block_size = 1;
    const std::size_t num_blocks = (n + block_size - 1) / block_size;
    std::vector<T> partial(num_blocks, T{});
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(num_blocks); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * block_size;
        const std::size_t end = std::min(n, begin + block_size);
        T acc{};
        for (std::size_t i = begin; i < end; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

} // namespace nptcert
