#include "newman/core_digits.hpp"

#include <bit>
#include <string>

#include "newman/errors.hpp"

namespace newman {

BitCount binary_weight(std::uint64_t n) noexcept {
    return static_cast<BitCount>(std::popcount(n));
}

BitCount binary_weight_portable(std::uint64_t n) noexcept {
    BitCount c = 0;
    while (n != 0) {
        n &= n - 1;
        ++c;
    }
    return c;
}

namespace {

void require_modulus(std::uint64_t m) {
    if (m == 0) throw InputError("modulus must be positive");
}

// Number of multiples of m in [0, x).
std::uint64_t multiples_below(std::uint64_t m, std::uint64_t x) {
    return x == 0 ? 0 : (x - 1) / m + 1;
}

std::int64_t signed_run(std::uint64_t first, std::uint64_t step, std::uint64_t count) {
    // odious terms counted, sum = count - 2 * odious
    std::uint64_t odious = 0;
    std::uint64_t n = first;
    for (std::uint64_t i = 0; i < count; ++i, n += step) odious += std::popcount(n) & 1;
    return static_cast<std::int64_t>(count) - 2 * static_cast<std::int64_t>(odious);
}

}  // namespace

std::int64_t newman_sum(std::uint64_t m, std::uint64_t x) {
    require_modulus(m);
    return signed_run(0, m, multiples_below(m, x));
}

std::int64_t newman_sum_window(std::uint64_t m, std::uint64_t lo, std::uint64_t hi) {
    require_modulus(m);
    if (hi <= lo) return 0;
    const std::uint64_t skip = multiples_below(m, lo);
    const std::uint64_t count = multiples_below(m, hi) - skip;
    return signed_run(skip * m, m, count);
}

PartialSumSeries newman_sum_scan(std::uint64_t m, std::uint64_t x_max,
                                 std::span<const std::uint64_t> checkpoints) {
    require_modulus(m);
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw InputError("checkpoints must be strictly ascending");
        if (checkpoints[i] > x_max)
            throw InputError("checkpoint " + std::to_string(checkpoints[i]) + " exceeds x_max " +
                             std::to_string(x_max));
    }

    PartialSumSeries out;
    out.modulus = m;
    out.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    out.sums.reserve(checkpoints.size());

    std::int64_t running = 0;
    std::uint64_t lo = 0;
    for (std::uint64_t c : checkpoints) {
        running += newman_sum_window(m, lo, c);
        out.sums.push_back(running);
        lo = c;
    }
    return out;
}

std::int64_t odd_balance(std::uint64_t n) {
    // odd j <= n are 2i + 1 for i < ceil(n / 2), and s(2i + 1) = s(i) + 1
    return -newman_sum(1, n / 2 + (n & 1));
}

}  // namespace newman
