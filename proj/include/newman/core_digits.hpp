#pragma once

// Binary digit weight, Thue-Morse signs and brute-force Newman sums.
//
// Convention: S_m(x) sums over the half-open range 0 <= n < x, so n = 0
// (sign +1) is always included. Quantities defined on closed ranges
// (odd_balance, V_p) say so explicitly.

#include <cstdint>
#include <span>
#include <vector>

namespace newman {

using BitCount = unsigned;

BitCount binary_weight(std::uint64_t n) noexcept;

// Kernighan loop; kept for cross-checking the hardware popcount.
BitCount binary_weight_portable(std::uint64_t n) noexcept;

// (-1)^{s(n)}: +1 for evil n, -1 for odious n.
inline int newman_sign(std::uint64_t n) noexcept {
    return 1 - 2 * static_cast<int>(binary_weight(n) & 1u);
}

// Sum of (-1)^{s(n)} over 0 <= n < x with m | n. O(x / m).
std::int64_t newman_sum(std::uint64_t m, std::uint64_t x);

// Same sum restricted to multiples of m in [lo, hi).
std::int64_t newman_sum_window(std::uint64_t m, std::uint64_t lo, std::uint64_t hi);

struct PartialSumSeries {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::int64_t> sums;  // sums[i] == newman_sum(modulus, checkpoints[i])
};

// One pass over the multiples of m below the last checkpoint.
// Throws InputError unless checkpoints are strictly ascending and <= x_max.
PartialSumSeries newman_sum_scan(std::uint64_t m, std::uint64_t x_max,
                                 std::span<const std::uint64_t> checkpoints);

// Sum of (-1)^{s(j)} over odd j in [1, n]. Always -1, 0 or +1.
std::int64_t odd_balance(std::uint64_t n);

}  // namespace newman
