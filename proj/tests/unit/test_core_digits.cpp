#include <array>
#include <cstdlib>

#include "doctest.h"
#include "newman/core_digits.hpp"
#include "newman/errors.hpp"
#include "oracles.hpp"

using namespace newman;

TEST_CASE("binary_weight") {
    CHECK(binary_weight(0) == 0);
    CHECK(binary_weight(7) == 3);
    for (unsigned k = 0; k < 64; ++k) CHECK(binary_weight(std::uint64_t{1} << k) == 1);
    CHECK(binary_weight(~std::uint64_t{0}) == 64);
}

TEST_CASE("hardware and portable popcount agree") {
    oracle::Gen gen(7);
    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t n = gen.any() >> gen.uniform(0, 63);
        REQUIRE(binary_weight(n) == binary_weight_portable(n));
    }
    for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(binary_weight(n) == oracle::digit_sum(n));
}

TEST_CASE("newman_sign") {
    CHECK(newman_sign(0) == 1);
    CHECK(newman_sign(3) == 1);
    CHECK(newman_sign(7) == -1);
}

TEST_CASE("digit recurrences up to 10^6") {
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        REQUIRE(binary_weight(2 * n) == binary_weight(n));
        REQUIRE(binary_weight(2 * n + 1) == binary_weight(n) + 1);
        REQUIRE(newman_sign(2 * n) == newman_sign(n));
        REQUIRE(newman_sign(2 * n + 1) == -newman_sign(n));
    }
}

TEST_CASE("newman_sum examples") {
    CHECK(newman_sum(3, 6) == 2);
    CHECK(newman_sum(2, 8) == 0);
    for (unsigned k = 1; k <= 20; ++k) CHECK(newman_sum(1, std::uint64_t{1} << k) == 0);
    CHECK(newman_sum(7, 0) == 0);
    CHECK_THROWS_AS(newman_sum(0, 10), InputError);
}

TEST_CASE("newman_sum matches enumeration") {
    for (std::uint64_t m = 1; m <= 12; ++m)
        for (std::uint64_t x = 0; x <= 300; ++x) REQUIRE(newman_sum(m, x) == oracle::newman_sum(m, x));
    oracle::Gen gen(11);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t m = gen.uniform(1, 200), x = gen.uniform(0, 20000);
        REQUIRE(newman_sum(m, x) == oracle::newman_sum(m, x));
    }
}

TEST_CASE("windows partition the sum") {
    oracle::Gen gen(3);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t m = gen.uniform(1, 50);
        const std::uint64_t a = gen.uniform(0, 5000), b = gen.uniform(a, 10000), c = gen.uniform(b, 15000);
        REQUIRE(newman_sum_window(m, 0, a) + newman_sum_window(m, a, b) + newman_sum_window(m, b, c) ==
                newman_sum(m, c));
    }
    CHECK(newman_sum_window(3, 10, 10) == 0);
    CHECK(newman_sum_window(3, 10, 4) == 0);
}

TEST_CASE("|S_2| and |S_4| stay within 1 up to 10^6") {
    std::int64_t s2 = 0, s4 = 0;
    for (std::uint64_t x = 1; x <= 1'000'000; ++x) {
        const std::uint64_t n = x - 1;
        if (n % 2 == 0) s2 += oracle::sign(n);
        if (n % 4 == 0) s4 += oracle::sign(n);
        REQUIRE(std::abs(s2) <= 1);
        REQUIRE(std::abs(s4) <= 1);
    }
    CHECK(s2 == newman_sum(2, 1'000'000));
    CHECK(s4 == newman_sum(4, 1'000'000));
}

TEST_CASE("newman_sum_scan") {
    const std::array<std::uint64_t, 2> cps{6, 9};
    const PartialSumSeries s = newman_sum_scan(3, 10, cps);
    CHECK(s.modulus == 3);
    // multiples of 3 below 9 are 0, 3, 6 with signs +1, +1, +1
    CHECK(s.sums == std::vector<std::int64_t>{2, 3});

    const std::array<std::uint64_t, 1> one{1000};
    CHECK(newman_sum_scan(7, 1000, one).sums.front() == newman_sum(7, 1000));

    std::vector<std::uint64_t> dyadic;
    for (unsigned k = 1; k <= 20; ++k) dyadic.push_back(std::uint64_t{1} << k);
    for (std::int64_t v : newman_sum_scan(1, std::uint64_t{1} << 20, dyadic).sums) CHECK(v == 0);

    const std::array<std::uint64_t, 2> descending{9, 6};
    CHECK_THROWS_AS(newman_sum_scan(3, 10, descending), InputError);
    const std::array<std::uint64_t, 2> repeated{6, 6};
    CHECK_THROWS_AS(newman_sum_scan(3, 10, repeated), InputError);
    const std::array<std::uint64_t, 1> beyond{11};
    CHECK_THROWS_AS(newman_sum_scan(3, 10, beyond), InputError);
}

TEST_CASE("scan agrees with direct sums at random checkpoints") {
    oracle::Gen gen(5);
    for (int round = 0; round < 20; ++round) {
        const std::uint64_t m = gen.uniform(1, 40);
        std::vector<std::uint64_t> cps;
        std::uint64_t x = 0;
        for (int i = 0; i < 10; ++i) cps.push_back(x += gen.uniform(1, 3000));
        const PartialSumSeries s = newman_sum_scan(m, x, cps);
        for (std::size_t i = 0; i < cps.size(); ++i) {
            REQUIRE(s.sums[i] == newman_sum(m, cps[i]));
            if (i > 0) {
                const std::int64_t step = s.sums[i] - s.sums[i - 1];
                REQUIRE(static_cast<std::uint64_t>(std::abs(step)) <=
                        (cps[i] - 1) / m - (cps[i - 1] - 1) / m);
            }
        }
    }
}

TEST_CASE("odd_balance") {
    CHECK(odd_balance(1) == -1);
    CHECK(odd_balance(2) == -1);
    CHECK(odd_balance(10) == 1);
    CHECK(odd_balance(0) == 0);

    std::int64_t running = 0;
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
        if (n % 2 == 1) running += oracle::sign(n);
        REQUIRE(std::abs(running) <= 1);
        if (n % 997 == 0 || n < 100) REQUIRE(odd_balance(n) == running);
    }
}
