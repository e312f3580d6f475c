#pragma once

// Newman sums over primes and over least-prime-divisor classes
//
//     V_p(n) = { 1 <= j <= n : the least prime divisor of j is p }.
//
// V_p and the prime sums use the closed range [1, n]; S_m keeps its
// half-open [0, x). Identities between the two are written with S(n + 1).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace newman {

inline constexpr std::uint64_t kDefaultSieveBudgetBytes = std::uint64_t{1} << 31;

// Primes below 1000 observed to keep the j > p part of their V_p sums
// negative, as commonly quoted; resonance_scan results are compared to it.
inline constexpr std::uint64_t kReferenceResonancePrimes[] = {
    11, 19, 41, 67, 107, 173, 179, 181, 307, 313,
    421, 431, 433, 587, 601, 631, 641, 647, 727, 787};

// Smallest-prime-factor table for 0..limit (4 bytes per entry).
// spf(0) = 0 and spf(1) = 1 by convention.
class SpfSieve {
public:
    explicit SpfSieve(std::uint64_t limit,
                      std::uint64_t budget_bytes = kDefaultSieveBudgetBytes);

    std::uint64_t limit() const noexcept { return limit_; }
    std::uint32_t spf(std::uint64_t n) const;
    bool is_prime(std::uint64_t n) const;
    std::vector<std::uint32_t> primes_up_to(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

SpfSieve build_spf(std::uint64_t limit, std::uint64_t budget_bytes = kDefaultSieveBudgetBytes);

std::int64_t prime_newman_sum(const SpfSieve& sieve, std::uint64_t n);

struct PrimeSumSeries {
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::int64_t> sums;
};

PrimeSumSeries prime_sum_scan(const SpfSieve& sieve, std::uint64_t n_max,
                              std::span<const std::uint64_t> checkpoints);

// Every n in [lo, n_max] where the prime sum is positive, or where it is
// nonnegative and n >= 31. Both lists are capped at 1000 entries.
struct PrimeSignReport {
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> positive_at;
    std::vector<std::uint64_t> nonnegative_from_31_at;
    std::uint64_t positive_count = 0;
    std::uint64_t nonnegative_from_31_count = 0;
    std::int64_t final_sum = 0;
};

PrimeSignReport prime_sign_scan(const SpfSieve& sieve, std::uint64_t n_max);

// ln(-sum) / ln n; DomainError when the prime sum is not negative.
double conjecture2_ratio(const SpfSieve& sieve, std::uint64_t n);

struct VpReport {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    bool exclude_p = false;
    std::uint64_t members_count = 0;
    std::int64_t sum_with_p = 0;
    std::int64_t sum_excluding_p = 0;

    std::int64_t sum() const noexcept { return exclude_p ? sum_excluding_p : sum_with_p; }
};

VpReport v_p_sum(const SpfSieve& sieve, std::uint64_t p, std::uint64_t n, bool exclude_p = false);

struct Conjecture3Result {
    std::uint64_t n = 0;
    std::int64_t composite_sum = 0;  // sum over 5 <= p <= sqrt n of the j > p parts of V_p(n)
    std::int64_t lhs = 0;            // |composite_sum|
    std::int64_t rhs = 0;            // sum over V_3(n)
    std::int64_t rhs_half_open = 0;  // S_3(n) - S_6(n), which drops j = n when n is in V_3
    bool holds = false;              // lhs < rhs
};

Conjecture3Result conjecture3_check(const SpfSieve& sieve, std::uint64_t n);

// strict_excluding_p: j > p part of V_p(n) stays < 0.
// nonpositive_including_p: whole V_p(n), p included, stays <= 0.
enum class ResonanceCriterion { strict_excluding_p, nonpositive_including_p };

struct ResonanceVerdict {
    std::uint64_t p = 0;
    std::uint64_t n_max = 0;
    bool determinate = true;  // false when n_max < p^2
    bool is_resonance = false;
    std::optional<std::uint64_t> first_nonnegative;
};

// One pass over j <= n_max; every prime 5 <= p <= p_max gets a verdict.
// first_nonnegative holds the first n in [p^2, n_max] where the criterion fails.
std::vector<ResonanceVerdict> resonance_scan(
    const SpfSieve& sieve, std::uint64_t p_max, std::uint64_t n_max,
    ResonanceCriterion criterion = ResonanceCriterion::strict_excluding_p);

double v_p_density(const SpfSieve& sieve, std::uint64_t p, std::uint64_t n);
// (1/p) prod_{q < p} (1 - 1/q)
double v_p_density_limit(std::uint64_t p);
// sum_{p >= 3} |V_p(n)| / n
double density_total(const SpfSieve& sieve, std::uint64_t n);

// -(3 / 2p) prod_{q < p} (1 - 1/q): predicted ratio of the V_p sum to S_3.
double theorem3_constant(std::uint64_t p);

struct Theorem3Entry {
    std::uint64_t n = 0;
    std::int64_t sum = 0;                 // sum over V_p(n)
    std::int64_t s3 = 0;                  // S_3(n + 1), i.e. multiples of 3 in [0, n]
    std::optional<double> log_ratio;      // ln(-sum)/ln n when sum < 0
    std::optional<double> constant_ratio; // sum / (theorem3_constant(p) * s3) when s3 != 0
};

struct Theorem3Series {
    std::uint64_t p = 0;
    double constant = 0.0;
    std::vector<Theorem3Entry> entries;
    std::optional<std::uint64_t> last_nonnegative;  // last n <= final checkpoint with sum >= 0
};

Theorem3Series theorem3_diagnostic(const SpfSieve& sieve, std::uint64_t p,
                                   std::span<const std::uint64_t> checkpoints);

}  // namespace newman
