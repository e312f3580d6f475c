#include "newman/prime_sums.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "newman/core_digits.hpp"
#include "newman/errors.hpp"

namespace newman {

namespace {

void require_within(const SpfSieve& sieve, std::uint64_t n, const char* what) {
    if (n > sieve.limit())
        throw InputError(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the sieve limit " + std::to_string(sieve.limit()));
}

void require_prime(const SpfSieve& sieve, std::uint64_t p, const char* what) {
    require_within(sieve, p, what);
    if (!sieve.is_prime(p)) throw InputError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

void require_ascending(std::span<const std::uint64_t> checkpoints, std::uint64_t bound) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw InputError("checkpoints must be strictly ascending");
        if (checkpoints[i] > bound)
            throw InputError("checkpoint " + std::to_string(checkpoints[i]) + " exceeds " +
                             std::to_string(bound));
    }
}

void push_capped(std::vector<std::uint64_t>& v, std::uint64_t x) {
    if (v.size() < 1000) v.push_back(x);
}

}  // namespace

SpfSieve::SpfSieve(std::uint64_t limit, std::uint64_t budget_bytes) : limit_(limit) {
    if (limit < 2) throw InputError("SpfSieve: limit must be at least 2");
    if (limit >= std::numeric_limits<std::uint32_t>::max())
        throw ResourceError("SpfSieve: limit " + std::to_string(limit) + " does not fit 32-bit entries");
    const std::uint64_t bytes = (limit + 1) * sizeof(std::uint32_t);
    if (bytes > budget_bytes)
        throw ResourceError("SpfSieve: " + std::to_string(bytes) + " bytes needed, budget is " +
                            std::to_string(budget_bytes));

    spf_.assign(limit + 1, 0);
    spf_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::uint32_t SpfSieve::spf(std::uint64_t n) const {
    if (n > limit_) throw InputError("SpfSieve: query " + std::to_string(n) + " beyond limit");
    return spf_[n];
}

bool SpfSieve::is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }

std::vector<std::uint32_t> SpfSieve::primes_up_to(std::uint64_t n) const {
    require_within(*this, n, "primes_up_to");
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= n; ++i)
        if (spf_[i] == i) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

SpfSieve build_spf(std::uint64_t limit, std::uint64_t budget_bytes) {
    return SpfSieve(limit, budget_bytes);
}

std::int64_t prime_newman_sum(const SpfSieve& sieve, std::uint64_t n) {
    if (n < 2) return 0;
    require_within(sieve, n, "prime_newman_sum");
    std::int64_t sum = 0;
    for (std::uint64_t j = 2; j <= n; ++j)
        if (sieve.spf(j) == j) sum += newman_sign(j);
    return sum;
}

PrimeSumSeries prime_sum_scan(const SpfSieve& sieve, std::uint64_t n_max,
                              std::span<const std::uint64_t> checkpoints) {
    require_within(sieve, n_max, "prime_sum_scan");
    require_ascending(checkpoints, n_max);
    PrimeSumSeries out;
    out.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    std::int64_t sum = 0;
    std::uint64_t j = 2;
    for (std::uint64_t c : checkpoints) {
        for (; j <= c; ++j)
            if (sieve.spf(j) == j) sum += newman_sign(j);
        out.sums.push_back(sum);
    }
    return out;
}

PrimeSignReport prime_sign_scan(const SpfSieve& sieve, std::uint64_t n_max) {
    require_within(sieve, n_max, "prime_sign_scan");
    PrimeSignReport r;
    r.n_max = n_max;
    std::int64_t sum = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (sieve.is_prime(n)) sum += newman_sign(n);
        if (sum > 0) {
            push_capped(r.positive_at, n);
            ++r.positive_count;
        }
        if (n >= 31 && sum >= 0) {
            push_capped(r.nonnegative_from_31_at, n);
            ++r.nonnegative_from_31_count;
        }
    }
    r.final_sum = sum;
    return r;
}

double conjecture2_ratio(const SpfSieve& sieve, std::uint64_t n) {
    const std::int64_t sum = prime_newman_sum(sieve, n);
    if (sum >= 0)
        throw DomainError("conjecture2_ratio: prime sum at n = " + std::to_string(n) + " is " +
                          std::to_string(sum) + ", not negative");
    return std::log(static_cast<double>(-sum)) / std::log(static_cast<double>(n));
}

VpReport v_p_sum(const SpfSieve& sieve, std::uint64_t p, std::uint64_t n, bool exclude_p) {
    require_prime(sieve, p, "v_p_sum");
    require_within(sieve, n, "v_p_sum");
    VpReport r;
    r.p = p;
    r.n = n;
    r.exclude_p = exclude_p;
    for (std::uint64_t j = p; j <= n; j += p) {
        if (sieve.spf(j) != p) continue;
        ++r.members_count;
        const int sign = newman_sign(j);
        r.sum_with_p += sign;
        if (j != p) r.sum_excluding_p += sign;
    }
    return r;
}

Conjecture3Result conjecture3_check(const SpfSieve& sieve, std::uint64_t n) {
    require_within(sieve, n, "conjecture3_check");
    Conjecture3Result r;
    r.n = n;
    for (std::uint64_t j = 2; j <= n; ++j) {
        const std::uint32_t p = sieve.spf(j);
        if (p == 3)
            r.rhs += newman_sign(j);
        else if (p >= 5 && p != j)  // j > p forces p^2 <= j <= n
            r.composite_sum += newman_sign(j);
    }
    r.lhs = r.composite_sum < 0 ? -r.composite_sum : r.composite_sum;
    r.rhs_half_open = newman_sum(3, n) - newman_sum(6, n);
    r.holds = r.lhs < r.rhs;
    return r;
}

std::vector<ResonanceVerdict> resonance_scan(const SpfSieve& sieve, std::uint64_t p_max,
                                             std::uint64_t n_max, ResonanceCriterion criterion) {
    require_within(sieve, n_max, "resonance_scan");
    require_within(sieve, p_max, "resonance_scan");
    std::vector<ResonanceVerdict> verdicts;
    std::vector<std::int64_t> slot(p_max + 1, -1);
    for (std::uint64_t p = 5; p <= p_max; ++p) {
        if (!sieve.is_prime(p)) continue;
        slot[p] = static_cast<std::int64_t>(verdicts.size());
        ResonanceVerdict v;
        v.p = p;
        v.n_max = n_max;
        v.determinate = p * p <= n_max;
        verdicts.push_back(v);
    }
    // The j > p part of V_p(n) first changes at n = p^2 and is constant
    // between members, so checking right after each update covers every n.
    const bool with_p = criterion == ResonanceCriterion::nonpositive_including_p;
    const std::int64_t limit = with_p ? 1 : 0;
    std::vector<std::int64_t> acc(verdicts.size(), 0);
    if (with_p)
        for (auto& v : verdicts) acc[&v - verdicts.data()] = newman_sign(v.p);
    for (std::uint64_t j = 2; j <= n_max; ++j) {
        const std::uint32_t p = sieve.spf(j);
        if (p > p_max || p == j || slot[p] < 0) continue;
        const auto i = static_cast<std::size_t>(slot[p]);
        acc[i] += newman_sign(j);
        if (acc[i] >= limit && !verdicts[i].first_nonnegative) verdicts[i].first_nonnegative = j;
    }
    for (auto& v : verdicts) v.is_resonance = v.determinate && !v.first_nonnegative;
    return verdicts;
}

double v_p_density(const SpfSieve& sieve, std::uint64_t p, std::uint64_t n) {
    if (n == 0) throw InputError("v_p_density: n must be positive");
    return static_cast<double>(v_p_sum(sieve, p, n).members_count) / static_cast<double>(n);
}

double v_p_density_limit(std::uint64_t p) {
    double prod = 1.0 / static_cast<double>(p);
    for (std::uint64_t q = 2; q < p; ++q) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                prime = false;
                break;
            }
        if (prime) prod *= 1.0 - 1.0 / static_cast<double>(q);
    }
    return prod;
}

double density_total(const SpfSieve& sieve, std::uint64_t n) {
    require_within(sieve, n, "density_total");
    if (n == 0) throw InputError("density_total: n must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t j = 3; j <= n; ++j)
        if (sieve.spf(j) != 2) ++count;
    return static_cast<double>(count) / static_cast<double>(n);
}

double theorem3_constant(std::uint64_t p) { return -1.5 * v_p_density_limit(p); }

Theorem3Series theorem3_diagnostic(const SpfSieve& sieve, std::uint64_t p,
                                   std::span<const std::uint64_t> checkpoints) {
    require_prime(sieve, p, "theorem3_diagnostic");
    if (p < 5) throw InputError("theorem3_diagnostic: p must be at least 5");
    const std::uint64_t last = checkpoints.empty() ? 0 : checkpoints.back();
    require_within(sieve, last, "theorem3_diagnostic");
    require_ascending(checkpoints, last);
    if (!checkpoints.empty() && checkpoints.front() == 0)
        throw InputError("theorem3_diagnostic: checkpoints must be positive");

    Theorem3Series out;
    out.p = p;
    out.constant = theorem3_constant(p);

    std::int64_t sum = 0;
    std::int64_t s3 = 1;  // n = 0
    std::size_t next = 0;
    for (std::uint64_t n = 1; n <= last; ++n) {
        if (sieve.spf(n) == p) sum += newman_sign(n);
        if (n % 3 == 0) s3 += newman_sign(n);
        if (sum >= 0) out.last_nonnegative = n;
        if (next < checkpoints.size() && checkpoints[next] == n) {
            Theorem3Entry e;
            e.n = n;
            e.sum = sum;
            e.s3 = s3;
            if (sum < 0 && n > 1)
                e.log_ratio = std::log(static_cast<double>(-sum)) / std::log(static_cast<double>(n));
            if (s3 != 0) e.constant_ratio = static_cast<double>(sum) / (out.constant * static_cast<double>(s3));
            out.entries.push_back(e);
            ++next;
        }
    }
    return out;
}

}  // namespace newman
