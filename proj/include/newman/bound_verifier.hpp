#pragma once

// Exhaustive integer scans of the Newman-sum inequalities.
//
// Each scan walks x upward once and keeps S_m(x) current by adding the term
// n = x - 1. Every S-value the scan consumes is also evaluated through
// ExplicitFormula; a disagreement throws OracleMismatch. Scans may be split
// into x-windows across threads: each window seeds its running sums from
// the explicit formula (checked against a brute-force window sum), and the
// merged report does not depend on the thread count.
//
// A bound counts as violated only when the integer side beats it by more
// than kRelativeSlack relative to the bound; equality is satisfaction.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace newman {

inline constexpr double kRelativeSlack = 1e-9;

class OracleMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoundReport {
    std::string bound_id;
    std::optional<std::uint64_t> m;
    std::uint64_t x_lo = 0;
    std::uint64_t x_hi = 0;
    std::vector<std::uint64_t> violations;  // ascending; first kMaxStoredViolations only
    std::uint64_t violation_count = 0;
    // max over the range of tested / bound; for two-sided bounds each side
    // is oriented so that exceeding 1 means a violation.
    double max_ratio = 0.0;
    std::uint64_t argmax = 0;

    static constexpr std::size_t kMaxStoredViolations = 1000;

    bool ok() const noexcept { return violation_count == 0; }
};

struct ScanOptions {
    unsigned threads = 1;
    bool cross_check = true;  // compare every S-value with ExplicitFormula
};

struct CoquetReports {
    BoundReport eq3;  // -1/3 + (2/sqrt3) x^l <= S_3(3x) <= 1/3 + (55/3)(3/65)^l x^l, x in [2, x_max/3]
    BoundReport eq4;  // same without the 1/3 terms, x in [2, x_max/3]
    BoundReport eq5;  // floor(2 (x/6)^l) <= S_3(x) <= ceil((55/3)(x/65)^l), x in [1, x_max]
};

CoquetReports verify_coquet(std::uint64_t x_max, const ScanOptions& opts = {});

// S_3(x) >= 2 * 3^{-lambda-1/2} x^lambda for multiples of 3, x in [6, x_max].
BoundReport verify_example_chain(std::uint64_t x_max, const ScanOptions& opts = {});

// |S_m(x)| <= mu_m x^{lambda_m} for x in [1, x_max]; (m,3) = 1, m >= 5.
BoundReport verify_theorem1(std::uint64_t m, std::uint64_t x_max, const ScanOptions& opts = {});

// |S_m(x) - (3/m) S_3(x)| <= mu_m x^{lambda_m} for x in [1, x_max]; 3 | m, m >= 6.
BoundReport verify_theorem2(std::uint64_t m, std::uint64_t x_max, const ScanOptions& opts = {});

// Newman sum over the positive multiples of m below x that are not
// multiples of 3, computed as S_m(x) - S_{3m}(x). (m,3) = 1.
std::int64_t u_m_sum(std::uint64_t m, std::uint64_t x);

struct RatioSeries {
    std::uint64_t m = 0;
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::optional<double>> ratios;  // S_m(x)/S_3(x); empty when S_3(x) = 0
};

RatioSeries asymptotic_ratio(std::uint64_t m, std::span<const std::uint64_t> checkpoints);

}  // namespace newman
