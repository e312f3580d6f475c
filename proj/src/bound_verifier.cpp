#include "newman/bound_verifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <thread>

#include "newman/core_digits.hpp"
#include "newman/errors.hpp"
#include "newman/explicit_formula.hpp"
#include "newman/spectral_constants.hpp"

namespace newman {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class ReportBuilder {
public:
    ReportBuilder(std::string id, std::optional<std::uint64_t> m, std::uint64_t lo, std::uint64_t hi) {
        r_.bound_id = std::move(id);
        r_.m = m;
        r_.x_lo = lo;
        r_.x_hi = hi;
        r_.argmax = lo;
    }

    void record(std::uint64_t x, double ratio, bool violated) {
        if (ratio > r_.max_ratio || !seen_) {
            r_.max_ratio = ratio;
            r_.argmax = x;
            seen_ = true;
        }
        if (violated) {
            if (r_.violations.size() < BoundReport::kMaxStoredViolations) r_.violations.push_back(x);
            ++r_.violation_count;
        }
    }

    // `later` covers x values above everything recorded here.
    void merge(const ReportBuilder& later) {
        if (later.seen_ && (!seen_ || later.r_.max_ratio > r_.max_ratio)) {
            r_.max_ratio = later.r_.max_ratio;
            r_.argmax = later.r_.argmax;
            seen_ = true;
        }
        for (std::uint64_t v : later.r_.violations) {
            if (r_.violations.size() >= BoundReport::kMaxStoredViolations) break;
            r_.violations.push_back(v);
        }
        r_.violation_count += later.r_.violation_count;
    }

    BoundReport take() { return std::move(r_); }

private:
    BoundReport r_;
    bool seen_ = false;
};

// Upper-bound test: tested <= bound, with relative slack.
bool exceeds(double tested, double bound) {
    return tested > bound + kRelativeSlack * std::abs(bound);
}

// S-values for a fixed set of moduli, kept current for x = cursor by adding
// n = x - 1 on each step, and compared against the explicit formula.
class RunningSums {
public:
    RunningSums(std::span<const std::uint64_t> moduli, std::uint64_t start, std::uint64_t x_hi,
                bool cross_check)
        : moduli_(moduli.begin(), moduli.end()), x_(start), cross_check_(cross_check) {
        const unsigned bits = static_cast<unsigned>(std::bit_width(x_hi));
        for (std::uint64_t m : moduli_) {
            sums_.push_back(newman_sum(m, start));
            if (cross_check_) formulas_.emplace_back(std::make_unique<ExplicitFormula>(m, bits));
        }
        check();
    }

    std::uint64_t x() const noexcept { return x_; }
    std::int64_t operator[](std::size_t i) const { return sums_[i]; }

    void advance() {
        const std::uint64_t n = x_;
        const int sign = newman_sign(n);
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            if (n % moduli_[i] == 0) sums_[i] += sign;
        ++x_;
        check();
    }

private:
    void check() const {
        if (!cross_check_) return;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            const std::int64_t viaFormula = formulas_[i]->newman_sum(x_);
            if (viaFormula != sums_[i])
                throw OracleMismatch("S_" + std::to_string(moduli_[i]) + "(" + std::to_string(x_) +
                                     "): brute force " + std::to_string(sums_[i]) +
                                     ", explicit formula " + std::to_string(viaFormula));
        }
    }

    std::vector<std::uint64_t> moduli_;
    std::vector<std::int64_t> sums_;
    std::vector<std::unique_ptr<ExplicitFormula>> formulas_;
    std::uint64_t x_;
    bool cross_check_;
};

// Splits [lo, hi] into contiguous windows, runs `body(window_lo, window_hi)`
// on each (one thread per window), and folds the results in window order.
template <class Result, class Body>
Result run_windows(std::uint64_t lo, std::uint64_t hi, unsigned threads, Body body) {
    const std::uint64_t span = hi - lo + 1;
    const std::uint64_t parts = std::clamp<std::uint64_t>(threads, 1, span);
    if (parts == 1) return body(lo, hi);

    std::vector<std::optional<Result>> results(parts);
    std::vector<std::exception_ptr> errors(parts);
    std::vector<std::thread> workers;
    workers.reserve(parts);
    for (std::uint64_t i = 0; i < parts; ++i) {
        const std::uint64_t a = lo + span * i / parts;
        const std::uint64_t b = lo + span * (i + 1) / parts - 1;
        workers.emplace_back([&, i, a, b] {
            try {
                results[i].emplace(body(a, b));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Result merged = std::move(*results[0]);
    for (std::uint64_t i = 1; i < parts; ++i) merged.merge(*results[i]);
    return merged;
}

void require_coprime_to_3(std::uint64_t m, const char* what) {
    if (m % 3 == 0)
        throw InputError(std::string(what) + ": m = " + std::to_string(m) +
                         " is a multiple of 3; use verify_theorem2");
}

struct CoquetState {
    ReportBuilder eq3, eq4, eq5;
    void merge(const CoquetState& o) {
        eq3.merge(o.eq3);
        eq4.merge(o.eq4);
        eq5.merge(o.eq5);
    }
};

struct SingleState {
    ReportBuilder report;
    void merge(const SingleState& o) { report.merge(o.report); }
};

// Two-sided tightness: above 1 exactly when one side fails (ignoring slack).
double sandwich_ratio(double s, double lower, double upper) {
    double r = s / upper;
    if (lower > 0.0) r = std::max(r, s > 0.0 ? lower / s : kInf);
    return r;
}

}  // namespace

CoquetReports verify_coquet(std::uint64_t x_max, const ScanOptions& opts) {
    if (x_max < 2) throw InputError("verify_coquet: x_max must be at least 2");
    const double lambda = global_constants().lambda;
    const double lo_coef = 2.0 / std::sqrt(3.0);
    const double hi_coef = 55.0 / 3.0 * std::pow(3.0 / 65.0, lambda);
    const std::uint64_t third = x_max / 3;
    const std::uint64_t three[] = {3};

    auto body = [&](std::uint64_t a, std::uint64_t b) {
        CoquetState st{ReportBuilder("coquet_eq3", 3, 2, third),
                       ReportBuilder("coquet_eq4", 3, 2, third),
                       ReportBuilder("coquet_eq5", 3, 1, x_max)};
        RunningSums sums(three, a, b, opts.cross_check);
        for (std::uint64_t y = a;; sums.advance(), ++y) {
            const std::int64_t s3 = sums[0];
            const double s = static_cast<double>(s3);

            const double v = static_cast<double>(y);
            const double lower5 = std::floor(2.0 * std::pow(v / 6.0, lambda) * (1.0 - kRelativeSlack));
            const double upper5 =
                std::ceil(55.0 / 3.0 * std::pow(v / 65.0, lambda) * (1.0 + kRelativeSlack));
            st.eq5.record(y, sandwich_ratio(s, lower5, upper5), s < lower5 || s > upper5);

            if (y % 3 == 0 && y / 3 >= 2) {
                const std::uint64_t x = y / 3;
                const double xl = std::pow(static_cast<double>(x), lambda);
                const double l4 = lo_coef * xl, u4 = hi_coef * xl;
                st.eq4.record(x, sandwich_ratio(s, l4, u4), exceeds(l4, s) || exceeds(s, u4));
                const double l3 = l4 - 1.0 / 3.0, u3 = u4 + 1.0 / 3.0;
                st.eq3.record(x, sandwich_ratio(s, l3, u3), exceeds(l3, s) || exceeds(s, u3));
            }
            if (y == b) break;
        }
        return st;
    };

    CoquetState st = run_windows<CoquetState>(1, x_max, opts.threads, body);
    return {st.eq3.take(), st.eq4.take(), st.eq5.take()};
}

BoundReport verify_example_chain(std::uint64_t x_max, const ScanOptions& opts) {
    if (x_max < 6) throw InputError("verify_example_chain: x_max must be at least 6");
    const double lambda = global_constants().lambda;
    const double coef = 2.0 * std::pow(3.0, -lambda - 0.5);
    const std::uint64_t three[] = {3};

    auto body = [&](std::uint64_t a, std::uint64_t b) {
        SingleState st{ReportBuilder("example_chain", 3, 6, x_max)};
        RunningSums sums(three, a, b, opts.cross_check);
        for (std::uint64_t x = a;; sums.advance(), ++x) {
            if (x % 3 == 0) {
                const double s = static_cast<double>(sums[0]);
                const double bound = coef * std::pow(static_cast<double>(x), lambda);
                st.report.record(x, s > 0.0 ? bound / s : kInf, exceeds(bound, s));
            }
            if (x == b) break;
        }
        return st;
    };
    return run_windows<SingleState>(6, x_max, opts.threads, body).report.take();
}

BoundReport verify_theorem1(std::uint64_t m, std::uint64_t x_max, const ScanOptions& opts) {
    require_coprime_to_3(m, "verify_theorem1");
    if (m < 5) throw InputError("verify_theorem1: m must be at least 5");
    if (x_max < 1) throw InputError("verify_theorem1: x_max must be positive");
    const ModulusConstants c = modulus_constants(m);
    const std::uint64_t moduli[] = {m};

    auto body = [&](std::uint64_t a, std::uint64_t b) {
        SingleState st{ReportBuilder("theorem1", m, 1, x_max)};
        RunningSums sums(moduli, a, b, opts.cross_check);
        for (std::uint64_t x = a;; sums.advance(), ++x) {
            const double tested = std::abs(static_cast<double>(sums[0]));
            const double bound = c.mu_m * std::pow(static_cast<double>(x), c.lambda_m);
            st.report.record(x, tested / bound, exceeds(tested, bound));
            if (x == b) break;
        }
        return st;
    };
    return run_windows<SingleState>(1, x_max, opts.threads, body).report.take();
}

BoundReport verify_theorem2(std::uint64_t m, std::uint64_t x_max, const ScanOptions& opts) {
    if (m % 3 != 0) throw InputError("verify_theorem2: m must be a multiple of 3; use verify_theorem1");
    if (m < 6) throw InputError("verify_theorem2: m must be greater than 3");
    if (x_max < 1) throw InputError("verify_theorem2: x_max must be positive");
    const ModulusConstants c = modulus_constants(m);
    const std::uint64_t moduli[] = {m, 3};
    const double share = 3.0 / static_cast<double>(m);

    auto body = [&](std::uint64_t a, std::uint64_t b) {
        SingleState st{ReportBuilder("theorem2", m, 1, x_max)};
        RunningSums sums(moduli, a, b, opts.cross_check);
        for (std::uint64_t x = a;; sums.advance(), ++x) {
            const double tested =
                std::abs(static_cast<double>(sums[0]) - share * static_cast<double>(sums[1]));
            const double bound = c.mu_m * std::pow(static_cast<double>(x), c.lambda_m);
            st.report.record(x, tested / bound, exceeds(tested, bound));
            if (x == b) break;
        }
        return st;
    };
    return run_windows<SingleState>(1, x_max, opts.threads, body).report.take();
}

std::int64_t u_m_sum(std::uint64_t m, std::uint64_t x) {
    if (m == 0) throw InputError("u_m_sum: m must be positive");
    require_coprime_to_3(m, "u_m_sum");
    if (3 * m > kMaxExplicitModulus) return newman_sum(m, x) - newman_sum(3 * m, x);
    return newman_sum_explicit(m, x) - newman_sum_explicit(3 * m, x);
}

RatioSeries asymptotic_ratio(std::uint64_t m, std::span<const std::uint64_t> checkpoints) {
    RatioSeries out;
    out.m = m;
    out.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    if (checkpoints.empty()) return out;
    const PartialSumSeries sm = newman_sum_scan(m, checkpoints.back(), checkpoints);
    const PartialSumSeries s3 = newman_sum_scan(3, checkpoints.back(), checkpoints);
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (s3.sums[i] == 0)
            out.ratios.emplace_back(std::nullopt);
        else
            out.ratios.emplace_back(static_cast<double>(sm.sums[i]) / static_cast<double>(s3.sums[i]));
    }
    return out;
}

}  // namespace newman
