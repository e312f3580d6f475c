#pragma once

// Newman sums through the roots-of-unity filter
//
//     S_m(N) = (1/m) * sum_{t<m} F_{t/m}(N),
//     F_a(N) = sum_{n<N} exp(2 pi i (a n + s(n)/2)),
//
// where F_a(N) is evaluated from the binary expansion of N as a sum of
// r + 1 products over the digit positions instead of N terms.
//
// Every phase that enters a computation is an exact rational k / (2m),
// carried as the integer k mod 2m and looked up in a table of 2m-th roots
// of unity. No trigonometric call ever sees an accumulated phase, so the
// only rounding comes from complex products and sums.

#include <complex>
#include <cstdint>
#include <vector>

namespace newman {

// Largest modulus accepted by this module; the root table has 2m entries.
inline constexpr std::uint64_t kMaxExplicitModulus = std::uint64_t{1} << 16;

using ComplexValue = std::complex<double>;

struct BinaryDecomposition {
    std::vector<unsigned> exponents;  // strictly decreasing
};

// Throws InputError for n == 0.
BinaryDecomposition binary_decompose(std::uint64_t n);

// Phase index / (2m) on the unit circle.
class PhaseIndex {
public:
    PhaseIndex(std::uint64_t index, std::uint64_t modulus);

    std::uint64_t index() const noexcept { return index_; }
    std::uint64_t denominator() const noexcept { return 2 * modulus_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    // exp(2 pi i (t * residue / m)) as an index, residue taken mod m.
    static PhaseIndex of_fraction(std::uint64_t t, std::uint64_t residue, std::uint64_t m);
    // The additive 1/2 of the digit sign, i.e. index m.
    static PhaseIndex half(std::uint64_t m);

    PhaseIndex operator+(const PhaseIndex& other) const;
    PhaseIndex& operator+=(const PhaseIndex& other);
    bool operator==(const PhaseIndex&) const = default;

private:
    std::uint64_t index_;
    std::uint64_t modulus_;
};

class UnitPhaseTable {
public:
    explicit UnitPhaseTable(std::uint64_t m);

    std::uint64_t modulus() const noexcept { return m_; }
    std::size_t size() const noexcept { return roots_.size(); }
    const ComplexValue& operator[](std::uint64_t k) const { return roots_[k]; }
    const ComplexValue& operator()(const PhaseIndex& p) const { return roots_[p.index()]; }

private:
    std::uint64_t m_;
    std::vector<ComplexValue> roots_;  // exp(2 pi i k / (2m)), k < 2m
};

// O(N) summation of F_{t/m}(N). Counts how often each of the 2m phases
// occurs and only then weights the counts by the roots of unity.
ComplexValue f_alpha_direct(std::uint64_t t, std::uint64_t m, std::uint64_t n);

// Digit-product evaluation of F_{t/m}(N) in O(log N) multiplications.
ComplexValue f_alpha_lemma(std::uint64_t t, std::uint64_t m, std::uint64_t n);

// Same formula, but the product for every summand is rebuilt from scratch
// instead of reading it off a shared prefix. Used to check prefix reuse.
ComplexValue f_alpha_lemma_unshared(std::uint64_t t, std::uint64_t m, std::uint64_t n);

struct ExplicitEvaluation {
    std::uint64_t m = 1;
    std::uint64_t n = 0;
    std::int64_t value = 0;       // nearest integer to the real part
    double real_part = 0.0;       // (1/m) sum_t F_{t/m}(N), real part
    double imag_part = 0.0;
    double rounding_distance = 0.0;
    double imag_tolerance = 0.0;
    bool within_tolerance = true;
};

// Precomputes, for one modulus, the table of roots and the prefix products
// prod_{k<j} (1 + exp(2 pi i (t 2^k / m + 1/2))) for every t and every j <= 64.
// Evaluating F_{t/m}(N) afterwards costs O(s(N)); S_m(N) costs O(m s(N)).
// Immutable after construction and safe to share between threads.
class ExplicitFormula {
public:
    static constexpr double kRoundingRadius = 0.25;
    static constexpr double kImagToleranceScale = 1e-6;

    // Prefix products are kept for digit positions below max_bits, so
    // arguments must satisfy N < 2^max_bits.
    explicit ExplicitFormula(std::uint64_t m, unsigned max_bits = 64);

    std::uint64_t modulus() const noexcept { return m_; }
    unsigned max_bits() const noexcept { return max_bits_; }
    const UnitPhaseTable& table() const noexcept { return table_; }

    ComplexValue f_alpha(std::uint64_t t, std::uint64_t n) const;

    // Never throws on precision; within_tolerance reports the verdict.
    ExplicitEvaluation evaluate(std::uint64_t n) const;

    // Throws PrecisionError when evaluate() is out of tolerance.
    std::int64_t newman_sum(std::uint64_t n) const;

private:
    void check_argument(std::uint64_t n) const;

    std::uint64_t m_;
    unsigned max_bits_;
    UnitPhaseTable table_;
    std::vector<std::uint64_t> pow2_mod_;  // 2^k mod m, k = 0..max_bits
    std::vector<ComplexValue> prefix_;     // [t * (max_bits + 1) + j]
};

// (1/m) sum_{t<m} f_alpha_lemma(t, m, N), rounded to the nearest integer.
// Throws PrecisionError when |Im| > 1e-6 m (nu_0 + 1) or the real part is
// more than 0.25 away from an integer.
std::int64_t newman_sum_explicit(std::uint64_t m, std::uint64_t n);

}  // namespace newman
