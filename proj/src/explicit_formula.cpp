#include "newman/explicit_formula.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "newman/core_digits.hpp"
#include "newman/errors.hpp"

namespace newman {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

void require_modulus(std::uint64_t m) {
    if (m == 0) throw InputError("modulus must be positive");
    if (m > kMaxExplicitModulus)
        throw InputError("modulus " + std::to_string(m) + " exceeds the explicit-formula limit " +
                         std::to_string(kMaxExplicitModulus));
}

void require_phase(std::uint64_t t, std::uint64_t m) {
    require_modulus(m);
    if (t >= m)
        throw InputError("phase numerator t = " + std::to_string(t) + " must be below m = " +
                         std::to_string(m));
}

// 2^k mod m for k = 0..bits, by doubling.
std::vector<std::uint64_t> powers_of_two_mod(std::uint64_t m, unsigned bits) {
    std::vector<std::uint64_t> out(bits + 1);
    std::uint64_t v = 1 % m;
    for (unsigned k = 0; k <= bits; ++k) {
        out[k] = v;
        v = (2 * v) % m;  // m <= 2^16, no overflow
    }
    return out;
}

// Index of 1 + exp(2 pi i (t 2^k / m + 1/2)) in the root table, before adding 1.
std::uint64_t digit_factor_index(std::uint64_t t, std::uint64_t pow2k, std::uint64_t m) {
    return (PhaseIndex::of_fraction(t, pow2k, m) + PhaseIndex::half(m)).index();
}

ComplexValue lemma_sum(std::uint64_t t, std::uint64_t m, std::uint64_t n, bool shared) {
    require_phase(t, m);
    if (n == 0) return {0.0, 0.0};

    const UnitPhaseTable table(m);
    const BinaryDecomposition dec = binary_decompose(n);
    const unsigned top = dec.exponents.front();
    const std::vector<std::uint64_t> pow2 = powers_of_two_mod(m, top);

    auto factor = [&](unsigned k) { return 1.0 + table[digit_factor_index(t, pow2[k], m)]; };

    std::vector<ComplexValue> prefix;
    if (shared) {
        prefix.resize(top + 1);
        prefix[0] = 1.0;
        for (unsigned k = 0; k < top; ++k) prefix[k + 1] = prefix[k] * factor(k);
    }

    ComplexValue total = 0.0;
    std::uint64_t head = 0;  // sum_{j<h} 2^{nu_j} mod m
    for (std::size_t h = 0; h < dec.exponents.size(); ++h) {
        const unsigned nu = dec.exponents[h];
        const PhaseIndex phase =
            PhaseIndex::of_fraction(t, head, m) + PhaseIndex(static_cast<std::uint64_t>(h % 2) * m, m);
        ComplexValue product = 1.0;
        if (shared) {
            product = prefix[nu];
        } else {
            for (unsigned k = 0; k < nu; ++k) product *= factor(k);
        }
        total += table(phase) * product;
        head = (head + pow2[nu]) % m;
    }
    return total;
}

}  // namespace

BinaryDecomposition binary_decompose(std::uint64_t n) {
    if (n == 0) throw InputError("binary_decompose: N must be positive");
    BinaryDecomposition out;
    out.exponents.reserve(binary_weight(n));
    while (n != 0) {
        const unsigned top = static_cast<unsigned>(std::bit_width(n) - 1);
        out.exponents.push_back(top);
        n &= ~(std::uint64_t{1} << top);
    }
    return out;
}

PhaseIndex::PhaseIndex(std::uint64_t index, std::uint64_t modulus) : index_(0), modulus_(modulus) {
    if (modulus == 0) throw InputError("PhaseIndex: modulus must be positive");
    index_ = index % (2 * modulus);
}

PhaseIndex PhaseIndex::of_fraction(std::uint64_t t, std::uint64_t residue, std::uint64_t m) {
    if (m == 0) throw InputError("PhaseIndex: modulus must be positive");
    return PhaseIndex(2 * mul_mod(t, residue % m, m), m);
}

PhaseIndex PhaseIndex::half(std::uint64_t m) { return PhaseIndex(m, m); }

PhaseIndex PhaseIndex::operator+(const PhaseIndex& other) const {
    PhaseIndex out = *this;
    out += other;
    return out;
}

PhaseIndex& PhaseIndex::operator+=(const PhaseIndex& other) {
    if (other.modulus_ != modulus_) throw InputError("PhaseIndex: mismatched denominators");
    const std::uint64_t d = 2 * modulus_;
    index_ = index_ >= d - other.index_ ? index_ - (d - other.index_) : index_ + other.index_;
    return *this;
}

UnitPhaseTable::UnitPhaseTable(std::uint64_t m) : m_(m) {
    require_modulus(m);
    roots_.resize(2 * m);
    for (std::uint64_t k = 0; k <= m; ++k) {
        const double angle = std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        roots_[k] = {std::cos(angle), std::sin(angle)};
    }
    for (std::uint64_t k = m + 1; k < 2 * m; ++k) roots_[k] = std::conj(roots_[2 * m - k]);
    // exact values on the axes
    roots_[0] = {1.0, 0.0};
    roots_[m] = {-1.0, 0.0};
    if (m % 2 == 0) {
        roots_[m / 2] = {0.0, 1.0};
        roots_[3 * m / 2] = {0.0, -1.0};
    }
}

ComplexValue f_alpha_direct(std::uint64_t t, std::uint64_t m, std::uint64_t n) {
    require_phase(t, m);
    std::vector<std::uint64_t> counts(2 * m, 0);
    std::uint64_t residue = 0;  // t * j mod m
    for (std::uint64_t j = 0; j < n; ++j) {
        std::uint64_t k = 2 * residue + ((binary_weight(j) & 1u) ? m : 0);
        if (k >= 2 * m) k -= 2 * m;
        ++counts[k];
        residue += t;
        if (residue >= m) residue -= m;
    }
    const UnitPhaseTable table(m);
    ComplexValue total = 0.0;
    for (std::uint64_t k = 0; k < 2 * m; ++k)
        if (counts[k] != 0) total += static_cast<double>(counts[k]) * table[k];
    return total;
}

ComplexValue f_alpha_lemma(std::uint64_t t, std::uint64_t m, std::uint64_t n) {
    return lemma_sum(t, m, n, true);
}

ComplexValue f_alpha_lemma_unshared(std::uint64_t t, std::uint64_t m, std::uint64_t n) {
    return lemma_sum(t, m, n, false);
}

ExplicitFormula::ExplicitFormula(std::uint64_t m, unsigned max_bits)
    : m_(m), max_bits_(max_bits), table_(m) {
    if (max_bits > 64) throw InputError("ExplicitFormula: max_bits must be at most 64");
    pow2_mod_ = powers_of_two_mod(m, max_bits);
    const std::size_t stride = max_bits + 1;
    prefix_.resize(m * stride);
    for (std::uint64_t t = 0; t < m; ++t) {
        ComplexValue* row = prefix_.data() + t * stride;
        row[0] = 1.0;
        for (unsigned k = 0; k < max_bits; ++k)
            row[k + 1] = row[k] * (1.0 + table_[digit_factor_index(t, pow2_mod_[k], m)]);
    }
}

void ExplicitFormula::check_argument(std::uint64_t n) const {
    if (max_bits_ < 64 && (n >> max_bits_) != 0)
        throw InputError("ExplicitFormula: N = " + std::to_string(n) + " needs more than " +
                         std::to_string(max_bits_) + " bits");
}

ComplexValue ExplicitFormula::f_alpha(std::uint64_t t, std::uint64_t n) const {
    if (t >= m_) throw InputError("ExplicitFormula: t must be below m");
    check_argument(n);
    const ComplexValue* row = prefix_.data() + t * (max_bits_ + 1);
    ComplexValue total = 0.0;
    std::uint64_t head = 0;
    std::uint64_t h = 0;
    while (n != 0) {
        const unsigned nu = static_cast<unsigned>(std::bit_width(n) - 1);
        // t, head < m <= 2^16: the product fits in 64 bits
        std::uint64_t k = 2 * (t * head % m_) + (h & 1) * m_;
        if (k >= 2 * m_) k -= 2 * m_;
        total += table_[k] * row[nu];
        head += pow2_mod_[nu];
        if (head >= m_) head -= m_;
        n &= ~(std::uint64_t{1} << nu);
        ++h;
    }
    return total;
}

ExplicitEvaluation ExplicitFormula::evaluate(std::uint64_t n) const {
    check_argument(n);
    ExplicitEvaluation ev;
    ev.m = m_;
    ev.n = n;
    if (n == 0) return ev;

    ComplexValue total = 0.0;
    for (std::uint64_t t = 0; t < m_; ++t) total += f_alpha(t, n);

    const unsigned nu0 = static_cast<unsigned>(std::bit_width(n) - 1);
    const double m = static_cast<double>(m_);
    ev.real_part = total.real() / m;
    ev.imag_part = total.imag() / m;
    ev.imag_tolerance = kImagToleranceScale * m * (nu0 + 1);
    const double nearest = std::nearbyint(ev.real_part);
    ev.value = static_cast<std::int64_t>(nearest);
    ev.rounding_distance = std::abs(ev.real_part - nearest);
    ev.within_tolerance =
        std::abs(total.imag()) <= ev.imag_tolerance && ev.rounding_distance <= kRoundingRadius;
    return ev;
}

std::int64_t ExplicitFormula::newman_sum(std::uint64_t n) const {
    const ExplicitEvaluation ev = evaluate(n);
    if (!ev.within_tolerance)
        throw PrecisionError("explicit formula out of tolerance for m = " + std::to_string(m_) +
                             ", N = " + std::to_string(n) + ": real part " +
                             std::to_string(ev.real_part) + ", imaginary part of the t-sum " +
                             std::to_string(ev.imag_part * static_cast<double>(m_)) +
                             " (tolerance " + std::to_string(ev.imag_tolerance) + ")");
    return ev.value;
}

std::int64_t newman_sum_explicit(std::uint64_t m, std::uint64_t n) {
    require_modulus(m);
    return ExplicitFormula(m, static_cast<unsigned>(std::bit_width(n))).newman_sum(n);
}

}  // namespace newman
