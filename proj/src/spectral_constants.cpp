#include "newman/spectral_constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "newman/errors.hpp"

namespace newman {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double lambda_global() { return std::log(3.0) / std::log(4.0); }

// sin(pi l / m) (sqrt 3 - sin(pi l / m))
double resonance_product(double l, double m) {
    const double s = std::sin(kPi * l / m);
    return s * (kSqrt3 - s);
}

void require_m5(std::uint64_t m) {
    if (m < 5) throw InputError("modulus must be at least 5, got " + std::to_string(m));
}

void require_multiple_of_3(std::uint64_t m) {
    if (m % 3 != 0 || m < 6)
        throw InputError("modulus must be a multiple of 3 greater than 3, got " + std::to_string(m));
}

double b_squared(std::uint64_t m) {
    const double md = static_cast<double>(m);
    double arg = 0.0;
    switch (m % 3) {
        case 0: arg = kPi / 3.0 * (1.0 + 3.0 / md); break;
        case 1: arg = kPi / 3.0 * (1.0 - 1.0 / md); break;
        default: arg = kPi / 3.0 * (1.0 + 1.0 / md); break;
    }
    const double s = std::sin(arg);
    return s * (kSqrt3 - s);
}

}  // namespace

GlobalConstants global_constants() noexcept {
    return {lambda_global(), kSqrt3 / 2.0};
}

double rho(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("rho: argument must lie in [0, 1]");
    return 2.0 * x * std::sqrt(1.0 - x * x);
}

double b_of_m(std::uint64_t m) {
    require_m5(m);
    return std::sqrt(b_squared(m));
}

double lambda_of_m(std::uint64_t m) { return 1.0 + std::log2(b_of_m(m)); }

double mu_of_m(std::uint64_t m) {
    const double b = b_of_m(m);
    return (2.0 * b + 1.0) / (2.0 * b - 1.0);
}

double g_of_m(std::uint64_t m) {
    require_m5(m);
    if (m % 3 == 0) throw InputError("g_m is defined only for m coprime to 3");
    return std::sin(kPi * static_cast<double>(m / 3) / static_cast<double>(m));
}

double h_of_m(std::uint64_t m) {
    require_m5(m);
    const double md = static_cast<double>(m);
    switch (m % 3) {
        case 1: return resonance_product(static_cast<double>(m / 3), md);        // floor(m/3)
        case 2: return resonance_product(static_cast<double>(m / 3 + 1), md);    // ceil(m/3)
        default: return resonance_product(static_cast<double>(m / 3 + 1), md);   // ceil((m+1)/3)
    }
}

ModulusConstants modulus_constants(std::uint64_t m) {
    ModulusConstants c;
    c.m = m;
    c.b_m = b_of_m(m);
    if (m % 3 != 0) c.g_m = g_of_m(m);
    c.h_m = h_of_m(m);
    c.lambda_m = 1.0 + std::log2(c.b_m);
    c.mu_m = (2.0 * c.b_m + 1.0) / (2.0 * c.b_m - 1.0);
    return c;
}

double x0_threshold(std::uint64_t m) {
    require_multiple_of_3(m);
    const double lambda = lambda_global();
    const double md = static_cast<double>(m);
    return (std::log(md / 6.0) + (lambda + 0.5) * std::log(3.0) + std::log(mu_of_m(m))) /
           (lambda - lambda_of_m(m));
}

bool remark2_check(std::uint64_t m) {
    require_multiple_of_3(m);
    const double md = static_cast<double>(m);
    const double low = resonance_product(static_cast<double>((m - 1) / 3), md);
    const double high = resonance_product(static_cast<double>((m + 1 + 2) / 3), md);
    return low <= high;
}

}  // namespace newman
