#pragma once

// Closed-form constants attached to a modulus m >= 5:
//
//   b_m^2   three-case trigonometric expression selected by m mod 3
//   lambda_m = 1 + log2 b_m,   mu_m = (2 b_m + 1) / (2 b_m - 1)
//   g_m     = sin(pi floor(m/3) / m)            ((m,3) = 1 only)
//   h_m     = b_m^2
//
// together with the global exponent lambda = ln 3 / ln 4 and the fixed
// point sqrt(3)/2 of rho(x) = 2x sqrt(1 - x^2).

#include <cstdint>
#include <optional>

namespace newman {

struct GlobalConstants {
    double lambda;
    double rho_fixed_point;
};

GlobalConstants global_constants() noexcept;

struct ModulusConstants {
    std::uint64_t m = 0;
    double b_m = 0.0;
    std::optional<double> g_m;  // absent when 3 | m
    double h_m = 0.0;
    double lambda_m = 0.0;
    double mu_m = 0.0;
};

double rho(double x);

double b_of_m(std::uint64_t m);
double lambda_of_m(std::uint64_t m);
double mu_of_m(std::uint64_t m);
double g_of_m(std::uint64_t m);
double h_of_m(std::uint64_t m);

ModulusConstants modulus_constants(std::uint64_t m);

// Natural log of the threshold x_0 at which (3/m) * 2 * 3^{-lambda-1/2} x^lambda
// overtakes mu_m x^{lambda_m}; x_0 itself overflows a double for m = 21.
double x0_threshold(std::uint64_t m);

// For 3 | m: the floor((m-1)/3) candidate never beats the ceil((m+1)/3) one
// in sin(pi l / m)(sqrt 3 - sin(pi l / m)).
bool remark2_check(std::uint64_t m);

}  // namespace newman
