#pragma once

#include <span>
#include <vector>

#include "fixsing/common.hpp"
#include "fixsing/complete.hpp"
#include "fixsing/kernels.hpp"

// Brute-force forward application of the operators, used to check every
// closed form and every solve end to end.

namespace fixsing {

enum class PVScheme {
    // Subtract phi(x) under the Cauchy part, add back its closed-form integral,
    // and integrate the rest with tanh-sinh split at x.
    SubtractSingularity,
    // Same subtraction on the cosine-clustered midpoint grid xi = (1 - cos theta)/2.
    CosineMap,
};

struct PVRule {
    int nodes = 512;
    PVScheme scheme = PVScheme::SubtractSingularity;
};

// S[phi](x) = int_0^1 [(1/2)cot(pi(xi-x)/2) + (beta/2)cot(pi(xi+x)/2)] phi(xi) dxi
double apply_S(const RealFn& phi, double beta, double x, const PVRule& rule = {});

// int_0^1 K(x, xi) phi(xi) dxi
double apply_K(const KernelSpec& kernel, const RealFn& phi, double x, int nodes = 512);

// (1/pi) PV int_0^1 phi(xi) / (xi - x) dxi
double apply_cauchy(const RealFn& phi, double x, int nodes = 512);

// S[phi] + K[phi] + F - C at each x.
std::vector<double> full_residual(const Solution& solution, const KernelSpec& kernel, const RealFn& F,
                                  std::span<const double> xs, const PVRule& rule = {});

}  // namespace fixsing
