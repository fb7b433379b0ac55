#pragma once

#include <string>
#include <vector>

#include "fixsing/common.hpp"

namespace fixsing {

// Where the regular part has removable (or corner-type) singularities.
enum class SingularZone { Diagonal, CornerZero, CornerOne };

// Regular kernel K(x, xi) added to the singular operator with parameter beta:
// the full equation reads int_0^1 [S(x,xi) + K(x,xi)] phi(xi) dxi = C - F(x).
struct KernelSpec {
    double beta = 0.0;
    KernelFn regular_part;
    std::vector<SingularZone> zones;
    std::string label;

    double operator()(double x, double xi) const { return regular_part(x, xi); }
};

KernelSpec zero_kernel(double beta);

// 1/(pi u) - (1/2) cot(pi u / 2); smooth and odd, series below |u| < 1e-4.
double hilbert_gap(double u);

// 1/(pi s) + 1/(pi (s-2)) - (1/2) cot(pi s / 2) for s in (0, 2); smooth at both ends.
double fixed_gap(double s);

struct AntiplaneParams {
    double lambda = 1.0;  // G1 / G2
    double beta = 0.0;    // (lambda - 1) / (lambda + 1)
    double series_tol = 1e-15;
};

AntiplaneParams antiplane_params(double lambda, double series_tol = 1e-15);

// sum_{j>=1} beta^{2j} / (x + 2j), stopped by the geometric tail bound.
double antiplane_D(double x, double beta, double tol);

KernelSpec antiplane_kernel(const AntiplaneParams& params);

struct PlaneStrainParams {
    double G1 = 1.0, G2 = 1.0;
    double nu1 = 0.3, nu2 = 0.3;
    double mu0 = 0.0, nu0 = 0.0, delta0 = 0.0;
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    double gamma0 = 0.0;    // NaN until gamma0_root runs
    double beta_eff = 0.0;  // -cos(pi gamma0)
    int sign_changes = 0;   // of Lambda on the (0,1) scan
};

PlaneStrainParams plane_strain_coeffs(double G1, double G2, double nu1, double nu2);

// Exponent equation whose root in (0,1) fixes the end behaviour x^gamma.
double lambda_fn(double gamma, const PlaneStrainParams& params);

// Brackets the root on a 1000-point scan, bisects, then polishes with Newton.
// Writes gamma0 and beta_eff into params. Throws NoBracketError.
double gamma0_root(PlaneStrainParams& params, double tol = 1e-14);

// Dominant plane-strain equation (no K0 term): the full kernel is
// (1/pi)[1/(xi-x) + b-terms], returned as the regular part relative to S with beta_eff.
KernelSpec plane_strain_kernel(const PlaneStrainParams& params, bool include_K0 = false);

}  // namespace fixsing
