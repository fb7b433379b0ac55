#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fixsing/common.hpp"
#include "fixsing/kernels.hpp"
#include "fixsing/spectral.hpp"

// Complete equation int_0^1 [S(x,xi) + K(x,xi)] phi(xi) dxi = C - F(x) with
// phi = sum_j b_j phi_j. Projecting on cos(n pi x) gives
//   n = 0:  sum_j (N_{j+1} + k_{0j}) b_j = C - f_0
//   n >= 1: -b_{n-1}/2 + sum_j k_{nj} b_j = -f_n
// with k_{nj}, f_n from a midpoint double rule.

namespace fixsing {

// How the order N maps onto the truncated system.
//   SystemOrder: N counts the unknowns C, b_0..b_{N-2} (rows n = 0..N-1).
//   BasisCount:  N counts basis functions b_0..b_{N-1} (rows n = 0..N).
enum class Truncation { SystemOrder, BasisCount };

struct SolveConfig {
    int N = 17;
    int t1 = 200;
    int t2 = 210;
    double series_tol = 1e-15;
    int pv_nodes = 512;  // oracle residual check; 0 disables it
    Truncation truncation = Truncation::SystemOrder;

    [[nodiscard]] int basis_count() const;
};

struct Solution {
    std::shared_ptr<const SpectralBasis> basis;
    std::vector<double> b;
    double constant_C = 0.0;
    SolveConfig config;
    std::map<std::string, double> residual_report;

    [[nodiscard]] double evaluate(double x) const;
};

// f_n = (1/t1) sum_m F(x_m) cos(n pi x_m), x_m = (2m-1)/(2 t1), n = 0..n_max.
std::vector<double> fourier_load_coeffs(const RealFn& F, int t1, int n_max);

// k_{nj}, n, j = 0..n_max.
Eigen::MatrixXd kernel_matrix(const KernelSpec& kernel, const SpectralBasis& basis, const SolveConfig& config,
                              int n_max);

Solution solve(const KernelSpec& kernel, const RealFn& F, const SolveConfig& config);

double evaluate(const Solution& solution, double x);

}  // namespace fixsing
