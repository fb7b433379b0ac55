#pragma once

#include <map>
#include <string>
#include <vector>

#include "fixsing/common.hpp"
#include "fixsing/kernels.hpp"

// Equation with the plain Cauchy kernel,
//   (1/pi) int_0^1 [1/(xi - x) + K(x,xi)] phi(xi) dxi = C - F(x),
// solved by phi = sqrt(x(1-x)) sum_j b_j U_j(2x-1). The reference solver
// whenever beta = 0, where the generalized basis does not exist.

namespace fixsing {

struct CauchySolution {
    std::vector<double> b;
    double constant_C = 0.0;
    std::map<std::string, double> residual_report;

    [[nodiscard]] double evaluate(double x) const;
};

// -(sqrt(x(1-x))/pi) PV int_0^1 F(xi) / (sqrt(xi(1-xi)) (xi - x)) dxi, Gauss-Chebyshev with subtraction.
double cauchy_inverse(const RealFn& F, double x, int nodes = 256);

// Rows n = 1..N of  -b_{n-1}/4 + sum_j k_{nj} b_j = -f_n  for b_0..b_{N-1};
// C from the n = 0 row.
CauchySolution cauchy_solve(const KernelFn& K, const RealFn& F, int N, int t1, int t2);

// Regular part in the Cauchy normalisation for a beta = 0 kernel:
// pi (K(x,xi) - hilbert_gap(xi - x)).
KernelFn cauchy_regular_part(const KernelSpec& kernel);

}  // namespace fixsing
