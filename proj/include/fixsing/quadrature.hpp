#pragma once

#include <vector>

namespace fixsing::quad {

// One abscissa of a rule on [lo, hi]. gap_lo = x - lo and gap_hi = hi - x are
// carried separately because near an end they are far more accurate than x.
struct Node {
    double x;
    double w;
    double gap_lo;
    double gap_hi;
};

// Double-exponential (tanh-sinh) rule with n abscissae on [lo, hi].
// min_gap sets how close the outermost abscissae come to the ends, relative
// to the half length; 1e-300 resolves algebraic end singularities down to
// exponents near -1.
std::vector<Node> tanh_sinh(double lo, double hi, int n, double min_gap = 1e-17);

struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

// n-point Gauss rule for the weight (1-z)^a (1+z)^b on [-1, 1] (Golub-Welsch).
GaussRule gauss_jacobi(int n, double a, double b);

// n-point Gauss-Legendre on [lo, hi].
GaussRule gauss_legendre(int n, double lo, double hi);

template <class F>
double integrate(const std::vector<Node>& rule, F&& f)
{
    double s = 0.0;
    for (const auto& nd : rule) s += nd.w * f(nd);
    return s;
}

}  // namespace fixsing::quad
