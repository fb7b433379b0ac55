#include "fixsing/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "fixsing/common.hpp"

namespace fixsing::quad {

std::vector<Node> tanh_sinh(double lo, double hi, int n, double min_gap)
{
    if (n < 1) throw DomainError("tanh_sinh: need at least one node");
    if (!(hi > lo)) throw DomainError("tanh_sinh: empty interval");
    const double half = 0.5 * (hi - lo);
    // Outermost u solves 2 exp(-2u) = min_gap.
    const double u_max = 0.5 * std::log(2.0 / min_gap);
    const double t_max = std::asinh(2.0 * u_max / pi);
    const int k_max = (n - 1) / 2;
    const double h = k_max > 0 ? t_max / k_max : 1.0;

    std::vector<Node> rule;
    rule.reserve(static_cast<std::size_t>(2 * k_max + 1));
    for (int k = -k_max; k <= k_max; ++k) {
        const double t = k * h;
        const double u = 0.5 * pi * std::sinh(t);
        const double e = std::exp(-2.0 * std::abs(u));
        // Distance from the near end in units of the half length: 2e/(1+e).
        const double near = 2.0 * e / (1.0 + e);
        const double far = 2.0 - near;
        const double sech = 2.0 * std::exp(-std::abs(u)) / (1.0 + e);
        const double w = h * 0.5 * pi * std::cosh(t) * sech * sech * half;
        Node nd{};
        if (u < 0) {
            nd.gap_lo = half * near;
            nd.gap_hi = half * far;
            nd.x = lo + nd.gap_lo;
        } else {
            nd.gap_lo = half * far;
            nd.gap_hi = half * near;
            nd.x = hi - nd.gap_hi;
        }
        nd.w = w;
        rule.push_back(nd);
    }
    return rule;
}

GaussRule gauss_jacobi(int n, double a, double b)
{
    if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");

    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    const double ab = a + b;
    diag(0) = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double v;
        if (k == 1) {
            // Written without the (k+a+b) factor, which cancels and vanishes when a+b = -1.
            v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            const double s = 2.0 * k + ab;
            v = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        off(k - 1) = std::sqrt(v);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigensolver failed");

    const double mu0 = std::exp2(ab + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(ab + 2.0);
    GaussRule rule;
    rule.x.resize(static_cast<std::size_t>(n));
    rule.w.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double v0 = es.eigenvectors()(0, k);
        rule.x[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
        rule.w[static_cast<std::size_t>(k)] = mu0 * v0 * v0;
    }
    return rule;
}

GaussRule gauss_legendre(int n, double lo, double hi)
{
    GaussRule r = gauss_jacobi(n, 0.0, 0.0);
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    for (std::size_t k = 0; k < r.x.size(); ++k) {
        r.x[k] = mid + half * r.x[k];
        r.w[k] *= half;
    }
    return r;
}

}  // namespace fixsing::quad
