#include "fixsing/cauchy.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>

#include "fixsing/specfun.hpp"

namespace fixsing {

double CauchySolution::evaluate(double x) const
{
    if (x <= 0.0 || x >= 1.0) return 0.0;
    const double z = 2.0 * x - 1.0;
    double s = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) s += b[j] * chebyshev_U(static_cast<int>(j), z);
    return std::sqrt(x * (1.0 - x)) * s;
}

double cauchy_inverse(const RealFn& F, double x, int nodes)
{
    if (!(x > 0.0 && x < 1.0)) throw DomainError("cauchy_inverse: x must lie strictly inside (0,1)");
    if (nodes < 1) throw DomainError("cauchy_inverse: need at least one node");
    // (1/pi) int_0^1 g / sqrt(xi(1-xi)) = (1/n) sum g(xi_k), xi_k = (1 + cos theta_k)/2.
    // The principal value of int dxi / (sqrt(xi(1-xi)) (xi - x)) is zero, so F(x) can be subtracted freely.
    const double fx = F(x);
    double s = 0.0;
    for (int k = 1; k <= nodes; ++k) {
        const double xi = 0.5 * (1.0 + std::cos((2.0 * k - 1.0) * pi / (2.0 * nodes)));
        const double d = xi - x;
        if (std::abs(d) < 1e-13) {
            const double h = 1e-6 * std::min(x, 1.0 - x);
            s += (F(x + h) - F(x - h)) / (2.0 * h);
        } else {
            s += (F(xi) - fx) / d;
        }
    }
    return -std::sqrt(x * (1.0 - x)) * s / nodes;
}

CauchySolution cauchy_solve(const KernelFn& K, const RealFn& F, int N, int t1, int t2)
{
    if (N < 1) throw DomainError("cauchy_solve: N must be positive");
    if (t1 <= N || t2 < 1) throw DomainError("cauchy_solve: need t1 > N and t2 >= 1");

    // x_m = (1 - cos theta_m)/2, so T_n(2x_m - 1) = (-1)^n cos(n theta_m).
    std::vector<double> x(static_cast<std::size_t>(t1)), theta(static_cast<std::size_t>(t1));
    for (int m = 1; m <= t1; ++m) {
        theta[static_cast<std::size_t>(m - 1)] = (2.0 * m - 1.0) * pi / (2.0 * t1);
        x[static_cast<std::size_t>(m - 1)] = 0.5 * (1.0 - std::cos(theta[static_cast<std::size_t>(m - 1)]));
    }
    // Inner rule: xi_l = (1 - cos psi_l)/2, dxi = sin(psi)/2 dpsi, sqrt(xi(1-xi)) = sin(psi)/2.
    std::vector<double> xi(static_cast<std::size_t>(t2)), wxi(static_cast<std::size_t>(t2));
    for (int l = 1; l <= t2; ++l) {
        const double psi = (2.0 * l - 1.0) * pi / (2.0 * t2);
        const double half_sin = 0.5 * std::sin(psi);
        xi[static_cast<std::size_t>(l - 1)] = 0.5 * (1.0 - std::cos(psi));
        wxi[static_cast<std::size_t>(l - 1)] = (pi / t2) * half_sin * half_sin;
    }

    const Eigen::Index rows = N + 1;
    Eigen::MatrixXd Tn(rows, t1);
    for (Eigen::Index n = 0; n < rows; ++n)
        for (Eigen::Index m = 0; m < t1; ++m)
            Tn(n, m) = chebyshev_T(static_cast<int>(n), 2.0 * x[static_cast<std::size_t>(m)] - 1.0);
    Eigen::MatrixXd Kmat(t1, t2);
    for (Eigen::Index m = 0; m < t1; ++m)
        for (Eigen::Index l = 0; l < t2; ++l)
            Kmat(m, l) = K(x[static_cast<std::size_t>(m)], xi[static_cast<std::size_t>(l)]);
    Eigen::MatrixXd Uw(t2, N);
    for (Eigen::Index l = 0; l < t2; ++l)
        for (Eigen::Index j = 0; j < N; ++j)
            Uw(l, j) = wxi[static_cast<std::size_t>(l)] * chebyshev_U(static_cast<int>(j), 2.0 * xi[static_cast<std::size_t>(l)] - 1.0);

    const Eigen::MatrixXd k = Tn * Kmat * Uw / (pi * t1);
    Eigen::VectorXd Fx(t1);
    for (Eigen::Index m = 0; m < t1; ++m) Fx(m) = F(x[static_cast<std::size_t>(m)]);
    const Eigen::VectorXd f = Tn * Fx / static_cast<double>(t1);

    Eigen::MatrixXd A = k.bottomRows(N);
    A.diagonal().array() -= 0.25;
    const Eigen::VectorXd rhs = -f.tail(N);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond >= 1e-12)) {
        std::ostringstream os;
        os << "Cauchy system is numerically singular (rcond " << rcond << ")";
        throw SingularSystemError(os.str());
    }
    const Eigen::VectorXd b = lu.solve(rhs);

    CauchySolution sol;
    sol.b.assign(b.data(), b.data() + b.size());
    sol.constant_C = k.row(0).dot(b) + f(0);
    sol.residual_report["condition_estimate"] = 1.0 / rcond;
    sol.residual_report["linear_residual"] = (A * b - rhs).cwiseAbs().maxCoeff();

    // Integral form of the n = 0 row, (1/pi) int (C - F - K[phi]) / sqrt(x(1-x)) dx = 0,
    // on a Chebyshev rule twice as fine as the assembly rule.
    const int t_check = 2 * t1;
    const Eigen::VectorXd Ub = Uw * b;
    double solv = 0.0, scale = 0.0;
    for (int m = 1; m <= t_check; ++m) {
        const double xm = 0.5 * (1.0 - std::cos((2.0 * m - 1.0) * pi / (2.0 * t_check)));
        double kphi = 0.0;
        for (Eigen::Index l = 0; l < t2; ++l) kphi += K(xm, xi[static_cast<std::size_t>(l)]) * Ub(l);
        kphi /= pi;
        const double term = sol.constant_C - F(xm) - kphi;
        solv += term;
        scale += std::abs(sol.constant_C) + std::abs(F(xm)) + std::abs(kphi);
    }
    sol.residual_report["solvability_residual"] = std::abs(solv) / t_check;
    sol.residual_report["solvability_scale"] = scale / t_check;
    return sol;
}

KernelFn cauchy_regular_part(const KernelSpec& kernel)
{
    if (kernel.beta != 0.0) throw DomainError("cauchy_regular_part: kernel must have beta = 0");
    return [reg = kernel.regular_part](double x, double xi) { return pi * (reg(x, xi) - hilbert_gap(xi - x)); };
}

}  // namespace fixsing
