#include "fixsing/complete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fixsing/oracle.hpp"

namespace fixsing {
namespace {

std::vector<double> midpoints(int t)
{
    std::vector<double> x(static_cast<std::size_t>(t));
    for (int m = 1; m <= t; ++m) x[static_cast<std::size_t>(m - 1)] = (2.0 * m - 1.0) / (2.0 * t);
    return x;
}

// Condition estimate beyond which b is reported as untrustworthy.
constexpr double condition_limit = 1e12;
constexpr double condition_warning = 1e8;
constexpr int unstable_order = 25;

}  // namespace

int SolveConfig::basis_count() const
{
    return truncation == Truncation::SystemOrder ? N - 1 : N;
}

double Solution::evaluate(double x) const
{
    std::vector<double> ph(b.size());
    basis->phi_all(x, ph);
    double s = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) s += b[j] * ph[j];
    return s;
}

double evaluate(const Solution& solution, double x) { return solution.evaluate(x); }

std::vector<double> fourier_load_coeffs(const RealFn& F, int t1, int n_max)
{
    if (t1 < 1) throw DomainError("fourier_load_coeffs: t1 must be positive");
    if (n_max < 0 || n_max >= t1) throw DomainError("fourier_load_coeffs: need 0 <= n_max < t1");
    const auto x = midpoints(t1);
    std::vector<double> fx(x.size());
    std::transform(x.begin(), x.end(), fx.begin(), [&](double v) { return F(v); });
    std::vector<double> f(static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        double s = 0.0;
        for (std::size_t m = 0; m < x.size(); ++m) s += fx[m] * std::cos(n * pi * x[m]);
        f[static_cast<std::size_t>(n)] = s / t1;
    }
    return f;
}

Eigen::MatrixXd kernel_matrix(const KernelSpec& kernel, const SpectralBasis& basis, const SolveConfig& config,
                              int n_max)
{
    if (n_max < 0) throw DomainError("kernel_matrix: negative order");
    if (basis.max_degree() < n_max) throw DomainError("kernel_matrix: basis degree below n_max");
    if (n_max >= config.t1) throw DomainError("kernel_matrix: need n_max < t1 to avoid cosine aliasing");
    if (config.t2 < 1) throw DomainError("kernel_matrix: t2 must be positive");
    const auto x = midpoints(config.t1);
    const auto xi = midpoints(config.t2);
    const Eigen::Index t1 = config.t1, t2 = config.t2, cols = n_max + 1;

    Eigen::MatrixXd K(t1, t2);
    for (Eigen::Index m = 0; m < t1; ++m)
        for (Eigen::Index l = 0; l < t2; ++l)
            K(m, l) = kernel.regular_part(x[static_cast<std::size_t>(m)], xi[static_cast<std::size_t>(l)]);

    Eigen::MatrixXd Phi(t2, cols);
    std::vector<double> row(static_cast<std::size_t>(cols));
    for (Eigen::Index l = 0; l < t2; ++l) {
        basis.phi_all(xi[static_cast<std::size_t>(l)], row);
        for (Eigen::Index j = 0; j < cols; ++j) Phi(l, j) = row[static_cast<std::size_t>(j)];
    }

    Eigen::MatrixXd Cos(cols, t1);
    for (Eigen::Index n = 0; n < cols; ++n)
        for (Eigen::Index m = 0; m < t1; ++m) Cos(n, m) = std::cos(static_cast<double>(n) * pi * x[static_cast<std::size_t>(m)]);

    return Cos * K * Phi / (static_cast<double>(t1) * static_cast<double>(t2));
}

Solution solve(const KernelSpec& kernel, const RealFn& F, const SolveConfig& config)
{
    const double beta = kernel.beta;
    if (!(std::abs(beta) < 1.0) || beta == 0.0)
        throw DomainError("solve: the spectral basis needs 0 < |beta| < 1 (use cauchy_solve at beta = 0)");
    const int nb = config.basis_count();
    if (nb < 1) throw DomainError("solve: truncation leaves no basis functions");
    if (config.t1 <= nb || config.t2 < 1) throw DomainError("solve: need t1 > number of basis functions");
    if (nb > unstable_order) {
        std::ostringstream os;
        os << "truncation with " << nb << " basis functions is past the order where the basis loses accuracy";
        warn(os.str());
    }

    auto basis = build_basis(beta, nb);
    const Eigen::MatrixXd k = kernel_matrix(kernel, *basis, config, nb);
    const auto f = fourier_load_coeffs(F, config.t1, nb);

    Eigen::MatrixXd A = k.block(1, 0, nb, nb);
    A.diagonal().array() -= 0.5;
    Eigen::VectorXd rhs(nb);
    for (int n = 1; n <= nb; ++n) rhs(n - 1) = -f[static_cast<std::size_t>(n)];

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rcond = lu.rcond();
    const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (!(cond <= condition_limit)) {
        std::ostringstream os;
        os << "truncated system is numerically singular (condition estimate " << cond << ")";
        throw SingularSystemError(os.str());
    }
    if (cond > condition_warning) {
        std::ostringstream os;
        os << "truncated system is ill-conditioned (condition estimate " << cond << ")";
        warn(os.str());
    }
    const Eigen::VectorXd b = lu.solve(rhs);

    Solution sol;
    sol.basis = basis;
    sol.config = config;
    sol.b.assign(b.data(), b.data() + b.size());

    double row0 = 0.0;
    for (int j = 0; j < nb; ++j) row0 += (N_coeff(*basis, j + 1) + k(0, j)) * b(j);
    sol.constant_C = row0 + f[0];

    sol.residual_report["condition_estimate"] = cond;
    sol.residual_report["linear_residual"] = (A * b - rhs).cwiseAbs().maxCoeff();
    sol.residual_report["row0_identity"] = std::abs(row0 + f[0] - sol.constant_C);

    // int V (C - F - K[phi]) dx expanded in cosines; vanishes when the
    // solvability condition holds. Scaled by the size of its terms.
    // The scale sums the magnitudes of the pieces, since symmetric loads can
    // make every combined term vanish.
    const double k0b = k.row(0).head(nb).dot(b);
    double solv = M_coeff(*basis, 0) * (sol.constant_C - f[0] - k0b);
    double scale = M_coeff(*basis, 0) * (std::abs(sol.constant_C) + std::abs(f[0]) + std::abs(k0b));
    for (int n = 1; n <= nb; ++n) {
        const auto nu = static_cast<std::size_t>(n);
        const double knb = k.row(n).head(nb).dot(b);
        const double m = 2.0 * M_coeff(*basis, n);
        solv += m * (-f[nu] - knb);
        scale += std::abs(m) * (std::abs(f[nu]) + std::abs(knb));
    }
    sol.residual_report["solvability_residual"] = std::abs(solv);
    sol.residual_report["solvability_scale"] = scale;

    if (config.pv_nodes > 0) {
        const std::vector<double> xs{0.1, 0.3, 0.5, 0.7, 0.9};
        const auto res = full_residual(sol, kernel, F, xs, PVRule{std::max(config.pv_nodes, 16), PVScheme::SubtractSingularity});
        double worst = 0.0;
        for (double r : res) worst = std::max(worst, std::abs(r));
        sol.residual_report["equation_residual"] = worst;
    }
    return sol;
}

}  // namespace fixsing
