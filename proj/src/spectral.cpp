#include "fixsing/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fixsing/specfun.hpp"

namespace fixsing {
namespace {

void check_rho(double rho1)
{
    if (!(rho1 > 0.5 && rho1 < 1.0)) throw DomainError("rho1 must lie in (1/2, 1)");
}

// Fills out[j] = q_j(z) for j < out.size(), given the moments g of the weight
// (1-z)^(a-1) (1+z)^(-a). The Cauchy transforms J_j of w T_j obey the
// Chebyshev recurrence plus a moment term, and q_{j-1} = cot(pi a) w T_j - J_j,
// so Q_{k+1} = 2z Q_k - Q_{k-1} - (2/pi) g_k with Q_0 = 0, Q_1 = -g_0/pi.
void q_recurrence(const std::vector<double>& g, double z, std::span<double> out)
{
    double prev = 0.0, cur = -g[0] / pi;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = cur;
        const double next = 2.0 * z * cur - prev - 2.0 / pi * g[j + 1];
        prev = cur;
        cur = next;
    }
}

// Above this order the terminating sum for M_j cancels badly in double
// precision; the three-term moment recurrence is used instead.
constexpr int finite_sum_limit = 6;

// G_k = int_{-1}^{1} (1-z)^(rho-1) (1+z)^(-rho) T_k(z) dz for k = 0..k_max.
std::vector<double> weighted_chebyshev_moments(double rho1, int k_max)
{
    std::vector<double> g(static_cast<std::size_t>(std::max(k_max, 1) + 1));
    g[0] = pi / std::sin(pi * rho1);
    g[1] = g[0] * (1.0 - 2.0 * rho1);
    const double drift = 2.0 * (2.0 * rho1 - 1.0);
    for (int k = 1; k < k_max; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        g[ku + 1] = -(drift * g[ku] + (1.0 - k) * g[ku - 1]) / (k + 1.0);
    }
    return g;
}

}  // namespace

std::vector<double> basis_coefficients(double alpha, int j)
{
    if (j < 0) throw DomainError("basis_coefficients: negative degree");
    std::vector<double> c(static_cast<std::size_t>(j + 1));
    const long double scale = 1.0L / (2.0L * std::sin(pi * alpha));
    for (int nu = 0; nu <= j; ++nu) {
        long double s = 0.0L;
        for (int m = nu + 1; m <= j + 1; ++m) {
            const int k = m - 1 - nu;
            long double term = 1.0L;
            // (-j-1)_m (j+1)_m / ((1/2)_m m!)
            for (int i = 0; i < m; ++i)
                term *= static_cast<long double>(-j - 1 + i) * (j + 1 + i) / ((0.5L + i) * (i + 1));
            // (alpha)_k / k!
            for (int i = 0; i < k; ++i) term *= (alpha + i) / (i + 1.0L);
            s += term;
        }
        c[static_cast<std::size_t>(nu)] = static_cast<double>(s * scale);
    }
    return c;
}

SpectralBasis::SpectralBasis(double beta, double rho1, int max_degree)
    : beta_(beta), rho1_(rho1), max_degree_(max_degree)
{
    check_rho(rho1);
    if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
    rho_moments_ = weighted_chebyshev_moments(rho1, max_degree + 1);
    comp_moments_ = weighted_chebyshev_moments(1.0 - rho1, max_degree + 1);
    rho_rows_.reserve(static_cast<std::size_t>(max_degree + 1));
    comp_rows_.reserve(static_cast<std::size_t>(max_degree + 1));
    for (int j = 0; j <= max_degree; ++j) {
        rho_rows_.push_back(basis_coefficients(rho1, j));
        comp_rows_.push_back(basis_coefficients(1.0 - rho1, j));
    }
}

const std::vector<double>& SpectralBasis::row(int j, AlphaSelector which) const
{
    if (j < 0 || j > max_degree_) throw DomainError("basis index out of range");
    return which == AlphaSelector::Rho ? rho_rows_[static_cast<std::size_t>(j)]
                                       : comp_rows_[static_cast<std::size_t>(j)];
}

double SpectralBasis::coeff(int j, int nu, AlphaSelector which) const
{
    const auto& r = row(j, which);
    if (nu < 0 || nu > j) throw DomainError("coefficient index out of range");
    return r[static_cast<std::size_t>(nu)];
}

double SpectralBasis::q(int j, AlphaSelector which, double t) const
{
    if (j < 0 || j > max_degree_) throw DomainError("basis index out of range");
    std::vector<double> out(static_cast<std::size_t>(j + 1));
    q_recurrence(which == AlphaSelector::Rho ? rho_moments_ : comp_moments_, 1.0 - 2.0 * t, out);
    return out.back();
}

double SpectralBasis::phi(int j, double x) const
{
    if (j < 0 || j > max_degree_) throw DomainError("basis index out of range");
    std::vector<double> out(static_cast<std::size_t>(j + 1));
    phi_all(x, out);
    return out.back();
}

void SpectralBasis::phi_all(double x, std::span<double> out) const
{
    if (out.size() > static_cast<std::size_t>(max_degree_ + 1)) throw DomainError("basis index out of range");
    if (x <= 0.0 || x >= 1.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    const double s = std::sin(0.5 * pi * x);
    const double c = std::sin(0.5 * pi * (1.0 - x));
    // z = cos(pi x) = c^2 - s^2, kept accurate near both ends
    const double z = (c - s) * (c + s);
    const double r = rho1_;
    const double wr = std::pow(c, 2.0 * r) * std::pow(s, 2.0 - 2.0 * r);
    const double wc = std::pow(c, 2.0 - 2.0 * r) * std::pow(s, 2.0 * r);
    std::vector<double> qc(out.size());
    q_recurrence(rho_moments_, z, out);
    q_recurrence(comp_moments_, z, qc);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = wr * out[j] + wc * qc[j];
}

std::shared_ptr<const SpectralBasis> build_basis(double beta, int max_degree)
{
    if (!(std::abs(beta) < 1.0) || beta == 0.0)
        throw DomainError("spectral basis needs 0 < |beta| < 1");
    if (max_degree > basis_degree_cap) {
        std::ostringstream os;
        os << "basis degree " << max_degree << " exceeds " << basis_degree_cap
           << "; the monomial coefficients lose all accuracy there and truncated solves may turn unstable";
        warn(os.str());
    }
    const double rho1 = 0.5 + std::acos(beta) / (2.0 * pi);
    return std::make_shared<const SpectralBasis>(beta, rho1, max_degree);
}

double phi(const SpectralBasis& basis, int j, double x) { return basis.phi(j, x); }

double M_coeff(double rho1, int j)
{
    check_rho(rho1);
    if (j < 0) throw DomainError("M_coeff: negative index");
    if (j % 2 != 0) return 0.0;
    if (j == 0) return 2.0 / std::sin(pi * rho1);
    if (j <= finite_sum_limit) return 2.0 / std::sin(pi * rho1) * hyp3F2_terminating(j, rho1, 1.0);
    return 2.0 * weighted_chebyshev_moments(rho1, j)[static_cast<std::size_t>(j)] / pi;
}

double M_coeff(const SpectralBasis& basis, int j) { return M_coeff(basis.rho1(), j); }

double N_coeff(double rho1, int j)
{
    if (j == 0) {
        check_rho(rho1);
        return 1.0;
    }
    return 0.5 * std::sin(pi * rho1) * M_coeff(rho1, j);
}

double N_coeff(const SpectralBasis& basis, int j) { return N_coeff(basis.rho1(), j); }

double series_constant(double rho1, std::span<const double> fourier_coeffs, int terms)
{
    check_rho(rho1);
    if (fourier_coeffs.empty()) return 0.0;
    if (terms < 0 || static_cast<std::size_t>(terms) >= fourier_coeffs.size())
        throw DomainError("series_constant: not enough cosine coefficients");
    const auto g = weighted_chebyshev_moments(rho1, std::max(terms, 1));
    const double half_sin = 0.5 * std::sin(pi * rho1);
    double c = fourier_coeffs[0];
    for (int n = 2; n <= terms; n += 2) {
        const double nn = n <= finite_sum_limit ? N_coeff(rho1, n)
                                                : half_sin * 2.0 * g[static_cast<std::size_t>(n)] / pi;
        c += 2.0 * nn * fourier_coeffs[static_cast<std::size_t>(n)];
    }
    return c;
}

double SeriesSolution::evaluate(double x) const
{
    std::vector<double> ph(coefficients.size());
    basis->phi_all(x, ph);
    double s = 0.0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) s += coefficients[j] * ph[j];
    return s;
}

SeriesSolution characteristic_series_solve(std::shared_ptr<const SpectralBasis> basis,
                                           std::span<const double> fourier_coeffs, int m0)
{
    if (!basis) throw DomainError("characteristic_series_solve: null basis");
    if (m0 < 0 || m0 > basis->max_degree()) throw DomainError("m0 exceeds the basis degree");
    if (fourier_coeffs.size() < static_cast<std::size_t>(m0 + 2))
        throw DomainError("characteristic_series_solve: need cosine coefficients up to m0+1");
    SeriesSolution sol;
    sol.m0 = m0;
    sol.coefficients.resize(static_cast<std::size_t>(m0 + 1));
    for (int j = 0; j <= m0; ++j)
        sol.coefficients[static_cast<std::size_t>(j)] = 2.0 * fourier_coeffs[static_cast<std::size_t>(j + 1)];
    sol.constant_C =
        series_constant(basis->rho1(), fourier_coeffs, static_cast<int>(fourier_coeffs.size()) - 1);
    sol.basis = std::move(basis);
    return sol;
}

std::vector<double> monomial_cosine_coeffs(int k, int n_max)
{
    if (k < 0 || n_max < 0) throw DomainError("monomial_cosine_coeffs: negative argument");
    std::vector<double> out(static_cast<std::size_t>(n_max + 1));
    out[0] = 1.0 / (k + 1.0);
    for (int n = 1; n <= n_max; ++n) {
        // C_p = int x^p cos, S_p = int x^p sin over [0,1], w = n pi:
        // C_p = -(p/w) S_{p-1},  S_p = -(-1)^n / w + (p/w) C_{p-1},  C_0 = 0, S_0 = (1-(-1)^n)/w.
        const double w = n * pi;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        double cos_int = 0.0, sin_int = (1.0 - sign) / w;
        for (int p = 1; p <= k; ++p) {
            const double next_cos = -(p / w) * sin_int;
            const double next_sin = -sign / w + (p / w) * cos_int;
            cos_int = next_cos;
            sin_int = next_sin;
        }
        out[static_cast<std::size_t>(n)] = cos_int;
    }
    return out;
}

double J_integral(double alpha, int j, double zeta)
{
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("J_integral: alpha must lie in (0,1)");
    if (!(zeta > -1.0 && zeta < 1.0)) throw DomainError("J_integral: zeta must lie in (-1,1)");
    if (j < 0) throw DomainError("J_integral: negative index");
    const double lead = std::pow(1.0 - zeta, alpha - 1.0) * std::pow(1.0 + zeta, -alpha) * chebyshev_T(j, zeta) /
                        std::tan(pi * alpha);
    if (j == 0) return lead;
    std::vector<double> q(static_cast<std::size_t>(j));
    q_recurrence(weighted_chebyshev_moments(alpha, j), zeta, q);
    return lead - q.back();
}

}  // namespace fixsing
