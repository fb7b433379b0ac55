#include "fixsing/kernels.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fixsing {

KernelSpec zero_kernel(double beta)
{
    return {beta, [](double, double) { return 0.0; }, {}, "zero"};
}

double hilbert_gap(double u)
{
    if (std::abs(u) < 1e-4) {
        const double pu = pi * u;
        const double pu2 = pu * pu;
        return pu / 12.0 + pu * pu2 / 720.0 + pu * pu2 * pu2 / 30240.0;
    }
    return 1.0 / (pi * u) - 0.5 / std::tan(0.5 * pi * u);
}

double fixed_gap(double s)
{
    // cot(pi s/2) = -cot(pi (2-s)/2) folds the upper end onto the lower one.
    if (s <= 1.0) return hilbert_gap(s) + 1.0 / (pi * (s - 2.0));
    return 1.0 / (pi * s) - hilbert_gap(2.0 - s);
}

AntiplaneParams antiplane_params(double lambda, double series_tol)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
    return {lambda, (lambda - 1.0) / (lambda + 1.0), series_tol};
}

double antiplane_D(double x, double beta, double tol)
{
    if (!(x > -2.0)) throw DomainError("antiplane_D: argument must exceed -2");
    if (!(std::abs(beta) < 1.0)) throw DomainError("antiplane_D: |beta| must be below 1");
    const double q = beta * beta;
    if (q == 0.0) return 0.0;
    double sum = 0.0;
    double power = 1.0;
    for (int j = 1;; ++j) {
        power *= q;
        sum += power / (x + 2.0 * j);
        const double tail = power * q / ((x + 2.0 * j + 2.0) * (1.0 - q));
        if (tail < tol || j > 100000) break;
    }
    return sum;
}

KernelSpec antiplane_kernel(const AntiplaneParams& params)
{
    const double beta = params.beta;
    const double tol = params.series_tol;
    auto K = [beta, tol](double x, double xi) {
        const double d = x - xi;
        double r = 0.0;
        if (beta != 0.0) {
            r = beta * (antiplane_D(x + xi, beta, tol) - antiplane_D(2.0 - x - xi, beta, tol)) +
                beta * beta *
                    (antiplane_D(2.0 - x + xi, beta, tol) - antiplane_D(2.0 + x - xi, beta, tol) +
                     2.0 * d / (4.0 - d * d));
        }
        return hilbert_gap(xi - x) + beta * fixed_gap(x + xi) + r / pi;
    };
    std::ostringstream label;
    label << "antiplane(lambda=" << params.lambda << ")";
    return {beta, K, {SingularZone::Diagonal, SingularZone::CornerZero, SingularZone::CornerOne}, label.str()};
}

PlaneStrainParams plane_strain_coeffs(double G1, double G2, double nu1, double nu2)
{
    if (!(G1 > 0.0) || !(G2 > 0.0)) throw DomainError("shear moduli must be positive");
    if (!(nu1 > 0.0 && nu1 <= 0.5) || !(nu2 > 0.0 && nu2 <= 0.5))
        throw DomainError("Poisson ratios must lie in (0, 1/2]");
    PlaneStrainParams p;
    p.G1 = G1;
    p.G2 = G2;
    p.nu1 = nu1;
    p.nu2 = nu2;
    p.mu0 = G1 * (1.0 - nu2) / (G2 * (1.0 - nu1));
    p.nu0 = nu1 / (1.0 - nu1) - p.mu0 * nu2 / (1.0 - nu2);
    p.delta0 = (3.0 + p.mu0 - p.nu0) * (1.0 + 3.0 * p.mu0 + p.nu0);
    if (p.delta0 == 0.0) throw DomainError("degenerate material constants: delta0 = 0");
    const double m = p.mu0, n = p.nu0;
    const double s = n + m - 1.0;
    p.b1 = (s * s - 4.0 * (1.0 - m * m)) / p.delta0;
    p.b2 = 4.0 * (n * (n - 2.0) - 3.0 * (1.0 - m * m)) / p.delta0;
    p.b3 = (-4.0 * n * (n - 2.0) + 3.0 * s * s) / p.delta0;
    p.gamma0 = std::numeric_limits<double>::quiet_NaN();
    p.beta_eff = std::numeric_limits<double>::quiet_NaN();
    return p;
}

namespace {

double quadratic_part(const PlaneStrainParams& p)
{
    const double m = p.mu0, n = p.nu0;
    return m * m - 3.0 - 2.0 * m * (n - 1.0) + n * (n - 2.0);
}

double lambda_slope(double gamma, const PlaneStrainParams& p)
{
    return -pi * p.delta0 * std::sin(pi * gamma) - 4.0 * quadratic_part(p) * gamma;
}

}  // namespace

double lambda_fn(double gamma, const PlaneStrainParams& p)
{
    const double m = p.mu0, n = p.nu0;
    const double s = n + m - 1.0;
    return p.delta0 * std::cos(pi * gamma) - 2.0 * quadratic_part(p) * gamma * gamma - 4.0 * (1.0 - m * m) + s * s;
}

double gamma0_root(PlaneStrainParams& params, double tol)
{
    constexpr int scan = 1000;
    int changes = 0;
    double lo = 0.0, hi = 0.0;
    bool found = false;
    // Sign of the last nonzero sample, so a root landing on a grid point counts once.
    double last_g = 0.0;
    double last = lambda_fn(0.0, params);
    for (int i = 1; i <= scan; ++i) {
        const double g = static_cast<double>(i) / scan;
        const double cur = lambda_fn(g, params);
        if (cur == 0.0) continue;
        if (last != 0.0 && (last < 0.0) != (cur < 0.0)) {
            ++changes;
            if (!found) {
                lo = last_g;
                hi = g;
                found = true;
            }
        }
        last = cur;
        last_g = g;
    }
    params.sign_changes = changes;
    if (!found) throw NoBracketError("Lambda(gamma) has no sign change on (0,1)");
    if (changes > 1) {
        std::ostringstream os;
        os << "Lambda(gamma) changes sign " << changes << " times on (0,1); using the smallest root";
        warn(os.str());
    }

    double flo = lambda_fn(lo, params);
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = lambda_fn(mid, params);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double g = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        const double slope = lambda_slope(g, params);
        if (slope == 0.0) break;
        const double step = lambda_fn(g, params) / slope;
        g -= step;
        if (std::abs(step) < 0.25 * tol) break;
    }
    if (!(g > 0.0 && g < 1.0)) throw NoBracketError("Newton polish left (0,1)");
    params.gamma0 = g;
    params.beta_eff = -std::cos(pi * g);
    return g;
}

KernelSpec plane_strain_kernel(const PlaneStrainParams& params, bool include_K0)
{
    if (include_K0) throw DomainError("the plane-strain regular kernel K0 has no closed form; only the dominant equation is supported");
    if (std::isnan(params.gamma0)) throw DomainError("plane_strain_kernel: run gamma0_root first");
    const double beta = params.beta_eff;
    const double b1 = params.b1, b2 = params.b2, b3 = params.b3;
    auto K = [beta, b1, b2, b3](double x, double xi) {
        const double s = x + xi;
        const double xm = x - 1.0, xim = xi - 1.0;
        const double near = (b1 * xi * xi + b2 * xi * x + b3 * x * x) / (s * s * s);
        const double t = s - 2.0;
        const double far = (b1 * xim * xim + b2 * xim * xm + b3 * xm * xm) / (t * t * t);
        // The beta/(xi+x) and beta/(xi+x-2) terms of the fixed singularity cancel
        // the cos(pi gamma0) terms, leaving only the cotangent.
        const double cot_sum = s <= 1.0 ? 1.0 / std::tan(0.5 * pi * s) : -1.0 / std::tan(0.5 * pi * (2.0 - s));
        return hilbert_gap(xi - x) - 0.5 * beta * cot_sum + (near + far) / pi;
    };
    std::ostringstream label;
    label << "plane-strain(mu0=" << params.mu0 << ", gamma0=" << params.gamma0 << ")";
    return {beta, K, {SingularZone::Diagonal, SingularZone::CornerZero, SingularZone::CornerOne}, label.str()};
}

}  // namespace fixsing
