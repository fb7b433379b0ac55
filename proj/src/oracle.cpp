#include "fixsing/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "fixsing/quadrature.hpp"

namespace fixsing {
namespace {

void check_interior(double x)
{
    if (!(x > 0.0 && x < 1.0)) throw DomainError("oracle: x must lie strictly inside (0,1)");
}

// cot(pi (xi + x) / 2) with xi + x near 2 handled through the end gaps.
double cot_half_sum(double xi, double xi_gap1, double x)
{
    const double s = xi + x;
    return s <= 1.0 ? 1.0 / std::tan(0.5 * pi * s) : -1.0 / std::tan(0.5 * pi * (xi_gap1 + (1.0 - x)));
}

// Abscissa with its signed offset from x and its distance from 1.
struct Sample {
    double xi;
    double w;
    double offset;
    double gap1;
};

std::vector<Sample> split_samples(double x, int nodes)
{
    const int half = std::max(nodes / 2, 9);
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(2 * half + 2));
    for (const auto& nd : quad::tanh_sinh(0.0, x, half, 1e-20))
        if (nd.x > 0.0) out.push_back({nd.x, nd.w, -nd.gap_hi, 1.0 - nd.x});
    for (const auto& nd : quad::tanh_sinh(x, 1.0, half, 1e-20))
        if (nd.x < 1.0) out.push_back({nd.x, nd.w, nd.gap_lo, nd.gap_hi});
    return out;
}

std::vector<Sample> cosine_samples(double x, int nodes)
{
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(nodes));
    for (int k = 1; k <= nodes; ++k) {
        const double theta = (k - 0.5) * pi / nodes;
        const double xi = 0.5 * (1.0 - std::cos(theta));
        const double gap1 = 0.5 * (1.0 + std::cos(theta));
        const double w = (pi / nodes) * 0.5 * std::sin(theta);
        out.push_back({xi, w, xi - x, gap1});
    }
    return out;
}

}  // namespace

double apply_S(const RealFn& phi, double beta, double x, const PVRule& rule)
{
    check_interior(x);
    if (rule.nodes < 16) throw DomainError("apply_S: PV rule needs at least 16 nodes");
    const auto samples = rule.scheme == PVScheme::SubtractSingularity ? split_samples(x, rule.nodes)
                                                                      : cosine_samples(x, rule.nodes);
    const double px = phi(x);
    double cauchy = 0.0, fixed = 0.0;
    for (const auto& s : samples) {
        const double ps = phi(s.xi);
        if (std::abs(s.offset) < 1e-12) {
            // Removable point of the subtracted integrand: its limit is phi'(x)/pi.
            const double h = 1e-6 * std::min(x, 1.0 - x);
            cauchy += s.w * (phi(x + h) - phi(x - h)) / (2.0 * h) / pi;
        } else {
            cauchy += s.w * 0.5 * (ps - px) / std::tan(0.5 * pi * s.offset);
        }
        if (beta != 0.0) fixed += s.w * 0.5 * cot_half_sum(s.xi, s.gap1, x) * ps;
    }
    // int_0^1 (1/2) cot(pi (xi - x)/2) dxi = (1/pi) log cot(pi x / 2); cot(pi x/2) = tan(pi(1-x)/2)
    const double compensator =
        (x <= 0.5 ? -std::log(std::tan(0.5 * pi * x)) : std::log(std::tan(0.5 * pi * (1.0 - x)))) / pi;
    return cauchy + px * compensator + beta * fixed;
}

double apply_K(const KernelSpec& kernel, const RealFn& phi, double x, int nodes)
{
    check_interior(x);
    double s = 0.0;
    for (const auto& smp : split_samples(x, nodes)) s += smp.w * kernel.regular_part(x, smp.xi) * phi(smp.xi);
    return s;
}

double apply_cauchy(const RealFn& phi, double x, int nodes)
{
    check_interior(x);
    const double px = phi(x);
    double s = 0.0;
    for (const auto& smp : split_samples(x, nodes)) s += smp.w * (phi(smp.xi) - px) / smp.offset;
    return (s + px * std::log((1.0 - x) / x)) / pi;
}

std::vector<double> full_residual(const Solution& solution, const KernelSpec& kernel, const RealFn& F,
                                  std::span<const double> xs, const PVRule& rule)
{
    const RealFn phi = [&solution](double t) { return solution.evaluate(t); };
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs)
        out.push_back(apply_S(phi, kernel.beta, x, rule) + apply_K(kernel, phi, x, rule.nodes) + F(x) -
                      solution.constant_C);
    return out;
}

}  // namespace fixsing
