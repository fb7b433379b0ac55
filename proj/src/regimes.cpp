#include "fixsing/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fixsing/quadrature.hpp"

namespace fixsing {
namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// A point of (0,1) with both end distances kept at full precision.
struct Point {
    double x;
    double d0;
    double d1;
};

Point interior(double x)
{
    if (!(x > 0.0 && x < 1.0)) throw DomainError("point must lie strictly inside (0,1)");
    return {x, x, 1.0 - x};
}

double log_tan_half(const Point& p)
{
    return p.x <= 0.5 ? std::log(std::tan(0.5 * pi * p.d0)) : -std::log(std::tan(0.5 * pi * p.d1));
}

double sin_pi(const Point& p) { return std::sin(pi * std::min(p.d0, p.d1)); }

// sin(pi (xi + x) / 2), accurate when xi + x is close to 2.
double sin_half_sum(const Point& a, const Point& b)
{
    const double s = a.x + b.x;
    return s <= 1.0 ? std::sin(0.5 * pi * s) : std::sin(0.5 * pi * (a.d1 + b.d1));
}

// cot(pi (xi + x) / 2), accurate near both 0 and 2.
double cot_half_sum(const Point& a, const Point& b)
{
    const double s = a.x + b.x;
    return s <= 1.0 ? 1.0 / std::tan(0.5 * pi * s) : -1.0 / std::tan(0.5 * pi * (a.d1 + b.d1));
}

double branch_sign(const Regime& r) { return r.branch == Branch::VanishAtZero ? -1.0 : 1.0; }

double weight_at(const Regime& r, const Point& p)
{
    switch (r.kind) {
    case RegimeKind::Zero:
        return std::cos(0.5 * pi * p.x - 0.25 * pi) / std::sqrt(sin_pi(p));
    case RegimeKind::InsideUnit: {
        const double g = r.weight_exponent() * log_tan_half(p);
        return std::exp(g) + std::exp(-g);
    }
    case RegimeKind::AboveOne:
        return std::cos(2.0 * r.epsilon * log_tan_half(p));
    case RegimeKind::BelowMinusOne: {
        const double lt = log_tan_half(p);
        return std::exp(branch_sign(r) * lt) * std::cos(2.0 * r.epsilon * lt);
    }
    case RegimeKind::PlusOne:
        return 1.0;
    case RegimeKind::MinusOne:
        return 0.0;
    }
    return 0.0;
}

struct Halves {
    std::vector<quad::Node> left;
    std::vector<quad::Node> right;
};

Halves split_rule(double x, int nodes)
{
    const int half = std::max(nodes / 2, 9);
    return {quad::tanh_sinh(0.0, x, half, 1e-300), quad::tanh_sinh(x, 1.0, half, 1e-300)};
}

// Visit every abscissa xi with its signed offset xi - x.
template <class F>
double over_split(const Halves& h, F&& body)
{
    // Abscissae whose end gap underflowed carry no weight worth keeping.
    double s = 0.0;
    for (const auto& nd : h.left) {
        if (!(nd.gap_lo > 0.0 && nd.gap_hi > 0.0)) continue;
        const Point xi{nd.x, nd.gap_lo, 1.0 - nd.x};
        s += nd.w * body(xi, -nd.gap_hi);
    }
    for (const auto& nd : h.right) {
        if (!(nd.gap_lo > 0.0 && nd.gap_hi > 0.0)) continue;
        const Point xi{nd.x, nd.x, nd.gap_hi};
        s += nd.w * body(xi, nd.gap_lo);
    }
    return s;
}

// v exp(a), without overflow when exp(a) is huge and v tiny.
double times_exp(double v, double a)
{
    if (v == 0.0) return 0.0;
    return std::copysign(std::exp(a + std::log(std::abs(v))), v);
}

// Glauert-type inverses: int [H(x,xi) f(xi) - f(x)] sin(pi x) / (cos pi xi - cos pi x) dxi.
// H(x,x) = 1 and the principal value of int dxi / (cos pi xi - cos pi x) is 0.
// weighted(la, v) returns H v.
template <class H>
double glauert_inverse(const Point& px, const RealFn& f, int nodes, H&& weighted)
{
    const double fx = f(px.x);
    const double sx = sin_pi(px);
    const double lx = log_tan_half(px);
    const Halves h = split_rule(px.x, nodes);
    return over_split(h, [&](const Point& xi, double offset) {
        const double diff = weighted(log_tan_half(xi) - lx, f(xi.x)) - fx;
        if (diff == 0.0) return 0.0;
        // sx / sin_half_sum stays O(1); dividing in this order avoids underflow near the ends.
        return diff * (sx / (-2.0 * sin_half_sum(xi, px))) / std::sin(0.5 * pi * offset);
    });
}

double zero_inverse(const Point& px, const RealFn& f, int nodes)
{
    const double fx = f(px.x);
    const double sx = sin_pi(px);
    const Halves h = split_rule(px.x, nodes);
    const double body = over_split(h, [&](const Point& xi, double offset) {
        const double g = std::sqrt(sx / sin_pi(xi)) * f(xi.x);
        return (g - fx) / -std::sin(0.5 * pi * offset);
    });
    // PV int_0^1 dxi / sin(pi (x - xi)/2)
    const double pv = (2.0 / pi) * std::log(std::tan(0.25 * pi * px.d0) / std::tan(0.25 * pi * px.d1));
    return 0.5 * (body + fx * pv);
}

// beta = +1 / -1: -(1/2) int [cot(pi(xi-x)/2) -+ cot(pi(xi+x)/2)] f dxi.
double unit_inverse(const Point& px, const RealFn& f, int nodes, double sign)
{
    const double fx = f(px.x);
    const Halves h = split_rule(px.x, nodes);
    const double cauchy = over_split(h, [&](const Point& xi, double offset) {
        return 0.5 * (f(xi.x) - fx) / std::tan(0.5 * pi * offset);
    });
    const double compensator = -log_tan_half(px) / pi;
    const double fixed = over_split(h, [&](const Point& xi, double) { return 0.5 * cot_half_sum(xi, px) * f(xi.x); });
    return -(cauchy + fx * compensator) + sign * fixed;
}

}  // namespace

double Regime::weight_exponent() const
{
    switch (kind) {
    case RegimeKind::Zero:
    case RegimeKind::InsideUnit:
        return 2.0 * rho1 - 1.0;
    case RegimeKind::AboveOne:
    case RegimeKind::BelowMinusOne:
        return epsilon;
    default:
        return 0.0;
    }
}

Regime classify(double beta)
{
    if (!std::isfinite(beta)) throw DomainError("beta must be finite");
    Regime r;
    r.beta = beta;
    r.delta = nan;
    r.rho1 = nan;
    r.epsilon = nan;
    if (beta == 0.0) {
        r.kind = RegimeKind::Zero;
        r.rho1 = 0.75;
    } else if (beta == 1.0) {
        r.kind = RegimeKind::PlusOne;
    } else if (beta == -1.0) {
        r.kind = RegimeKind::MinusOne;
    } else if (std::abs(beta) < 1.0) {
        r.kind = RegimeKind::InsideUnit;
        r.delta = std::atan(std::sqrt(1.0 - beta * beta) / beta) / pi;
        // Same as 1/2 + delta/2 (beta > 0) or 1 + delta/2 (beta < 0), without the branch switch.
        r.rho1 = 0.5 + std::acos(beta) / (2.0 * pi);
    } else {
        r.kind = beta > 0 ? RegimeKind::AboveOne : RegimeKind::BelowMinusOne;
        const double b = std::abs(beta);
        r.epsilon = std::log(b + std::sqrt(b * b - 1.0)) / (2.0 * pi);
    }
    return r;
}

Regime classify(double beta, Branch branch)
{
    Regime r = classify(beta);
    r.branch = branch;
    return r;
}

double solvability_weight(const Regime& regime, double x) { return weight_at(regime, interior(x)); }

namespace {

// int_0^1 V(x) g(x) dx. The algebraic end singularities of V are left to
// tanh-sinh; a Gauss-Jacobi rule in z = cos(pi x) would be exact for V but
// converges slowly for generic g because x(z) has square-root branch points.
template <class G>
double direct_weighted(const Regime& r, int nodes, G&& g)
{
    const auto rule = quad::tanh_sinh(0.0, 1.0, std::max(nodes, 17), 1e-300);
    return quad::integrate(rule, [&](const quad::Node& nd) {
        const Point p{nd.x, nd.gap_lo, nd.gap_hi};
        const double fx = g(p.x);
        if (fx == 0.0) return 0.0;
        return weight_at(r, p) * fx;
    });
}

}  // namespace

double solvability_functional(const Regime& regime, const RealFn& f, int nodes)
{
    if (nodes < 1) throw DomainError("solvability_functional: need at least one node");
    if (regime.kind == RegimeKind::MinusOne) return 0.0;
    return direct_weighted(regime, nodes, f);
}

double solvability_ratio(const Regime& regime, const RealFn& f, int nodes)
{
    if (regime.kind == RegimeKind::MinusOne) return 0.0;
    const double signed_part = solvability_functional(regime, f, nodes);
    const double scale = direct_weighted(regime, nodes, [&](double x) { return std::abs(f(x)); });
    if (scale == 0.0) return 0.0;
    return std::abs(signed_part) / scale;
}

double inverse_characteristic(const Regime& regime, const RealFn& f, double x, int nodes, bool check_solvability)
{
    const Point px = interior(x);
    if (nodes < 2) throw DomainError("inverse_characteristic: need at least two nodes");
    if (check_solvability) {
        const double ratio = solvability_ratio(regime, f, std::max(nodes, 64));
        if (ratio > solvability_tolerance) {
            std::ostringstream os;
            os << "right-hand side fails the solvability condition (relative residual " << ratio << ")";
            warn(os.str());
        }
    }
    switch (regime.kind) {
    case RegimeKind::Zero:
        return zero_inverse(px, f, nodes);
    case RegimeKind::InsideUnit: {
        const double g = regime.weight_exponent();
        return glauert_inverse(px, f, nodes, [g](double la, double v) {
            return 0.5 * (times_exp(v, g * la) + times_exp(v, -g * la));
        });
    }
    case RegimeKind::AboveOne: {
        const double e2 = 2.0 * regime.epsilon;
        return glauert_inverse(px, f, nodes, [e2](double la, double v) { return std::cos(e2 * la) * v; });
    }
    case RegimeKind::BelowMinusOne: {
        const double e2 = 2.0 * regime.epsilon;
        const double s = branch_sign(regime);
        // The integral converges only when f vanishes where the branch does.
        const double end = regime.branch == Branch::VanishAtZero ? f(0.0) : f(1.0);
        if (std::abs(end) > 1e-12 * (1.0 + std::abs(f(x)))) warn("inverse for beta < -1: f must vanish at the end where the branch vanishes");
        return glauert_inverse(px, f, nodes,
                               [e2, s](double la, double v) { return times_exp(v, s * la) * std::cos(e2 * la); });
    }
    case RegimeKind::PlusOne:
        return unit_inverse(px, f, nodes, +1.0);
    case RegimeKind::MinusOne:
        return unit_inverse(px, f, nodes, -1.0);
    }
    return 0.0;
}

EndpointAsymptotics endpoint_asymptotics(const Regime& regime)
{
    EndpointAsymptotics a;
    switch (regime.kind) {
    case RegimeKind::Zero:
        a.exponent_at_0 = a.exponent_at_1 = 0.5;
        break;
    case RegimeKind::InsideUnit:
        a.exponent_at_0 = a.exponent_at_1 = 2.0 - 2.0 * regime.rho1;
        break;
    case RegimeKind::AboveOne:
        a.exponent_at_0 = a.exponent_at_1 = 1.0;
        a.oscillatory_at_0 = a.oscillatory_at_1 = true;
        a.log_frequency = 2.0 * regime.epsilon;
        break;
    case RegimeKind::BelowMinusOne:
        a.oscillatory_at_0 = a.oscillatory_at_1 = true;
        a.log_frequency = 2.0 * regime.epsilon;
        if (regime.branch == Branch::VanishAtZero) {
            a.exponent_at_0 = 2.0;
            a.exponent_at_1 = 0.0;
        } else {
            a.exponent_at_0 = 0.0;
            a.exponent_at_1 = 2.0;
        }
        break;
    case RegimeKind::PlusOne:
        a.exponent_at_0 = a.exponent_at_1 = 1.0;
        break;
    case RegimeKind::MinusOne:
        a.exponent_at_0 = a.exponent_at_1 = 0.0;
        break;
    }
    return a;
}

}  // namespace fixsing
