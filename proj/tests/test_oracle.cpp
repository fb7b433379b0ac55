#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixsing/complete.hpp"
#include "fixsing/oracle.hpp"
#include "fixsing/specfun.hpp"
#include "oracles.hpp"

using namespace fixsing;

namespace {

const RealFn bump = [](double x) { return std::pow(x * (1 - x), 0.75) * (1 + 2 * x); };
const RealFn wave = [](double x) { return std::sin(pi * x) * std::cos(3 * x); };

}  // namespace

TEST_CASE("apply_S against adaptive quadrature")
{
    for (double beta : {0.0, 0.5, -0.8, 1.0, 2.0, -3.0})
        for (const auto& phi : {bump, wave})
            for (double x : {0.03, 0.3, 0.5, 0.88}) {
                INFO("beta=" << beta << " x=" << x);
                CHECK(apply_S(phi, beta, x) == doctest::Approx(oracle::apply_S(phi, beta, x)).epsilon(1e-8).scale(1.0));
            }
}

TEST_CASE("apply_S is linear and converges with the rule size")
{
    for (double x : {0.2, 0.7}) {
        const double a = apply_S(bump, 0.4, x), b = apply_S(wave, 0.4, x);
        const double ab = apply_S([](double t) { return 2.0 * bump(t) - 3.0 * wave(t); }, 0.4, x);
        CHECK(ab == doctest::Approx(2.0 * a - 3.0 * b).epsilon(1e-13).scale(1.0));
        CHECK(std::abs(apply_S(wave, 0.4, x, PVRule{256}) - apply_S(wave, 0.4, x, PVRule{512})) < 1e-6);
        CHECK(apply_S(wave, 0.4, x, PVRule{512, PVScheme::CosineMap}) ==
              doctest::Approx(apply_S(wave, 0.4, x)).epsilon(1e-6).scale(1.0));
    }
    CHECK_THROWS_AS(apply_S(wave, 0.4, 0.0), DomainError);
    CHECK_THROWS_AS(apply_S(wave, 0.4, 0.5, PVRule{8}), DomainError);
}

TEST_CASE("at beta = 1 the kernel is sin(pi xi)/(cos(pi x) - cos(pi xi))")
{
    for (double x : {0.15, 0.5, 0.8}) {
        const double cx = std::cos(pi * x), px = wave(x);
        auto body = [&](double xi) {
            const double d = cx - std::cos(pi * xi);
            return d == 0.0 ? 0.0 : std::sin(pi * xi) * (wave(xi) - px) / d;
        };
        // PV int_0^1 sin(pi xi)/(cos pi x - cos pi xi) dxi = (1/pi) log((1 + cos pi x)/(1 - cos pi x))
        const double pv_const = std::log((1 + cx) / (1 - cx)) / pi;
        const double expected = oracle::tanh_sinh(body, 0.0, x) + oracle::tanh_sinh(body, x, 1.0) + px * pv_const;
        CHECK(apply_S(wave, 1.0, x) == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("apply_K and apply_cauchy")
{
    KernelSpec k = zero_kernel(0.5);
    k.regular_part = [](double x, double xi) { return std::exp(-x * xi) / (1.0 + xi); };
    for (double x : {0.1, 0.6}) {
        const double ref = oracle::kronrod([&](double xi) { return k.regular_part(x, xi) * wave(xi); }, 0.0, 1.0);
        CHECK(apply_K(k, wave, x) == doctest::Approx(ref).epsilon(1e-10));
    }
    for (int j = 0; j <= 5; ++j)
        for (double x : {0.1, 0.5, 0.72}) {
            const auto w = [j](double t) { return std::sqrt(t * (1 - t)) * chebyshev_U(j, 2 * t - 1); };
            CHECK(apply_cauchy(w, x) == doctest::Approx(-0.5 * chebyshev_T(j + 1, 2 * x - 1)).epsilon(1e-9).scale(1.0));
        }
}

TEST_CASE("full residual is small for a converged solve and large for a wrong constant")
{
    SolveConfig c;
    c.N = 12;
    c.pv_nodes = 0;
    const auto sol = solve(zero_kernel(0.5), [](double x) { return x; }, c);
    const std::vector<double> xs{0.2, 0.5, 0.8};
    // with K = 0 only the cosine truncation of F remains
    for (double r : full_residual(sol, zero_kernel(0.5), [](double x) { return x; }, xs)) CHECK(std::abs(r) < 5e-3);
    auto off = sol;
    off.constant_C += 0.1;
    for (double r : full_residual(off, zero_kernel(0.5), [](double x) { return x; }, xs))
        CHECK(std::abs(r) == doctest::Approx(0.1).epsilon(0.06));
}
