#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixsing/cauchy.hpp"
#include "fixsing/kernels.hpp"
#include "fixsing/specfun.hpp"
#include "oracles.hpp"

using namespace fixsing;

namespace {

// (1/pi) PV int_0^1 phi(xi)/(xi - x) dxi for phi = sqrt(xi(1-xi)) g(xi):
// subtract g(x) and use PV int sqrt(xi(1-xi))/(xi - x) = pi (1/2 - x).
template <class G>
double cauchy_forward(G g, double x)
{
    const double gx = g(x);
    auto body = [&](double xi) { return std::sqrt(xi * (1 - xi)) * (g(xi) - gx) / (xi - x); };
    return (oracle::tanh_sinh(body, 0.0, x) + oracle::tanh_sinh(body, x, 1.0)) / pi + gx * (0.5 - x);
}

}  // namespace

TEST_CASE("PV image of the weighted U_j is -(pi/2) T_{j+1}")
{
    for (int j = 0; j <= 8; ++j)
        for (int i = 1; i <= 11; ++i) {
            const double x = i / 12.0;
            const double v = cauchy_forward([j](double t) { return chebyshev_U(j, 2 * t - 1); }, x);
            CHECK(pi * v == doctest::Approx(-0.5 * pi * chebyshev_T(j + 1, 2 * x - 1)).epsilon(1e-10).scale(1.0));
        }
}

TEST_CASE("the closed-form inverse")
{
    for (double x : {0.01, 0.3, 0.5, 0.77, 0.99}) CHECK(std::abs(cauchy_inverse([](double) { return 1.0; }, x)) < 1e-12);
    // sqrt(x(1-x)) has image 1/2 - x
    for (double x : {0.1, 0.5, 0.8})
        CHECK(cauchy_inverse([](double t) { return 0.5 - t; }, x) == doctest::Approx(std::sqrt(x * (1 - x))).epsilon(1e-12));
    // forward of the inverse for a load meeting the condition int F / sqrt(x(1-x)) = 0
    const auto F = [](double t) { return std::exp(t) - std::exp(0.5) * std::cyl_bessel_i(0, 0.5); };
    for (double x : {0.2, 0.6}) {
        const double w = cauchy_forward(
            [&](double t) { return cauchy_inverse(F, t, 400) / std::sqrt(t * (1 - t)); }, x);
        CHECK(w == doctest::Approx(F(x)).epsilon(1e-8).scale(1.0));
    }
    CHECK_THROWS_AS(cauchy_inverse([](double) { return 1.0; }, 0.0), DomainError);
}

TEST_CASE("K = 0 solve is exact for F = x")
{
    const auto sol = cauchy_solve([](double, double) { return 0.0; }, [](double x) { return x; }, 8, 60, 64);
    CHECK(sol.constant_C == doctest::Approx(0.5).epsilon(1e-13));
    for (double x : {0.1, 0.25, 0.5, 0.9}) CHECK(sol.evaluate(x) == doctest::Approx(std::sqrt(x * (1 - x))).epsilon(1e-12));
    CHECK(sol.evaluate(0.0) == 0.0);
    CHECK(sol.evaluate(1.0) == 0.0);
}

TEST_CASE("solve with a smooth kernel satisfies the equation")
{
    const KernelFn K = [](double x, double xi) { return 1.0 + x * xi + std::cos(2.0 * (x - xi)); };
    const auto F = [](double x) { return x * x * x - x; };
    const auto sol = cauchy_solve(K, F, 14, 200, 210);
    for (double x : {0.1, 0.45, 0.8}) {
        const auto g = [&](double t) {
            const double s = std::sqrt(t * (1 - t));
            return s > 0 ? sol.evaluate(t) / s : 0.0;
        };
        const double kphi = oracle::tanh_sinh([&](double xi) { return K(x, xi) * sol.evaluate(xi); }, 0.0, 1.0) / pi;
        CHECK(cauchy_forward(g, x) + kphi == doctest::Approx(sol.constant_C - F(x)).epsilon(1e-9).scale(1.0));
    }
    CHECK(sol.residual_report.at("solvability_residual") < 1e-10 * (1.0 + sol.residual_report.at("solvability_scale")));
}

TEST_CASE("equal moduli: the antiplane kernel routes to the Cauchy solver")
{
    const auto k = antiplane_kernel(antiplane_params(1.0));
    const auto sol = cauchy_solve(cauchy_regular_part(k), [](double x) { return x; }, 17, 200, 210);
    CHECK(sol.evaluate(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sol.evaluate(0.25) == doctest::Approx(std::sqrt(0.1875)).epsilon(1e-12));
    CHECK_THROWS_AS(cauchy_regular_part(antiplane_kernel(antiplane_params(2.0))), DomainError);
    CHECK_THROWS_AS(cauchy_solve([](double, double) { return 0.0; }, [](double x) { return x; }, 10, 10, 10),
                    DomainError);
}
