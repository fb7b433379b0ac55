#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fixsing/complete.hpp"
#include "fixsing/kernels.hpp"
#include "oracles.hpp"

using namespace fixsing;

namespace {

// S[phi] + K[phi] + F - C at x, all integrals adaptive.
double residual(const Solution& s, const KernelSpec& k, const RealFn& F, double x)
{
    const auto phi = [&](double t) { return s.evaluate(t); };
    const double kphi = oracle::tanh_sinh([&](double xi) { return k.regular_part(x, xi) * phi(xi); }, 0.0, x) +
                        oracle::tanh_sinh([&](double xi) { return k.regular_part(x, xi) * phi(xi); }, x, 1.0);
    return oracle::apply_S(phi, k.beta, x) + kphi + F(x) - s.constant_C;
}

const RealFn linear_load = [](double x) { return x; };

SolveConfig quick(int N)
{
    SolveConfig c;
    c.N = N;
    c.pv_nodes = 0;
    return c;
}

}  // namespace

TEST_CASE("midpoint cosine coefficients")
{
    const auto f = fourier_load_coeffs([](double x) { return 3.0 + std::cos(2 * std::numbers::pi * x); }, 50, 6);
    CHECK(f[0] == doctest::Approx(3.0));
    CHECK(f[2] == doctest::Approx(0.5));
    for (int n : {1, 3, 4, 5, 6}) CHECK(std::abs(f[static_cast<std::size_t>(n)]) < 1e-14);
    CHECK_THROWS_AS(fourier_load_coeffs(linear_load, 10, 10), DomainError);
}

TEST_CASE("truncation conventions")
{
    SolveConfig c;
    c.N = 10;
    CHECK(c.basis_count() == 9);
    c.truncation = Truncation::BasisCount;
    CHECK(c.basis_count() == 10);
}

TEST_CASE("kernel matrix of a constant kernel holds the basis means")
{
    const auto basis = build_basis(0.5, 6);
    KernelSpec one = zero_kernel(0.5);
    one.regular_part = [](double, double) { return 1.0; };
    SolveConfig c;
    c.t1 = 100;
    c.t2 = 400;
    const auto k = kernel_matrix(one, *basis, c, 6);
    for (int j = 0; j <= 6; ++j) {
        const double mean = oracle::tanh_sinh([&](double x) { return basis->phi(j, x); }, 0.0, 1.0);
        CHECK(k(0, j) == doctest::Approx(mean).epsilon(1e-4).scale(1.0));
        for (int n = 1; n <= 6; ++n) CHECK(std::abs(k(n, j)) < 1e-13);
    }
}

TEST_CASE("zero kernel reduces to the series solution")
{
    const auto c = quick(12);
    const auto sol = solve(zero_kernel(0.5), linear_load, c);
    const auto series = characteristic_series_solve(build_basis(0.5, c.N),
                                                    fourier_load_coeffs(linear_load, c.t1, c.basis_count()),
                                                    c.basis_count() - 1);
    for (double x : {0.1, 0.35, 0.5, 0.9}) CHECK(sol.evaluate(x) == doctest::Approx(series.evaluate(x)).epsilon(1e-10));
    CHECK(sol.constant_C == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("antiplane solve satisfies the integral equation")
{
    const auto kernel = antiplane_kernel(antiplane_params(0.5));
    const auto coarse = solve(kernel, linear_load, quick(5));
    const auto fine = solve(kernel, linear_load, quick(20));
    double worst_coarse = 0.0, worst_fine = 0.0;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        worst_coarse = std::max(worst_coarse, std::abs(residual(coarse, kernel, linear_load, x)));
        worst_fine = std::max(worst_fine, std::abs(residual(fine, kernel, linear_load, x)));
    }
    CHECK(worst_fine < 1e-3);
    CHECK(worst_fine < worst_coarse);
    CHECK(fine.residual_report.at("solvability_residual") <= 1e-10 * fine.residual_report.at("solvability_scale"));
    CHECK(fine.residual_report.at("linear_residual") < 1e-12);
}

TEST_CASE("the oracle residual in the report matches an adaptive one")
{
    const auto kernel = antiplane_kernel(antiplane_params(0.5));
    SolveConfig c;
    c.N = 12;
    const auto sol = solve(kernel, linear_load, c);
    double worst = 0.0;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) worst = std::max(worst, std::abs(residual(sol, kernel, linear_load, x)));
    CHECK(sol.residual_report.at("equation_residual") == doctest::Approx(worst).epsilon(1e-3));
}

TEST_CASE("linearity in the load")
{
    const auto kernel = antiplane_kernel(antiplane_params(3.0));
    const RealFn G = [](double x) { return x * x * std::exp(x); };
    const auto c = quick(10);
    const auto a = solve(kernel, linear_load, c);
    const auto b = solve(kernel, G, c);
    const auto ab = solve(kernel, [&](double x) { return 2.0 * x - 0.5 * G(x); }, c);
    CHECK(ab.constant_C == doctest::Approx(2.0 * a.constant_C - 0.5 * b.constant_C));
    for (std::size_t j = 0; j < ab.b.size(); ++j) CHECK(ab.b[j] == doctest::Approx(2.0 * a.b[j] - 0.5 * b.b[j]).scale(1.0));
}

TEST_CASE("relabelling x -> 1 - x reflects the solution")
{
    const auto kernel = antiplane_kernel(antiplane_params(0.5));
    const RealFn F = [](double x) { return x * x; };
    KernelSpec mirrored = kernel;
    mirrored.regular_part = [K = kernel.regular_part](double x, double xi) { return -K(1.0 - x, 1.0 - xi); };
    const auto c = quick(12);
    const auto s = solve(kernel, F, c);
    const auto m = solve(mirrored, [&](double x) { return -F(1.0 - x); }, c);
    for (double x : {0.1, 0.4, 0.75}) CHECK(m.evaluate(x) == doctest::Approx(s.evaluate(1.0 - x)).epsilon(1e-10));
    CHECK(m.constant_C == doctest::Approx(-s.constant_C));
}

TEST_CASE("solver guards")
{
    CHECK_THROWS_AS(solve(zero_kernel(0.0), linear_load, quick(5)), DomainError);
    CHECK_THROWS_AS(solve(zero_kernel(1.0), linear_load, quick(5)), DomainError);
    SolveConfig c = quick(5);
    c.t1 = 4;
    CHECK_THROWS_AS(solve(zero_kernel(0.5), linear_load, c), DomainError);

    KernelSpec broken = zero_kernel(0.5);
    broken.regular_part = [](double, double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(solve(broken, linear_load, quick(5)), SingularSystemError);

    std::vector<std::string> seen;
    set_warning_sink([&](std::string_view m) { seen.emplace_back(m); });
    (void)solve(zero_kernel(0.5), linear_load, quick(28));
    set_warning_sink(nullptr);
    CHECK(!seen.empty());
}
