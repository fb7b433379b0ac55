#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "fixsing/common.hpp"
#include "fixsing/specfun.hpp"
#include "oracles.hpp"

using namespace fixsing;
using boost::multiprecision::cpp_rational;

namespace {

// 3F2(-j, j, a; 1/2, b; 1) in exact rational arithmetic.
cpp_rational exact_3F2(int j, cpp_rational a, cpp_rational b)
{
    cpp_rational term = 1, sum = 1;
    const cpp_rational half(1, 2);
    for (int m = 0; m < j; ++m) {
        term *= cpp_rational(-j + m) * cpp_rational(j + m) * (a + m) / ((half + m) * (b + m) * (m + 1));
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("pochhammer symbols")
{
    CHECK(pochhammer(0.3, 0) == 1.0);
    CHECK(pochhammer(1.0, 5) == doctest::Approx(120.0));
    CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
    CHECK(pochhammer(-3.0, 4) == 0.0);
    CHECK_THROWS_AS(pochhammer(1.0, -1), DomainError);
}

TEST_CASE("chebyshev polynomials against trigonometric forms")
{
    for (int n = 0; n <= 25; ++n)
        for (double th : {0.05, 0.9, 1.6, 2.4, 3.1}) {
            const double z = std::cos(th);
            CHECK(chebyshev_T(n, z) == doctest::Approx(std::cos(n * th)).epsilon(1e-12).scale(1.0));
            CHECK(chebyshev_U(n, z) ==
                  doctest::Approx(std::sin((n + 1) * th) / std::sin(th)).epsilon(1e-11).scale(1.0));
        }
    // outside [-1, 1]
    CHECK(chebyshev_T(6, 1.3) == doctest::Approx(std::cosh(6 * std::acosh(1.3))));
    CHECK(chebyshev_U(0, 7.0) == 1.0);
    CHECK(chebyshev_U(1, 0.25) == 0.5);
}

TEST_CASE("terminating 3F2 matches exact rational sums")
{
    const std::pair<int, int> as[] = {{1, 3}, {2, 3}, {3, 4}, {7, 10}};
    const std::pair<int, int> bs[] = {{1, 1}, {5, 4}, {1, 3}};
    for (auto [ap, aq] : as)
        for (auto [bp, bq] : bs)
            for (int j = 0; j <= 10; ++j) {
                const cpp_rational a(ap, aq), b(bp, bq);
                const double exact = static_cast<double>(exact_3F2(j, a, b));
                const double got = hyp3F2_terminating(j, static_cast<double>(ap) / aq, static_cast<double>(bp) / bq);
                CHECK(got == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
            }
}

TEST_CASE("terminating 3F2 rejects a vanishing lower parameter")
{
    CHECK_THROWS_AS(terminating_3F2(4, 1.0, 1.0, -2.0, 1.0), DomainError);
    CHECK_NOTHROW(terminating_3F2(2, 1.0, 1.0, -2.0, 1.0));
}

TEST_CASE("Jacobi-weighted Chebyshev integrals against adaptive quadrature")
{
    const double grid[] = {-0.6, -0.25, 0.0, 0.4, 1.5};
    for (double a1 : grid)
        for (double a2 : grid) {
            const double scale = oracle::jacobi(a1, a2, [](double) { return 1.0; });
            for (int j = 0; j <= 9; ++j) {
                const double qT = oracle::jacobi(a1, a2, [j](double z) { return chebyshev_T(j, z); });
                const double qU = oracle::jacobi(a1, a2, [j](double z) { return chebyshev_U(j, z); });
                INFO("a1=" << a1 << " a2=" << a2 << " j=" << j);
                CHECK(std::abs(jacobi_chebyshev_integral_T(a1, a2, j) - qT) <= 1e-9 * scale);
                CHECK(std::abs(jacobi_chebyshev_integral_U(a1, a2, j) - qU) <= 1e-9 * (j + 1) * scale);
            }
        }
    CHECK_THROWS_AS(jacobi_chebyshev_integral_T(-1.0, 0.0, 2), DomainError);
}
