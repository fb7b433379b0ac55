#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "fixsing/regimes.hpp"
#include "oracles.hpp"

using namespace fixsing;

namespace {

// g minus the constant the weight cannot see, so the solvability condition holds.
RealFn admissible(const Regime& r, RealFn g)
{
    if (r.kind == RegimeKind::MinusOne) return g;
    const double shift = solvability_functional(r, g, 400) / solvability_functional(r, [](double) { return 1.0; }, 400);
    return [g, shift](double x) { return g(x) - shift; };
}

struct CaptureWarnings {
    std::vector<std::string> seen;
    CaptureWarnings()
    {
        set_warning_sink([this](std::string_view m) { seen.emplace_back(m); });
    }
    ~CaptureWarnings() { set_warning_sink(nullptr); }
};

}  // namespace

TEST_CASE("classification by beta")
{
    CHECK(classify(0.0).kind == RegimeKind::Zero);
    CHECK(classify(0.0).rho1 == doctest::Approx(0.75));
    CHECK(classify(0.5).kind == RegimeKind::InsideUnit);
    CHECK(classify(0.5).rho1 == doctest::Approx(2.0 / 3.0));
    CHECK(classify(-0.5).rho1 == doctest::Approx(5.0 / 6.0));
    CHECK(classify(0.5).weight_exponent() == doctest::Approx(1.0 / 3.0));
    CHECK(classify(1.0).kind == RegimeKind::PlusOne);
    CHECK(classify(-1.0).kind == RegimeKind::MinusOne);
    CHECK(classify(2.0).kind == RegimeKind::AboveOne);
    CHECK(classify(2.0).epsilon == doctest::Approx(std::log(2.0 + std::sqrt(3.0)) / (2.0 * std::numbers::pi)));
    CHECK(classify(-3.0).kind == RegimeKind::BelowMinusOne);
    CHECK(classify(-3.0).epsilon == doctest::Approx(classify(3.0).epsilon));
    CHECK_THROWS_AS(classify(std::nan("")), DomainError);
}

TEST_CASE("solvability weight")
{
    for (double beta : {0.7, 0.0, -0.4, 1.0})
        for (double x : {0.01, 0.3, 0.5, 0.9}) CHECK(solvability_weight(classify(beta), x) > 0.0);
    // outside [-1, 1] the weight oscillates in log tan(pi x/2)
    int flips = 0;
    double last = solvability_weight(classify(2.5), 1e-9);
    for (double x = 1e-9; x < 0.5; x *= 1.5) {
        const double w = solvability_weight(classify(2.5), x);
        if ((w > 0) != (last > 0)) ++flips;
        last = w;
    }
    CHECK(flips >= 2);
    CHECK(solvability_weight(classify(-1.0), 0.4) == 0.0);
    CHECK_THROWS_AS(solvability_weight(classify(0.5), 0.0), DomainError);

    // An admissible load passes the gate; a constant does not.
    for (double beta : {0.5, -0.5, 2.0, 0.0, 1.0}) {
        const Regime r = classify(beta);
        CHECK(solvability_ratio(r, admissible(r, [](double x) { return x * x + std::sin(x); }), 400) < 1e-10);
        CHECK(solvability_ratio(r, [](double) { return 1.0; }, 400) > 0.1);
    }
    CHECK(solvability_ratio(classify(-1.0), [](double) { return 1.0; }, 400) == 0.0);
}

TEST_CASE("inverse followed by the forward operator returns the load")
{
    for (double beta : {0.5, -0.5, 2.0, 0.0, 1.0, -1.0, 0.9, -0.9, 4.0}) {
        const Regime r = classify(beta);
        const RealFn f = admissible(r, [](double x) { return std::cos(std::numbers::pi * x) + x * x; });
        for (double x : {0.15, 0.4, 0.5, 0.85}) {
            const double v = oracle::apply_S([&](double t) { return inverse_characteristic(r, f, t, 200); }, beta, x);
            INFO("beta=" << beta << " x=" << x);
            CHECK(v == doctest::Approx(f(x)).epsilon(1e-7).scale(1.0));
        }
    }
}

TEST_CASE("beta < -1: the inverse recovers phi from S[phi] shifted to vanish at 0")
{
    const double beta = -2.0;
    const Regime r = classify(beta, Branch::VanishAtZero);
    const auto phi = [](double x) { return x * x * (1 - x) * (1 - x) * (1 + x); };
    const auto fwd = [&](double x) { return oracle::apply_S(phi, beta, x); };
    // S[phi] extends continuously to x = 0; sample close to it and extrapolate.
    const double h = 1e-5;
    const double f0 = 2 * fwd(h) - fwd(2 * h);
    const RealFn g = [&](double x) { return x <= 0.0 ? 0.0 : fwd(x) - f0; };
    for (double x : {0.2, 0.5, 0.8}) CHECK(inverse_characteristic(r, g, x, 200) == doctest::Approx(phi(x)).epsilon(1e-5).scale(1.0));
}

TEST_CASE("beta < -1 warns when the load does not vanish at the branch end")
{
    CaptureWarnings w;
    const Regime r = classify(-2.0, Branch::VanishAtZero);
    (void)inverse_characteristic(r, [](double) { return 1.0; }, 0.5, 100);
    CHECK(!w.seen.empty());
}

TEST_CASE("endpoint exponents of the inverse")
{
    for (double beta : {0.5, -0.5, 0.0, 0.2}) {
        const Regime r = classify(beta);
        const RealFn f = admissible(r, [](double x) { return std::cos(std::numbers::pi * x) + x * x; });
        const auto inv = [&](double x) { return inverse_characteristic(r, f, x, 400); };
        const double fit = std::log(std::abs(inv(1e-6) / inv(1e-4))) / std::log(1e-2);
        const double expected = endpoint_asymptotics(r).exponent_at_0;
        INFO("beta=" << beta);
        CHECK(std::abs(fit - expected) <= 0.05 * expected);
    }
    const auto a = endpoint_asymptotics(classify(-2.0, Branch::VanishAtOne));
    CHECK(a.oscillatory_at_0);
    CHECK(a.exponent_at_1 == 2.0);
    CHECK(a.log_frequency == doctest::Approx(2.0 * classify(-2.0).epsilon));
}
