#pragma once

#include "fixsing/common.hpp"

// The operator S[phi](x) = int_0^1 [ (1/2)cot(pi(xi-x)/2) + (beta/2)cot(pi(xi+x)/2) ] phi(xi) dxi
// splits into regimes by beta. This header classifies beta and supplies the
// closed-form inverses together with their solvability conditions.

namespace fixsing {

enum class RegimeKind { Zero, InsideUnit, PlusOne, MinusOne, AboveOne, BelowMinusOne };

// For beta < -1 two inverses exist; each vanishes at one end and stays
// bounded (and oscillates) at the other.
enum class Branch { VanishAtZero, VanishAtOne };

struct Regime {
    double beta = 0.0;
    RegimeKind kind = RegimeKind::Zero;
    double delta = 0.0;    // |beta|<1, beta != 0 only; NaN elsewhere
    double rho1 = 0.0;     // |beta|<1 only; in (1/2, 1); 3/4 at beta = 0
    double epsilon = 0.0;  // |beta|>1 only: log(|beta| + sqrt(beta^2-1)) / (2 pi)
    Branch branch = Branch::VanishAtZero;

    // Exponent of the tan/cot powers in the weight and the inverse:
    // 2 rho1 - 1 inside the unit interval, epsilon outside.
    [[nodiscard]] double weight_exponent() const;
};

struct EndpointAsymptotics {
    double exponent_at_0 = 0.0;
    double exponent_at_1 = 0.0;
    bool oscillatory_at_0 = false;
    bool oscillatory_at_1 = false;
    double log_frequency = 0.0;  // 2 epsilon when oscillating
};

Regime classify(double beta);
Regime classify(double beta, Branch branch);

// V(x), 0 < x < 1. Zero for beta = -1 (no condition).
double solvability_weight(const Regime& regime, double x);

// int_0^1 V f dx. Gauss-Jacobi in z = cos(pi x) for |beta| < 1, tanh-sinh otherwise.
double solvability_functional(const Regime& regime, const RealFn& f, int nodes);

// |int V f| / int |V f|; 0 when f is exactly admissible. Always 0 for beta = -1.
double solvability_ratio(const Regime& regime, const RealFn& f, int nodes);

inline constexpr double solvability_tolerance = 1e-6;

// S^{-1}[f](x) by principal-value quadrature of the closed-form inverse.
// nodes is the total node count, split evenly at x. When check_solvability
// is set, a warning is emitted if f fails the solvability gate.
double inverse_characteristic(const Regime& regime, const RealFn& f, double x, int nodes,
                              bool check_solvability = false);

EndpointAsymptotics endpoint_asymptotics(const Regime& regime);

}  // namespace fixsing
