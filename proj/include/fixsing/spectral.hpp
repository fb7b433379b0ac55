#pragma once

#include <memory>
#include <span>
#include <vector>

#include "fixsing/common.hpp"

// Generalized polynomial basis for |beta| < 1:
//   phi_j(x) = c^{2r} s^{2-2r} q_j^{(r)}(x) + c^{2-2r} s^{2r} q_j^{(1-r)}(x),
//   c = cos(pi x/2), s = sin(pi x/2), r = rho1,
// with q_j^{(a)} a degree-j polynomial in sin^2(pi x/2). The operator maps
//   S[phi_j](x) = N_{j+1} - cos((j+1) pi x).

namespace fixsing {

enum class AlphaSelector { Rho, OneMinusRho };

class SpectralBasis {
public:
    // Built from the exponent directly; rho1 in (1/2, 1). beta is carried for
    // bookkeeping only (rho1 = 3/4 with beta = 0 is the limiting basis).
    SpectralBasis(double beta, double rho1, int max_degree);

    [[nodiscard]] double beta() const { return beta_; }
    [[nodiscard]] double rho1() const { return rho1_; }
    [[nodiscard]] int max_degree() const { return max_degree_; }

    // c_{j nu}^{(alpha)}
    [[nodiscard]] double coeff(int j, int nu, AlphaSelector which) const;

    // q_j^{(alpha)} at t = sin^2(pi x/2). Evaluated by the three-term
    // recurrence in z = 1 - 2t rather than from the monomial coefficients,
    // which alternate and grow like 4^j.
    [[nodiscard]] double q(int j, AlphaSelector which, double t) const;

    // phi_j(x); exactly 0 at x = 0 and x = 1.
    [[nodiscard]] double phi(int j, double x) const;

    // All of phi_0..phi_{count-1} at x.
    void phi_all(double x, std::span<double> out) const;

private:
    [[nodiscard]] const std::vector<double>& row(int j, AlphaSelector which) const;

    double beta_;
    double rho1_;
    int max_degree_;
    std::vector<std::vector<double>> rho_rows_;
    std::vector<std::vector<double>> comp_rows_;
    std::vector<double> rho_moments_;
    std::vector<double> comp_moments_;
};

inline constexpr int basis_degree_cap = 30;

// Coefficients c_{j nu}^{(alpha)}, nu = 0..j, from the Pochhammer double sum.
std::vector<double> basis_coefficients(double alpha, int j);

// Throws DomainError unless 0 < |beta| < 1. Warns above basis_degree_cap.
std::shared_ptr<const SpectralBasis> build_basis(double beta, int max_degree);

double phi(const SpectralBasis& basis, int j, double x);

// Moments M_j = int_0^1 V(x) cos(j pi x) dx of the solvability weight.
double M_coeff(double rho1, int j);
double M_coeff(const SpectralBasis& basis, int j);

// N_j = (sin(pi rho1)/2) M_j; N_0 = 1.
double N_coeff(double rho1, int j);
double N_coeff(const SpectralBasis& basis, int j);

struct SeriesSolution {
    std::shared_ptr<const SpectralBasis> basis;
    std::vector<double> coefficients;  // 2 f_{j+1}, j = 0..m0
    double constant_C = 0.0;
    int m0 = 0;

    [[nodiscard]] double evaluate(double x) const;
};

// Characteristic equation S[phi] = C - F from the cosine coefficients
// f_j = int_0^1 F cos(j pi x) dx. Needs fourier_coeffs.size() >= m0 + 2;
// every supplied coefficient enters the constant C = f_0 + 2 sum_n N_n f_n.
SeriesSolution characteristic_series_solve(std::shared_ptr<const SpectralBasis> basis,
                                           std::span<const double> fourier_coeffs, int m0);

// f_0 + 2 sum_{n=1}^{terms} N_n f_n
double series_constant(double rho1, std::span<const double> fourier_coeffs, int terms);

// Exact int_0^1 x^k cos(n pi x) dx for n = 0..n_max.
std::vector<double> monomial_cosine_coeffs(int k, int n_max);

// (1/pi) PV int_{-1}^{1} (1-t)^{a-1} (1+t)^{-a} T_j(t) / (t - z) dt in closed form.
double J_integral(double alpha, int j, double zeta);

}  // namespace fixsing
