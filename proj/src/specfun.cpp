#include "fixsing/specfun.hpp"

#include <cmath>
#include <string>

#include "fixsing/common.hpp"

namespace fixsing {

double pochhammer(double a, int m)
{
    if (m < 0) throw DomainError("pochhammer: negative shift");
    double r = 1.0;
    for (int k = 0; k < m; ++k) r *= a + k;
    return r;
}

double chebyshev_T(int n, double x)
{
    if (n < 0) throw DomainError("chebyshev_T: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double chebyshev_U(int n, double x)
{
    if (n < 0) throw DomainError("chebyshev_U: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double terminating_3F2(int j, double p, double a, double c1, double c2)
{
    if (j < 0) throw DomainError("terminating_3F2: negative order");
    // Term ratio t_{m+1}/t_m = (m-j)(p+m)(a+m) / ((c1+m)(c2+m)(m+1)).
    // Extended precision buys a few digits against the alternating cancellation.
    long double term = 1.0L, sum = 1.0L;
    for (int m = 0; m < j; ++m) {
        const long double den = (static_cast<long double>(c1) + m) * (static_cast<long double>(c2) + m) * (m + 1);
        if (den == 0.0L)
            throw DomainError("terminating_3F2: vanishing denominator at m=" + std::to_string(m + 1));
        term *= static_cast<long double>(m - j) * (static_cast<long double>(p) + m) *
                (static_cast<long double>(a) + m) / den;
        sum += term;
    }
    return static_cast<double>(sum);
}

double hyp3F2_terminating(int j, double a, double b)
{
    return terminating_3F2(j, j, a, 0.5, b);
}

namespace {

double beta_prefactor(double alpha1, double alpha2)
{
    if (!(alpha1 > -1.0) || !(alpha2 > -1.0))
        throw DomainError("Jacobi exponents must exceed -1");
    return std::exp2(alpha1 + alpha2 + 1.0) * std::tgamma(alpha1 + 1.0) * std::tgamma(alpha2 + 1.0) /
           std::tgamma(alpha1 + alpha2 + 2.0);
}

}  // namespace

double jacobi_chebyshev_integral_T(double alpha1, double alpha2, int j)
{
    const double pre = beta_prefactor(alpha1, alpha2);
    return pre * terminating_3F2(j, j, alpha1 + 1.0, 0.5, alpha1 + alpha2 + 2.0);
}

double jacobi_chebyshev_integral_U(double alpha1, double alpha2, int j)
{
    const double pre = beta_prefactor(alpha1, alpha2);
    return pre * (j + 1) * terminating_3F2(j, j + 2, alpha1 + 1.0, 1.5, alpha1 + alpha2 + 2.0);
}

}  // namespace fixsing
