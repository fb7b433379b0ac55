#pragma once

// Pochhammer symbols, Chebyshev polynomials and the terminating unit-argument
// 3F2 sums behind the Jacobi-weighted Chebyshev moments.

namespace fixsing {

// (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1.
double pochhammer(double a, int m);

double chebyshev_T(int n, double x);
double chebyshev_U(int n, double x);

// sum_{m=0}^{j} (-j)_m (p)_m (a)_m / ((c1)_m (c2)_m m!)
// Throws DomainError when (c1)_m or (c2)_m vanishes inside the range.
double terminating_3F2(int j, double p, double a, double c1, double c2);

// 3F2(-j, j, a; 1/2, b; 1)
double hyp3F2_terminating(int j, double a, double b);

// int_{-1}^{1} (1-z)^alpha1 (1+z)^alpha2 T_j(z) dz, closed form.
double jacobi_chebyshev_integral_T(double alpha1, double alpha2, int j);

// Same with U_j; carries the (j+1) prefactor and 3F2(-j, j+2, alpha1+1; 3/2, alpha1+alpha2+2; 1).
double jacobi_chebyshev_integral_U(double alpha1, double alpha2, int j);

}  // namespace fixsing
