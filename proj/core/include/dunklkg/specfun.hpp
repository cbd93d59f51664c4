#pragma once

// Classical orthogonal polynomials (generalized Laguerre, Jacobi) evaluated by
// three-term recurrence, plus the log-gamma wrapper used for normalization
// constants throughout the library.

namespace dunklkg::specfun {

// log Gamma(x) for x > 0.  Throws std::domain_error otherwise.
double log_gamma(double x);

// log n! for n >= 0.
double log_factorial(int n);

// Generalized Laguerre polynomial L_n^alpha(x), alpha > -1.
// Recurrence: (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
double laguerre(int n, double alpha, double x);

// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x)  (0 for n = 0).
double laguerre_derivative(int n, double alpha, double x);

// d^2/dx^2 L_n^alpha(x) = L_{n-2}^{alpha+2}(x)  (0 for n < 2).
double laguerre_second_derivative(int n, double alpha, double x);

// Jacobi polynomial P_n^{(alpha,beta)}(x), alpha, beta > -1.
double jacobi(int n, double alpha, double beta, double x);

// d/dx P_n^{(a,b)}(x) = ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)}(x).
double jacobi_derivative(int n, double alpha, double beta, double x);

// Second derivative, by iterating the parameter-shift rule.
double jacobi_second_derivative(int n, double alpha, double beta, double x);

} // namespace dunklkg::specfun
