#include "dunklkg/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dunklkg::specfun {

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

double log_factorial(int n) {
    if (n < 0)
        throw std::domain_error("log_factorial: negative argument");
    return std::lgamma(double(n) + 1.0);
}

double laguerre(int n, double alpha, double x) {
    if (n < 0)
        throw std::domain_error("laguerre: degree must be non-negative");
    if (!(alpha > -1.0))
        throw std::domain_error("laguerre: alpha must exceed -1");
    if (n == 0) return 1.0;
    double lm1 = 1.0;                // L_0
    double l = 1.0 + alpha - x;      // L_1
    for (int k = 1; k < n; ++k) {
        double lp1 = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double laguerre_derivative(int n, double alpha, double x) {
    if (n < 1) return 0.0;
    return -laguerre(n - 1, alpha + 1.0, x);
}

double laguerre_second_derivative(int n, double alpha, double x) {
    if (n < 2) return 0.0;
    return laguerre(n - 2, alpha + 2.0, x);
}

double jacobi(int n, double alpha, double beta, double x) {
    if (n < 0)
        throw std::domain_error("jacobi: degree must be non-negative");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("jacobi: parameters must exceed -1");
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
    // For k >= 1 all recurrence prefactors are positive since alpha+beta > -2.
    for (int k = 1; k < n; ++k) {
        double c = 2.0 * k + alpha + beta;
        double a1 = 2.0 * (k + 1.0) * (k + alpha + beta + 1.0) * c;
        double a2 = (c + 1.0) * (alpha * alpha - beta * beta);
        double a3 = (c + 1.0) * (c + 2.0) * c;
        double a4 = 2.0 * (k + alpha) * (k + beta) * (c + 2.0);
        double pp1 = ((a2 + a3 * x) * p - a4 * pm1) / a1;
        pm1 = p;
        p = pp1;
    }
    return p;
}

double jacobi_derivative(int n, double alpha, double beta, double x) {
    if (n < 1) return 0.0;
    return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, x);
}

double jacobi_second_derivative(int n, double alpha, double beta, double x) {
    if (n < 2) return 0.0;
    return 0.25 * (n + alpha + beta + 1.0) * (n + alpha + beta + 2.0)
         * jacobi(n - 2, alpha + 2.0, beta + 2.0, x);
}

} // namespace dunklkg::specfun
