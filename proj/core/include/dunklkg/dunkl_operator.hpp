#pragma once

#include "dunklkg/quadrature.hpp"

#include <functional>

namespace dunklkg {

// Real function of one real variable with analytically known derivatives.
// The Dunkl operator needs f', its square needs f'' as well; evaluators that
// are not required by a given call may be left empty.
struct Function1D {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
};

// (R f)(x) = f(-x).  Derivative evaluators are carried along.
Function1D reflect(const Function1D& f);

// One-dimensional Dunkl derivative
//   (D f)(x) = f'(x) + (mu/x) (f(x) - f(-x)),   mu >= 0.
// At x = 0 the difference quotient is replaced by its limit 2 f'(0).
double dunkl_apply(const Function1D& f, double mu, double x);

// Square of the Dunkl derivative,
//   (D^2 f)(x) = f''(x) + (2 mu/x) f'(x) - (mu/x^2) (f(x) - f(-x)),
// with the x = 0 limit (1 + 2 mu) f''(0).
double dunkl_square_apply(const Function1D& f, double mu, double x);

// Gauss-Laguerre rule for half-line integrals against t^{mu-1/2} e^{-t};
// the natural rule for Dunkl inner products after the substitution t = x^2.
specfun::QuadratureRule dunkl_halfline_rule(double mu, int npts);

// Weighted inner product <f|g> = int_R f(x) g(x) |x|^{2 mu} dx for integrands
// whose product decays like exp(-x^2) (harmonic-oscillator states).  The odd
// part of f*g integrates to zero identically; the even part is mapped to the
// half line by t = x^2 and fed to the rule, which must be a Laguerre rule
// with alpha = mu - 1/2.
double dunkl_inner_product(const Function1D& f, const Function1D& g, double mu,
                           const specfun::QuadratureRule& rule);

// Trapezoid fallback on [-x_max, x_max] for integrands without Gaussian decay
// structure: halves the step until the value changes by less than tol.
double dunkl_inner_product_grid(const Function1D& f, const Function1D& g, double mu,
                                double x_max, double tol = 1e-8);

// <psi| O |psi> / <psi|psi> would be the textbook quantity; states here are
// already normalized, so this evaluates <op(psi)|psi> directly.
double expectation_value(const Function1D& psi,
                         const std::function<Function1D(const Function1D&)>& op,
                         double mu, const specfun::QuadratureRule& rule);

} // namespace dunklkg
