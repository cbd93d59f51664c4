#pragma once

#include <vector>

namespace dunklkg::specfun {

enum class WeightKind { laguerre, jacobi };

// Gaussian quadrature rule.  Laguerre: integrates f against x^alpha e^{-x} on
// (0,inf).  Jacobi: against (1-x)^alpha (1+x)^beta on (-1,1).  Exact for
// polynomial f up to degree 2*npts-1.
struct QuadratureRule {
    WeightKind kind;
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // positive

    int size() const { return int(nodes.size()); }

    double integrate(const std::vector<double>& fvals) const;

    template <class F>
    double apply(F&& f) const {
        double acc = 0.0;
        for (int i = 0; i < size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

// Golub-Welsch rules from the symmetric Jacobi matrix of the monic recurrence.
QuadratureRule gauss_laguerre(double alpha, int npts);
QuadratureRule gauss_jacobi(double alpha, double beta, int npts);

} // namespace dunklkg::specfun
