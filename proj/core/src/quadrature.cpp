#include "dunklkg/quadrature.hpp"

#include "dunklkg/specfun.hpp"
#include "dunklkg/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace dunklkg::specfun {

double QuadratureRule::integrate(const std::vector<double>& fvals) const {
    if (int(fvals.size()) != size())
        throw std::domain_error("QuadratureRule::integrate: value count mismatch");
    double acc = 0.0;
    for (int i = 0; i < size(); ++i) acc += weights[i] * fvals[i];
    return acc;
}

namespace {

// Nodes are the eigenvalues of the Jacobi matrix; weights are the squared
// first eigenvector components scaled by the weight function's zeroth moment.
QuadratureRule golub_welsch(TridiagonalMatrix J, double moment0, WeightKind kind,
                            double alpha, double beta) {
    auto eig = symmetric_tridiagonal_eigen(J, true);
    QuadratureRule rule;
    rule.kind = kind;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes = eig.eigenvalues;
    rule.weights.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        rule.weights[i] = moment0 * eig.first_components[i] * eig.first_components[i];
    return rule;
}

} // namespace

QuadratureRule gauss_laguerre(double alpha, int npts) {
    if (!(alpha > -1.0))
        throw std::domain_error("gauss_laguerre: alpha must exceed -1");
    if (npts < 1)
        throw std::domain_error("gauss_laguerre: npts must be positive");
    TridiagonalMatrix J;
    J.diag.resize(npts);
    J.offdiag.resize(npts - 1);
    for (int k = 0; k < npts; ++k) J.diag[k] = 2.0 * k + 1.0 + alpha;
    for (int k = 1; k < npts; ++k) J.offdiag[k - 1] = std::sqrt(k * (k + alpha));
    double moment0 = std::exp(log_gamma(alpha + 1.0));
    return golub_welsch(std::move(J), moment0, WeightKind::laguerre, alpha, 0.0);
}

QuadratureRule gauss_jacobi(double alpha, double beta, int npts) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("gauss_jacobi: parameters must exceed -1");
    if (npts < 1)
        throw std::domain_error("gauss_jacobi: npts must be positive");
    TridiagonalMatrix J;
    J.diag.resize(npts);
    J.offdiag.resize(npts - 1);
    const double ab = alpha + beta;
    J.diag[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < npts; ++k) {
        double c = 2.0 * k + ab;
        J.diag[k] = (beta * beta - alpha * alpha) / (c * (c + 2.0));
    }
    for (int k = 1; k < npts; ++k) {
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) /
                 ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            double c = 2.0 * k + ab;
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                 (c * c * (c + 1.0) * (c - 1.0));
        }
        J.offdiag[k - 1] = std::sqrt(b2);
    }
    double moment0 = std::exp((ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) +
                              log_gamma(beta + 1.0) - log_gamma(ab + 2.0));
    return golub_welsch(std::move(J), moment0, WeightKind::jacobi, alpha, beta);
}

} // namespace dunklkg::specfun
