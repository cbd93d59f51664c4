#include "dunklkg/coulomb.hpp"

#include <cmath>
#include <stdexcept>

#include "dunklkg/specfun.hpp"

namespace dunklkg::coulomb {

namespace {

void check_bound(const WignerParams& params, int two_nu, int two_ell, double g) {
    if (!bound_constraint(params, two_nu, two_ell, g))
        throw std::domain_error(
            "bound states require (mu1+mu2+mu3+2nu+2ell+1/2) > Ze^2");
}

} // namespace

void CoulombConfig::validate() const {
    if (mass <= 0.0) throw std::domain_error("mass must be positive");
    if (g <= 0.0) throw std::domain_error("coupling must be positive");
}

double angular_strength(const WignerParams& params, int two_nu, int two_ell) {
    params.validate();
    if (two_nu < 0 || two_ell < 0)
        throw std::domain_error("separation indices must be non-negative");
    return params.mu_sum() + two_nu + two_ell + 0.5;
}

bool bound_constraint(const WignerParams& params, int two_nu, int two_ell, double g) {
    return g > 0.0 && angular_strength(params, two_nu, two_ell) > g;
}

double eta(const WignerParams& params, int two_nu, int two_ell, double g) {
    check_bound(params, two_nu, two_ell, g);
    double s = angular_strength(params, two_nu, two_ell);
    return -params.mu_sum() - 0.5 + std::sqrt(s * s - g * g);
}

double coulomb_energy(const CoulombState& state, const WignerParams& params,
                      const CoulombConfig& config) {
    state.validate();
    config.validate();
    check_bound(params, state.two_nu, state.two_ell, config.g);
    double s = angular_strength(params, state.two_nu, state.two_ell);
    double g = config.g;
    double dg = state.n_radial + 0.5 + std::sqrt(s * s - g * g);
    return config.mass / std::sqrt(1.0 + g * g / (dg * dg));
}

double quantization_index(double energy, const CoulombState& state,
                          const WignerParams& params, const CoulombConfig& config) {
    config.validate();
    check_bound(params, state.two_nu, state.two_ell, config.g);
    if (energy <= 0.0 || energy >= config.mass)
        throw std::domain_error("bound-state energy must lie in (0, mass)");
    double varsigma = std::sqrt(config.mass * config.mass - energy * energy);
    double exponent = eta(params, state.two_nu, state.two_ell, config.g);
    return energy * config.g / varsigma - (1.0 + exponent + params.mu_sum());
}

Function1D coulomb_radial(const CoulombState& state, const WignerParams& params,
                          const CoulombConfig& config, RadialNormalization norm) {
    const double energy = coulomb_energy(state, params, config);
    const int n = state.n_radial;
    const double mu_sum = params.mu_sum();
    const double g = config.g;
    const double mass = config.mass;
    const double varsigma = std::sqrt(mass * mass - energy * energy);
    const double exponent = eta(params, state.two_nu, state.two_ell, g);
    const double beta = 1.0 + 2.0 * (exponent + mu_sum); // Laguerre parameter

    // With rho = 2 varsigma r and I1 = Gamma(n+beta+1)/n!:
    //   int psi^2 r^{2+2mu_sum} dr            = C^2 (2vs)^{-(3+2mu_sum)} (2n+beta+1) I1
    //   int psi^2 (2E+2g/r) r^{2+2mu_sum} dr  = C^2 (2vs)^{-(2+2mu_sum)} (2g m^2/vs^2) I1
    // where the second uses 2n+beta+1 = 2Eg/vs on the spectrum.
    double log_c2 = 0.0;
    switch (norm) {
    case RadialNormalization::none:
        break;
    case RadialNormalization::plain_measure:
        log_c2 = (3.0 + 2.0 * mu_sum) * std::log(2.0 * varsigma)
               - std::log(2.0 * n + beta + 1.0)
               + specfun::log_factorial(n) - specfun::log_gamma(n + beta + 1.0);
        break;
    case RadialNormalization::energy_weighted:
        log_c2 = (2.0 + 2.0 * mu_sum) * std::log(2.0 * varsigma)
               + 2.0 * std::log(varsigma) - std::log(2.0 * g) - 2.0 * std::log(mass)
               + specfun::log_factorial(n) - specfun::log_gamma(n + beta + 1.0);
        break;
    }
    // Absorb the (2 varsigma)^eta of rho^eta so the factors below use plain
    // powers of r.
    const double c = std::exp(0.5 * log_c2 + exponent * std::log(2.0 * varsigma));

    auto eval = [c, n, exponent, beta, varsigma](double r, double& v, double& d1,
                                                 double& d2) {
        if (r <= 0.0)
            throw std::domain_error("radial factor is defined for r > 0");
        double rho = 2.0 * varsigma * r;
        double u1 = std::pow(r, exponent);
        double u1p = exponent * std::pow(r, exponent - 1.0);
        double u1pp = exponent * (exponent - 1.0) * std::pow(r, exponent - 2.0);
        double u2 = std::exp(-varsigma * r);
        double u2p = -varsigma * u2;
        double u2pp = varsigma * varsigma * u2;
        double u3 = specfun::laguerre(n, beta, rho);
        double l1 = specfun::laguerre_derivative(n, beta, rho);
        double l2 = specfun::laguerre_second_derivative(n, beta, rho);
        double u3p = l1 * 2.0 * varsigma;
        double u3pp = l2 * 4.0 * varsigma * varsigma;
        v = c * u1 * u2 * u3;
        d1 = c * (u1p * u2 * u3 + u1 * u2p * u3 + u1 * u2 * u3p);
        d2 = c * (u1pp * u2 * u3 + u1 * u2pp * u3 + u1 * u2 * u3pp
                  + 2.0 * (u1p * u2p * u3 + u1p * u2 * u3p + u1 * u2p * u3p));
    };

    Function1D f;
    f.value = [eval](double r) {
        double v, d1, d2;
        eval(r, v, d1, d2);
        return v;
    };
    f.d1 = [eval](double r) {
        double v, d1, d2;
        eval(r, v, d1, d2);
        return d1;
    };
    f.d2 = [eval](double r) {
        double v, d1, d2;
        eval(r, v, d1, d2);
        return d2;
    };
    return f;
}

double fine_structure_parameter(const WignerParams& params, int two_nu, int two_ell) {
    params.validate();
    if (two_nu < 0 || two_ell < 0)
        throw std::domain_error("separation indices must be non-negative");
    return params.mu_sum() + two_nu + two_ell;
}

FineStructureTerms fine_structure_expansion(const CoulombState& state,
                                            const WignerParams& params,
                                            const CoulombConfig& config) {
    state.validate();
    config.validate();
    check_bound(params, state.two_nu, state.two_ell, config.g);
    double x = fine_structure_parameter(params, state.two_nu, state.two_ell);
    double d = state.n_radial + x + 1.0;
    double g2d2 = config.g * config.g / (d * d);
    FineStructureTerms terms;
    terms.rest = config.mass;
    terms.nonrel = -0.5 * config.mass * g2d2;
    terms.fine = -config.mass * g2d2 * g2d2 * (1.0 / (2.0 * x + 1.0) - 3.0 / 8.0);
    return terms;
}

bool fine_structure_vanishing(const WignerParams& params, int two_nu, int two_ell,
                              double tol) {
    return std::abs(fine_structure_parameter(params, two_nu, two_ell) - 5.0 / 6.0) <= tol;
}

} // namespace dunklkg::coulomb
