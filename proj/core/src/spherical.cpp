#include "dunklkg/spherical.hpp"

#include <cmath>
#include <stdexcept>

#include "dunklkg/specfun.hpp"

namespace dunklkg::spherical {

namespace {

struct Factor {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

Factor product3(const Factor& a, const Factor& b, const Factor& c) {
    Factor r;
    r.v = a.v * b.v * c.v;
    r.d1 = a.d1 * b.v * c.v + a.v * b.d1 * c.v + a.v * b.v * c.d1;
    r.d2 = a.d2 * b.v * c.v + a.v * b.d2 * c.v + a.v * b.v * c.d2
         + 2.0 * (a.d1 * b.d1 * c.v + a.d1 * b.v * c.d1 + a.v * b.d1 * c.d1);
    return r;
}

// cos^k with k in {0,1}.
Factor cos_power(int k, double x) {
    if (k == 0) return {1.0, 0.0, 0.0};
    return {std::cos(x), -std::sin(x), -std::cos(x)};
}

// sin^t for integer t >= 0; coefficients kill the negative powers at t < 2.
Factor sin_power(int t, double x) {
    if (t == 0) return {1.0, 0.0, 0.0};
    double s = std::sin(x);
    double c = std::cos(x);
    Factor f;
    f.v = std::pow(s, t);
    f.d1 = t * std::pow(s, t - 1) * c;
    f.d2 = (t >= 2 ? t * (t - 1) * std::pow(s, t - 2) * c * c : 0.0) - t * f.v;
    return f;
}

// P_n^{(alpha,beta)}(cos 2x) with derivatives in x.
Factor jacobi_of_cos2(int n, double alpha, double beta, double x) {
    double z = std::cos(2.0 * x);
    double zp = -2.0 * std::sin(2.0 * x);
    double zpp = -4.0 * z;
    double p = specfun::jacobi(n, alpha, beta, z);
    double p1 = specfun::jacobi_derivative(n, alpha, beta, z);
    double p2 = specfun::jacobi_second_derivative(n, alpha, beta, z);
    return {p, p1 * zp, p2 * zp * zp + p1 * zpp};
}

} // namespace

void SphericalQuantum::validate() const {
    sector.validate();
    if (n_radial < 0)
        throw std::domain_error("radial quantum number must be non-negative");
    if (two_nu < 0 || two_ell < 0)
        throw std::domain_error("separation indices must be non-negative");
    const int kp = sector.k() + sector.p();
    if ((two_nu - kp) % 2 != 0)
        throw std::domain_error(
            "azimuthal separation index parity incompatible with sector");
    if (two_nu < kp)
        throw std::domain_error("azimuthal separation index below sector minimum");
    if ((two_ell - sector.sigma()) % 2 != 0)
        throw std::domain_error("polar separation index parity incompatible with sector");
}

int SphericalQuantum::jacobi_degree_d() const {
    return (two_nu - sector.k() - sector.p()) / 2;
}

int SphericalQuantum::jacobi_degree_e() const {
    return (two_ell - sector.sigma()) / 2;
}

double separation_omega2(const SphericalQuantum& q, const WignerParams& params) {
    double nu = q.nu();
    return 4.0 * nu * (nu + params.mu1 + params.mu2);
}

double separation_varpi2(const SphericalQuantum& q, const WignerParams& params) {
    double lnu = q.nu() + q.ell();
    return 4.0 * lnu * (lnu + params.mu_sum() + 0.5);
}

double normalization_azimuthal(const SphericalQuantum& q, const WignerParams& params) {
    q.validate();
    params.validate();
    const int d = q.jacobi_degree_d();
    const double a = params.mu2 + q.sector.p() - 0.5;
    const double b = params.mu1 + q.sector.k() - 0.5;
    const double z = a + b + 1.0;
    double log_c2;
    if (d == 0) {
        // Beta form; the general expression is 0/0 when z vanishes.
        log_c2 = specfun::log_gamma(z + 1.0) - std::log(2.0)
               - specfun::log_gamma(a + 1.0) - specfun::log_gamma(b + 1.0);
    } else {
        log_c2 = specfun::log_factorial(d) + std::log(z + 2.0 * d)
               + specfun::log_gamma(z + d) - std::log(2.0)
               - specfun::log_gamma(a + d + 1.0) - specfun::log_gamma(b + d + 1.0);
    }
    return std::exp(0.5 * log_c2);
}

double normalization_polar(const SphericalQuantum& q, const WignerParams& params) {
    q.validate();
    params.validate();
    const int e = q.jacobi_degree_e();
    const double a = q.two_nu + params.mu1 + params.mu2;
    const double b = params.mu3 + q.sector.sigma() - 0.5;
    const double z = a + b + 1.0; // always >= 1/2, so no degenerate case
    double log_c2 = specfun::log_factorial(e) + std::log(z + 2.0 * e)
                  + specfun::log_gamma(z + e)
                  - specfun::log_gamma(a + e + 1.0) - specfun::log_gamma(b + e + 1.0);
    return std::exp(0.5 * log_c2);
}

double normalization_radial(const SphericalQuantum& q, const WignerParams& params,
                            const OscillatorConfig& config) {
    q.validate();
    params.validate();
    config.validate();
    const double lambda = q.two_nu + q.two_ell + params.mu_sum() + 0.5;
    double log_c2 = std::log(2.0) + (params.mu_sum() + 1.5) * std::log(config.m_omega())
                  + specfun::log_factorial(q.n_radial)
                  - specfun::log_gamma(q.n_radial + lambda + 1.0);
    return std::exp(0.5 * log_c2);
}

Function1D azimuthal_factor(const SphericalQuantum& q, const WignerParams& params) {
    const double c = normalization_azimuthal(q, params);
    const int k = q.sector.k();
    const int p = q.sector.p();
    const int d = q.jacobi_degree_d();
    const double a = params.mu2 + p - 0.5;
    const double b = params.mu1 + k - 0.5;
    auto eval = [c, k, p, d, a, b](double phi) {
        Factor f = product3(cos_power(k, phi), sin_power(p, phi),
                            jacobi_of_cos2(d, a, b, phi));
        return Factor{c * f.v, c * f.d1, c * f.d2};
    };
    Function1D f;
    f.value = [eval](double phi) { return eval(phi).v; };
    f.d1 = [eval](double phi) { return eval(phi).d1; };
    f.d2 = [eval](double phi) { return eval(phi).d2; };
    return f;
}

Function1D polar_factor(const SphericalQuantum& q, const WignerParams& params) {
    const double c = normalization_polar(q, params);
    const int sigma = q.sector.sigma();
    const int two_nu = q.two_nu;
    const int e = q.jacobi_degree_e();
    const double a = q.two_nu + params.mu1 + params.mu2;
    const double b = params.mu3 + sigma - 0.5;
    auto eval = [c, sigma, two_nu, e, a, b](double theta) {
        Factor f = product3(cos_power(sigma, theta), sin_power(two_nu, theta),
                            jacobi_of_cos2(e, a, b, theta));
        return Factor{c * f.v, c * f.d1, c * f.d2};
    };
    Function1D f;
    f.value = [eval](double theta) { return eval(theta).v; };
    f.d1 = [eval](double theta) { return eval(theta).d1; };
    f.d2 = [eval](double theta) { return eval(theta).d2; };
    return f;
}

Function1D radial_factor(const SphericalQuantum& q, const WignerParams& params,
                         const OscillatorConfig& config) {
    const double momega = config.m_omega();
    const int power = q.two_nu + q.two_ell; // exponent of r in front
    const double lambda = power + params.mu_sum() + 0.5;
    const int n = q.n_radial;
    // The rho-form constant times (m omega)^{(two_nu+two_ell)/2} converts the
    // rho power into the plain r power used below.
    const double c = normalization_radial(q, params, config)
                   * std::pow(momega, 0.5 * power);
    auto eval = [c, power, lambda, n, momega](double r) {
        double rho = momega * r * r;
        Factor u1;
        u1.v = std::pow(r, power);
        u1.d1 = power >= 1 ? power * std::pow(r, power - 1) : 0.0;
        u1.d2 = power >= 2 ? static_cast<double>(power) * (power - 1) * std::pow(r, power - 2) : 0.0;
        Factor u2;
        u2.v = std::exp(-0.5 * rho);
        u2.d1 = -momega * r * u2.v;
        u2.d2 = (momega * momega * r * r - momega) * u2.v;
        Factor u3;
        u3.v = specfun::laguerre(n, lambda, rho);
        double l1 = specfun::laguerre_derivative(n, lambda, rho);
        double l2 = specfun::laguerre_second_derivative(n, lambda, rho);
        u3.d1 = l1 * 2.0 * momega * r;
        u3.d2 = l2 * 4.0 * momega * momega * r * r + l1 * 2.0 * momega;
        Factor f = product3(u1, u2, u3);
        return Factor{c * f.v, c * f.d1, c * f.d2};
    };
    Function1D f;
    f.value = [eval](double r) { return eval(r).v; };
    f.d1 = [eval](double r) { return eval(r).d1; };
    f.d2 = [eval](double r) { return eval(r).d2; };
    return f;
}

double total_energy_spherical(const SphericalQuantum& q, const WignerParams& params,
                              const OscillatorConfig& config, int branch) {
    q.validate();
    params.validate();
    config.validate();
    if (branch != 1 && branch != -1)
        throw std::domain_error("energy branch must be +1 or -1");
    int base = 2 * q.n_radial + q.two_nu + q.two_ell;
    double shell = static_cast<double>(base) + odd_mask_mu_sum(params, q.sector);
    double e2 = config.mass * config.mass + 2.0 * config.m_omega() * shell;
    return branch * std::sqrt(e2);
}

SphericalWavefunction assemble_wavefunction(const SphericalQuantum& q,
                                            const WignerParams& params,
                                            const OscillatorConfig& config) {
    SphericalWavefunction psi;
    psi.radial = radial_factor(q, params, config);
    psi.polar = polar_factor(q, params);
    psi.azimuthal = azimuthal_factor(q, params);
    return psi;
}

LevelTable enumerate_spherical_levels(const WignerParams& params,
                                      const OscillatorConfig& config, double e2_cutoff) {
    params.validate();
    config.validate();
    std::map<double, long long> counts;
    const double m2 = config.mass * config.mass;
    const double two_momega = 2.0 * config.m_omega();
    for (const ParitySector& sector : ParitySector::all()) {
        const int kp = sector.k() + sector.p();
        const int sigma = sector.sigma();
        const double mask = odd_mask_mu_sum(params, sector);
        auto e2_of = [&](int base) { return m2 + two_momega * (base + mask); };
        for (int two_nu = kp;; two_nu += 2) {
            if (e2_of(two_nu + sigma) > e2_cutoff) break;
            for (int two_ell = sigma;; two_ell += 2) {
                if (e2_of(two_nu + two_ell) > e2_cutoff) break;
                for (int n = 0;; ++n) {
                    int base = 2 * n + two_nu + two_ell;
                    if (e2_of(base) > e2_cutoff) break;
                    counts[static_cast<double>(base) + mask] += 1;
                }
            }
        }
    }
    return level_table_from_counts(counts, config);
}

} // namespace dunklkg::spherical
