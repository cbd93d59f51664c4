#include "dunklkg/cartesian.hpp"

#include <cmath>
#include <stdexcept>

#include "dunklkg/specfun.hpp"

namespace dunklkg::cartesian {

void CartesianState::validate() const {
    if (n1 < 0 || n2 < 0 || n3 < 0)
        throw std::domain_error("cartesian quantum numbers must be non-negative");
    sector.validate();
}

double energy_1d(int n, int s, double mu, const OscillatorConfig& config) {
    if (n < 0) throw std::domain_error("quantum number must be non-negative");
    if (s != 1 && s != -1) throw std::domain_error("parity label must be +1 or -1");
    return 2.0 * config.m_omega() * (2.0 * n + (0.5 + mu) * (1.0 - s));
}

double total_energy_cartesian(const CartesianState& state, const WignerParams& params,
                              const OscillatorConfig& config, int branch) {
    state.validate();
    params.validate();
    if (branch != 1 && branch != -1)
        throw std::domain_error("energy branch must be +1 or -1");
    // Accumulate the shell contribution in a fixed axis order so that equal
    // shells produce bit-identical radicands across sectors.
    double q = 2.0 * (state.n1 + state.n2 + state.n3);
    q += (params.mu1 + 0.5) * (1.0 - state.sector.s1);
    q += (params.mu2 + 0.5) * (1.0 - state.sector.s2);
    q += (params.mu3 + 0.5) * (1.0 - state.sector.s3);
    double e2 = 2.0 * config.m_omega() * q + config.mass * config.mass;
    return branch * std::sqrt(e2);
}

double normalization_1d(int n, int s, double mu, const OscillatorConfig& config) {
    if (n < 0) throw std::domain_error("quantum number must be non-negative");
    double alpha = mu - 0.5 * s;
    double log_c2 = specfun::log_factorial(n) + (mu + 0.5) * std::log(config.m_omega())
                  - specfun::log_gamma(n + alpha + 1.0);
    return std::exp(0.5 * log_c2);
}

Function1D wavefunction_1d(int n, int s, double mu, const OscillatorConfig& config) {
    if (n < 0) throw std::domain_error("quantum number must be non-negative");
    if (s != 1 && s != -1) throw std::domain_error("parity label must be +1 or -1");
    const double momega = config.m_omega();
    const double alpha = mu - 0.5 * s;
    const double c = normalization_1d(n, s, mu, config);

    // psi = C * pre(x) * exp(-xi/2) * L_n^alpha(xi), xi = m*omega*x^2,
    // pre = 1 on the even sector and sqrt(m*omega)*x on the odd one.
    // g below is the pre-free part; its x-derivatives come from the chain
    // rule with xi' = 2*m*omega*x.
    auto parts = [n, alpha, momega](double x, double& g, double& gp, double& gpp) {
        double xi = momega * x * x;
        double lag = specfun::laguerre(n, alpha, xi);
        double lag1 = specfun::laguerre_derivative(n, alpha, xi);
        double lag2 = specfun::laguerre_second_derivative(n, alpha, xi);
        double env = std::exp(-0.5 * xi);
        double xip = 2.0 * momega * x;
        double xipp = 2.0 * momega;
        g = env * lag;
        gp = env * xip * (lag1 - 0.5 * lag);
        gpp = env * ((xipp - 0.5 * xip * xip) * (lag1 - 0.5 * lag)
                     + xip * xip * (lag2 - 0.5 * lag1));
    };

    Function1D f;
    if (s == 1) {
        f.value = [c, parts](double x) {
            double g, gp, gpp;
            parts(x, g, gp, gpp);
            return c * g;
        };
        f.d1 = [c, parts](double x) {
            double g, gp, gpp;
            parts(x, g, gp, gpp);
            return c * gp;
        };
        f.d2 = [c, parts](double x) {
            double g, gp, gpp;
            parts(x, g, gp, gpp);
            return c * gpp;
        };
    } else {
        const double root = std::sqrt(momega);
        f.value = [c, root, parts](double x) {
            double g, gp, gpp;
            parts(x, g, gp, gpp);
            return c * root * x * g;
        };
        f.d1 = [c, root, parts](double x) {
            double g, gp, gpp;
            parts(x, g, gp, gpp);
            return c * root * (g + x * gp);
        };
        f.d2 = [c, root, parts](double x) {
            double g, gp, gpp;
            parts(x, g, gp, gpp);
            return c * root * (2.0 * gp + x * gpp);
        };
    }
    return f;
}

DensityProfile density_profile(int n, int s, double mu, const OscillatorConfig& config,
                               double x_max, int npts) {
    if (x_max <= 0.0) throw std::domain_error("grid half-width must be positive");
    if (npts < 2) throw std::domain_error("grid needs at least two points");
    Function1D psi = wavefunction_1d(n, s, mu, config);
    DensityProfile profile;
    profile.x.resize(npts);
    profile.psi.resize(npts);
    profile.density_bare.resize(npts);
    profile.density_weighted.resize(npts);
    const double h = 2.0 * x_max / (npts - 1);
    for (int i = 0; i < npts; ++i) {
        double x = -x_max + i * h;
        double v = psi.value(x);
        double w = (x == 0.0) ? (mu > 0.0 ? 0.0 : 1.0)
                              : std::pow(std::abs(x), 2.0 * mu);
        profile.x[i] = x;
        profile.psi[i] = v;
        profile.density_bare[i] = v * v;
        profile.density_weighted[i] = v * v * w;
    }
    return profile;
}

LevelTable enumerate_cartesian_levels(const WignerParams& params,
                                      const OscillatorConfig& config, double e2_cutoff) {
    params.validate();
    config.validate();
    std::map<double, long long> counts;
    const double m2 = config.mass * config.mass;
    const double two_momega = 2.0 * config.m_omega();
    for (const ParitySector& sector : ParitySector::all()) {
        int odd_count = sector.k() + sector.p() + sector.sigma();
        double mask = odd_mask_mu_sum(params, sector);
        for (int n = 0;; ++n) {
            double shell = static_cast<double>(2 * n + odd_count) + mask;
            if (m2 + two_momega * shell > e2_cutoff) break;
            // States with n1+n2+n3 = n: (n+1)(n+2)/2 of them.
            counts[shell] += static_cast<long long>(n + 1) * (n + 2) / 2;
        }
    }
    return level_table_from_counts(counts, config);
}

} // namespace dunklkg::cartesian
