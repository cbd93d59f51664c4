#include "dunklkg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "dunklkg/cartesian.hpp"
#include "dunklkg/levels.hpp"
#include "dunklkg/quadrature.hpp"

namespace dunklkg::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dunkl_weight(double mu, double x) {
    if (x == 0.0) return mu > 0.0 ? 0.0 : 1.0;
    return std::pow(x, 2.0 * mu);
}

double sector_potential(double mu, int s, double momega, double x) {
    double v = momega * momega * x * x - momega * (1.0 + 2.0 * mu * s);
    if (s == -1) v += 2.0 * mu / (x * x);
    return v;
}

// Finite-volume flux balance for -(1/w)(w psi')' + V psi on staggered nodes
// x_i = (i-1/2)h, symmetrized by the similarity transform with sqrt(w).
// Even sector: zero flux through x=0. Odd sector: psi(0)=0 via a reflected
// ghost (only the mu=0 weight survives at the origin face). Right end:
// Dirichlet ghost beyond x_max.
TridiagonalMatrix discretize_flux(double mu, int s, const OscillatorConfig& config,
                                  double x_max, int npts) {
    const double h = x_max / npts;
    const double momega = config.m_omega();
    std::vector<double> face(npts + 1), node(npts + 1);
    for (int i = 0; i <= npts; ++i) face[i] = dunkl_weight(mu, i * h);
    for (int i = 1; i <= npts; ++i) node[i] = dunkl_weight(mu, (i - 0.5) * h);
    TridiagonalMatrix t;
    t.diag.resize(npts);
    t.offdiag.resize(npts - 1);
    for (int i = 1; i <= npts; ++i) {
        double x = (i - 0.5) * h;
        double right = (i == npts) ? 2.0 * face[npts] : face[i];
        double left = (i == 1) ? (s == 1 ? 0.0 : 2.0 * face[0]) : face[i - 1];
        t.diag[i - 1] = (right + left) / (h * h * node[i])
                      + sector_potential(mu, s, momega, x);
        if (i < npts)
            t.offdiag[i - 1] = -face[i] / (h * h * std::sqrt(node[i] * node[i + 1]));
    }
    return t;
}

// Central differences for -u'' + [mu(mu-s)/x^2 + (m w x)^2 - m w(1+2 mu s)]u
// after u = x^mu psi. Dirichlet at both ends, except the undeformed even
// sector which needs a Neumann origin (staggered grid, reflected ghost).
TridiagonalMatrix discretize_u_transform(double mu, int s, const OscillatorConfig& config,
                                         double x_max, int npts) {
    const double momega = config.m_omega();
    auto v_eff = [mu, s, momega](double x) {
        return mu * (mu - s) / (x * x) + momega * momega * x * x
             - momega * (1.0 + 2.0 * mu * s);
    };
    TridiagonalMatrix t;
    const double h = x_max / npts;
    if (mu == 0.0 && s == 1) {
        t.diag.resize(npts);
        t.offdiag.assign(npts - 1, -1.0 / (h * h));
        for (int i = 1; i <= npts; ++i) {
            double laplace = 2.0;
            if (i == 1) laplace = 1.0;
            if (i == npts) laplace = 3.0;
            t.diag[i - 1] = laplace / (h * h) + v_eff((i - 0.5) * h);
        }
    } else {
        t.diag.resize(npts - 1);
        t.offdiag.assign(npts - 2, -1.0 / (h * h));
        for (int i = 1; i < npts; ++i)
            t.diag[i - 1] = 2.0 / (h * h) + v_eff(i * h);
    }
    return t;
}

void check_mu_s(double mu, int s) {
    if (mu < 0.0) throw std::domain_error("deformation parameter must be non-negative");
    if (s != 1 && s != -1) throw std::domain_error("parity label must be +1 or -1");
}

// int_R f g |x|^{2mu} dx via parity splitting and t = m w x^2 onto
// Gauss-Laguerre(mu-1/2); exact when f*g is a polynomial times e^{-m w x^2}.
double line_inner(const Function1D& a, const Function1D& b, double mu, double momega,
                  int npts) {
    specfun::QuadratureRule rule = specfun::gauss_laguerre(mu - 0.5, npts);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = rule.nodes[i];
        if (t > 700.0)
            throw std::runtime_error("quadrature node too large to unscale e^{-t}");
        double x = std::sqrt(t / momega);
        double even = a.value(x) * b.value(x) + a.value(-x) * b.value(-x);
        if (even != 0.0) acc += rule.weights[i] * std::exp(t) * even;
    }
    return 0.5 * std::pow(momega, -mu - 0.5) * acc;
}

struct AngleRule {
    std::vector<double> angle;  // base nodes in (0, pi/2)
    std::vector<double> weight; // weight per base node
};

// Quarter-circle rule for the weight |cos|^{2mu1}|sin|^{2mu2} under
// z = cos(2 phi); the full circle is covered by the four reflection images.
AngleRule azimuthal_rule(const WignerParams& p, int npts) {
    specfun::QuadratureRule gj = specfun::gauss_jacobi(p.mu2 - 0.5, p.mu1 - 0.5, npts);
    AngleRule r;
    r.angle.resize(gj.nodes.size());
    r.weight.resize(gj.nodes.size());
    double scale = std::pow(2.0, -(p.mu1 + p.mu2 + 1.0));
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
        r.angle[i] = 0.5 * std::acos(gj.nodes[i]);
        r.weight[i] = scale * gj.weights[i];
    }
    return r;
}

double azimuthal_inner(const Function1D& a, const Function1D& b, const AngleRule& r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.angle.size(); ++i) {
        double phi = r.angle[i];
        double sum = a.value(phi) * b.value(phi)
                   + a.value(kPi - phi) * b.value(kPi - phi)
                   + a.value(kPi + phi) * b.value(kPi + phi)
                   + a.value(-phi) * b.value(-phi);
        acc += r.weight[i] * sum;
    }
    return acc;
}

// Half-interval rule for sin^{2mu1+2mu2+1} |cos|^{2mu3} under z = cos(2 theta);
// [0, pi] is covered by the two images theta, pi - theta.
AngleRule polar_rule(const WignerParams& p, int npts) {
    specfun::QuadratureRule gj = specfun::gauss_jacobi(p.mu1 + p.mu2, p.mu3 - 0.5, npts);
    AngleRule r;
    r.angle.resize(gj.nodes.size());
    r.weight.resize(gj.nodes.size());
    double scale = std::pow(2.0, -(p.mu1 + p.mu2 + p.mu3 + 1.5));
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
        r.angle[i] = 0.5 * std::acos(gj.nodes[i]);
        r.weight[i] = scale * gj.weights[i];
    }
    return r;
}

double polar_inner(const Function1D& a, const Function1D& b, const AngleRule& r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.angle.size(); ++i) {
        double th = r.angle[i];
        double sum = a.value(th) * b.value(th)
                   + a.value(kPi - th) * b.value(kPi - th);
        acc += r.weight[i] * sum;
    }
    return acc;
}

// int_0^inf f g r^{2+2 mu_sum} dr via t = m w r^2 onto
// Gauss-Laguerre(mu_sum + 1/2); exact for oscillator radial pairs.
double radial_inner(const Function1D& a, const Function1D& b, double mu_sum,
                    double momega, int npts) {
    specfun::QuadratureRule rule = specfun::gauss_laguerre(mu_sum + 0.5, npts);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = rule.nodes[i];
        if (t > 700.0)
            throw std::runtime_error("quadrature node too large to unscale e^{-t}");
        double r = std::sqrt(t / momega);
        double v = a.value(r) * b.value(r);
        if (v != 0.0) acc += rule.weights[i] * std::exp(t) * v;
    }
    return 0.5 * std::pow(momega, -mu_sum - 1.5) * acc;
}

double max_identity_deviation(const std::vector<std::vector<double>>& gram) {
    double dev = 0.0;
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j) {
            double target = (i == j) ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(gram[i][j] - target));
        }
    return dev;
}

VerificationReport gram_report(std::string quantity, double dev, double tol,
                               std::size_t nstates) {
    VerificationReport rep;
    rep.quantity = std::move(quantity);
    rep.closed_form = 0.0;
    rep.oracle = dev;
    rep.abs_err = dev;
    rep.rel_err = dev;
    rep.tolerance = tol;
    rep.pass = dev < tol;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "states=%zu", nstates);
    rep.detail = buf;
    return rep;
}

VerificationReport residual_report(std::string quantity, double max_res, double scale,
                                   double tol) {
    VerificationReport rep;
    rep.quantity = std::move(quantity);
    rep.closed_form = 0.0;
    rep.oracle = max_res;
    rep.abs_err = max_res;
    rep.rel_err = max_res / scale;
    rep.tolerance = tol * scale;
    rep.pass = std::isfinite(max_res) && max_res < tol * scale;
    return rep;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = lo + (hi - lo) * i / (n - 1);
    return pts;
}

} // namespace

void GridSpec::validate() const {
    if (npts < 16) throw std::domain_error("grid too coarse: need at least 16 points");
    if (refinement_levels < 2)
        throw std::domain_error("need at least two refinement levels");
}

double GridSpec::resolved_x_max(const OscillatorConfig& config) const {
    if (x_max > 0.0) return x_max;
    // e^{-m w x^2/2} < 1e-16 needs m w x^2 > 73.7
    return std::sqrt(75.0 / config.m_omega());
}

TridiagonalMatrix discretize_sector_hamiltonian(double mu, int s,
                                                const OscillatorConfig& config,
                                                double x_max, int npts, Scheme scheme) {
    check_mu_s(mu, s);
    config.validate();
    if (x_max <= 0.0) throw std::domain_error("domain size must be positive");
    if (npts < 16) throw std::domain_error("grid too coarse: need at least 16 points");
    return scheme == Scheme::flux_form
               ? discretize_flux(mu, s, config, x_max, npts)
               : discretize_u_transform(mu, s, config, x_max, npts);
}

OracleEigenvalues oracle_eigenvalues_1d(double mu, int s, const OscillatorConfig& config,
                                        const GridSpec& grid, int count, Scheme scheme) {
    grid.validate();
    config.validate();
    if (count < 1) throw std::domain_error("need at least one eigenvalue");
    if (count > grid.npts / 4)
        throw std::domain_error("eigenvalue count exceeds npts/4 on the coarsest grid");
    const double x_max = grid.resolved_x_max(config);
    OracleEigenvalues out;
    int n = grid.npts;
    for (int level = 0; level < grid.refinement_levels; ++level, n *= 2) {
        TridiagonalMatrix t = discretize_sector_hamiltonian(mu, s, config, x_max, n, scheme);
        out.raw.push_back(specfun::tridiagonal_smallest_eigenvalues(t, count));
    }
    // Repeated Richardson stages for the O(h^2) error model.
    std::vector<std::vector<double>> stage = out.raw;
    double factor = 4.0;
    while (stage.size() > 1) {
        std::vector<std::vector<double>> next;
        for (std::size_t j = 0; j + 1 < stage.size(); ++j) {
            std::vector<double> v(count);
            for (int i = 0; i < count; ++i)
                v[i] = stage[j + 1][i] + (stage[j + 1][i] - stage[j][i]) / (factor - 1.0);
            next.push_back(std::move(v));
        }
        stage = std::move(next);
        factor *= 4.0;
    }
    out.values = stage[0];
    out.observed_order.assign(count, 2.0);
    out.converged = true;
    if (out.raw.size() >= 3) {
        const auto& a = out.raw[out.raw.size() - 3];
        const auto& b = out.raw[out.raw.size() - 2];
        const auto& c = out.raw[out.raw.size() - 1];
        for (int i = 0; i < count; ++i) {
            double d1 = std::abs(b[i] - a[i]);
            double d2 = std::abs(c[i] - b[i]);
            double scale = 1.0 + std::abs(c[i]);
            // Bisection resolves eigenvalues to ~eps * ||T||, and ||T|| grows
            // like 1/h^2 under refinement, so differences this small are
            // solver noise, not discretization error; an order measured from
            // them is meaningless, and the values themselves are already far
            // below any verification tolerance.
            if (d1 < 1e-8 * scale || d2 < 1e-8 * scale) continue;
            out.observed_order[i] = std::log2(d1 / d2);
            if (out.observed_order[i] < 1.2 || out.observed_order[i] > 3.5)
                out.converged = false;
        }
    }
    return out;
}

std::vector<VerificationReport> verify_spectrum_1d(double mu, int s,
                                                   const OscillatorConfig& config,
                                                   int n_max, const GridSpec& grid,
                                                   Scheme scheme, double perturbation) {
    if (n_max < 0) throw std::domain_error("n_max must be non-negative");
    OracleEigenvalues eig = oracle_eigenvalues_1d(mu, s, config, grid, n_max + 1, scheme);
    const double shift = 2.0 * config.m_omega();
    std::vector<VerificationReport> reports;
    for (int n = 0; n <= n_max; ++n) {
        VerificationReport rep;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "spectrum-1d mu=%g s=%+d n=%d", mu, s, n);
        rep.quantity = buf;
        rep.closed_form = cartesian::energy_1d(n, s, mu, config) + perturbation;
        rep.oracle = eig.values[n];
        rep.abs_err = std::abs(rep.oracle - rep.closed_form);
        rep.rel_err = rep.abs_err / (rep.closed_form + shift);
        rep.tolerance = 1e-4;
        rep.pass = rep.rel_err < rep.tolerance && eig.converged;
        for (const auto& level : eig.raw) rep.history.push_back(level[n]);
        std::snprintf(buf, sizeof(buf), "observed_order=%.2f", eig.observed_order[n]);
        rep.detail = buf;
        if (!eig.converged) rep.detail += " (oracle not converged)";
        reports.push_back(std::move(rep));
    }
    return reports;
}

VerificationReport verify_orthonormality_cartesian_1d(double mu,
                                                      const OscillatorConfig& config,
                                                      int n_max, int quad_npts,
                                                      double tol) {
    config.validate();
    check_mu_s(mu, 1);
    std::vector<Function1D> states;
    for (int s : {1, -1})
        for (int n = 0; n <= n_max; ++n)
            states.push_back(cartesian::wavefunction_1d(n, s, mu, config));
    std::vector<std::vector<double>> gram(states.size(),
                                          std::vector<double>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j)
            gram[i][j] = gram[j][i] =
                line_inner(states[i], states[j], mu, config.m_omega(), quad_npts);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "orthonormality cartesian-1d mu=%g n<=%d", mu, n_max);
    return gram_report(buf, max_identity_deviation(gram), tol, states.size());
}

VerificationReport verify_orthonormality_spherical_angular(const WignerParams& params,
                                                           int max_angular,
                                                           int quad_npts, double tol) {
    params.validate();
    std::vector<spherical::SphericalQuantum> states;
    for (const ParitySector& sector : ParitySector::all()) {
        int kp = sector.k() + sector.p();
        int sigma = sector.sigma();
        for (int two_nu = kp; two_nu <= max_angular; two_nu += 2)
            for (int two_ell = sigma; two_nu + two_ell <= max_angular; two_ell += 2) {
                spherical::SphericalQuantum q;
                q.n_radial = 0;
                q.two_nu = two_nu;
                q.two_ell = two_ell;
                q.sector = sector;
                states.push_back(q);
            }
    }
    std::vector<Function1D> phis, thetas;
    for (const auto& q : states) {
        phis.push_back(spherical::azimuthal_factor(q, params));
        thetas.push_back(spherical::polar_factor(q, params));
    }
    AngleRule phi_rule = azimuthal_rule(params, quad_npts);
    AngleRule theta_rule = polar_rule(params, quad_npts);
    std::vector<std::vector<double>> gram(states.size(),
                                          std::vector<double>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j)
            gram[i][j] = gram[j][i] = azimuthal_inner(phis[i], phis[j], phi_rule)
                                    * polar_inner(thetas[i], thetas[j], theta_rule);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "orthonormality spherical-angular 2nu+2ell<=%d",
                  max_angular);
    return gram_report(buf, max_identity_deviation(gram), tol, states.size());
}

VerificationReport verify_orthonormality_spherical_full(const WignerParams& params,
                                                        const OscillatorConfig& config,
                                                        int max_base, int quad_npts,
                                                        double tol) {
    params.validate();
    config.validate();
    std::vector<spherical::SphericalQuantum> states;
    for (const ParitySector& sector : ParitySector::all()) {
        int kp = sector.k() + sector.p();
        int sigma = sector.sigma();
        for (int two_nu = kp; two_nu <= max_base; two_nu += 2)
            for (int two_ell = sigma; two_nu + two_ell <= max_base; two_ell += 2)
                for (int n = 0; 2 * n + two_nu + two_ell <= max_base; ++n) {
                    spherical::SphericalQuantum q;
                    q.n_radial = n;
                    q.two_nu = two_nu;
                    q.two_ell = two_ell;
                    q.sector = sector;
                    states.push_back(q);
                }
    }
    std::vector<Function1D> phis, thetas, radials;
    for (const auto& q : states) {
        phis.push_back(spherical::azimuthal_factor(q, params));
        thetas.push_back(spherical::polar_factor(q, params));
        radials.push_back(spherical::radial_factor(q, params, config));
    }
    AngleRule phi_rule = azimuthal_rule(params, quad_npts);
    AngleRule theta_rule = polar_rule(params, quad_npts);
    std::vector<std::vector<double>> gram(states.size(),
                                          std::vector<double>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j) {
            // Separable states: the tensor-product quadrature factorizes
            // exactly into the three one-dimensional sums.
            double value = radial_inner(radials[i], radials[j], params.mu_sum(),
                                        config.m_omega(), quad_npts)
                         * polar_inner(thetas[i], thetas[j], theta_rule)
                         * azimuthal_inner(phis[i], phis[j], phi_rule);
            gram[i][j] = gram[j][i] = value;
        }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "orthonormality spherical-full 2N+2nu+2ell<=%d",
                  max_base);
    return gram_report(buf, max_identity_deviation(gram), tol, states.size());
}

VerificationReport verify_orthonormality_coulomb_radial(const WignerParams& params,
                                                        const coulomb::CoulombConfig& config,
                                                        int two_nu, int two_ell,
                                                        const ParitySector& sector,
                                                        int n_max, int quad_npts,
                                                        double tol) {
    params.validate();
    config.validate();
    const double mu_sum = params.mu_sum();
    const double exponent = coulomb::eta(params, two_nu, two_ell, config.g);
    const double alpha = 2.0 * exponent + 1.0 + 2.0 * mu_sum;
    std::vector<Function1D> states;
    std::vector<double> energies, varsigmas;
    for (int n = 0; n <= n_max; ++n) {
        coulomb::CoulombState st;
        st.n_radial = n;
        st.two_nu = two_nu;
        st.two_ell = two_ell;
        st.sector = sector;
        states.push_back(coulomb::coulomb_radial(
            st, params, config, coulomb::RadialNormalization::energy_weighted));
        double e = coulomb::coulomb_energy(st, params, config);
        energies.push_back(e);
        varsigmas.push_back(std::sqrt(config.mass * config.mass - e * e));
    }
    specfun::QuadratureRule rule = specfun::gauss_laguerre(alpha, quad_npts);
    std::vector<std::vector<double>> gram(states.size(),
                                          std::vector<double>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j) {
            double vs = varsigmas[i] + varsigmas[j];
            double acc = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                double t = rule.nodes[k];
                if (t > 700.0)
                    throw std::runtime_error(
                        "quadrature node too large to unscale e^{-t}");
                double r = t / vs;
                double f = states[i].value(r) * states[j].value(r)
                         * (energies[i] + energies[j] + 2.0 * config.g / r)
                         * std::pow(r, 2.0 + 2.0 * mu_sum);
                if (f != 0.0)
                    acc += rule.weights[k] * std::exp(t) * f / std::pow(t, alpha);
            }
            gram[i][j] = gram[j][i] = acc / vs;
        }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "orthonormality coulomb-radial 2nu=%d 2ell=%d g=%g n<=%d", two_nu,
                  two_ell, config.g, n_max);
    return gram_report(buf, max_identity_deviation(gram), tol, states.size());
}

VerificationReport verify_ode_residual_sector_1d(int n, int s, double mu,
                                                 const OscillatorConfig& config,
                                                 double tol, double perturbation) {
    Function1D psi = cartesian::wavefunction_1d(n, s, mu, config);
    const double momega = config.m_omega();
    const double energy = cartesian::energy_1d(n, s, mu, config) + perturbation;
    double max_res = 0.0;
    for (double x : linspace(0.1, 5.0, 25)) {
        double res = psi.d2(x) + (2.0 * mu / x) * psi.d1(x)
                   - mu * (1.0 - s) / (x * x) * psi.value(x)
                   - momega * momega * x * x * psi.value(x)
                   + (energy + momega * (1.0 + 2.0 * mu * s)) * psi.value(x);
        max_res = std::max(max_res, std::abs(res));
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "ode sector-1d mu=%g s=%+d n=%d", mu, s, n);
    return residual_report(buf, max_res, 1.0 + std::abs(energy), tol);
}

VerificationReport verify_ode_residual_azimuthal(const spherical::SphericalQuantum& q,
                                                 const WignerParams& params, double tol,
                                                 double perturbation) {
    Function1D phi = spherical::azimuthal_factor(q, params);
    const double omega2 = spherical::separation_omega2(q, params) + perturbation;
    const int s1 = q.sector.s1;
    const int s2 = q.sector.s2;
    double max_res = 0.0;
    for (double a : linspace(0.1, kPi / 2.0 - 0.1, 25)) {
        double c = std::cos(a), s = std::sin(a);
        double res = phi.d2(a)
                   + 2.0 * (params.mu2 * c / s - params.mu1 * s / c) * phi.d1(a)
                   - params.mu1 * (1.0 - s1) / (c * c) * phi.value(a)
                   - params.mu2 * (1.0 - s2) / (s * s) * phi.value(a)
                   + omega2 * phi.value(a);
        max_res = std::max(max_res, std::abs(res));
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "ode azimuthal 2nu=%d s1=%+d s2=%+d", q.two_nu, s1, s2);
    return residual_report(buf, max_res, 1.0 + std::abs(omega2), tol);
}

VerificationReport verify_ode_residual_polar(const spherical::SphericalQuantum& q,
                                             const WignerParams& params, double tol,
                                             double perturbation) {
    Function1D theta = spherical::polar_factor(q, params);
    const double omega2 = spherical::separation_omega2(q, params);
    const double varpi2 = spherical::separation_varpi2(q, params) + perturbation;
    const int s3 = q.sector.s3;
    const double mu12 = params.mu1 + params.mu2;
    double max_res = 0.0;
    for (double a : linspace(0.1, kPi / 2.0 - 0.1, 25)) {
        double c = std::cos(a), s = std::sin(a);
        double res = theta.d2(a)
                   + ((1.0 + 2.0 * mu12) * c / s - 2.0 * params.mu3 * s / c) * theta.d1(a)
                   - params.mu3 * (1.0 - s3) / (c * c) * theta.value(a)
                   - omega2 / (s * s) * theta.value(a)
                   + varpi2 * theta.value(a);
        max_res = std::max(max_res, std::abs(res));
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "ode polar 2nu=%d 2ell=%d s3=%+d", q.two_nu,
                  q.two_ell, s3);
    return residual_report(buf, max_res, 1.0 + std::abs(varpi2), tol);
}

VerificationReport verify_ode_residual_oscillator_radial(const spherical::SphericalQuantum& q,
                                                         const WignerParams& params,
                                                         const OscillatorConfig& config,
                                                         double tol, double perturbation) {
    Function1D f = spherical::radial_factor(q, params, config);
    const double momega = config.m_omega();
    const double varpi2 = spherical::separation_varpi2(q, params);
    const double energy = spherical::total_energy_spherical(q, params, config);
    const double e2_minus_m2 = energy * energy - config.mass * config.mass + perturbation;
    double s_weighted = q.sector.s1 * params.mu1 + q.sector.s2 * params.mu2
                      + q.sector.s3 * params.mu3;
    double max_res = 0.0;
    for (double r : linspace(0.2, 4.0, 25)) {
        double res = f.d2(r) + 2.0 * (1.0 + params.mu_sum()) / r * f.d1(r)
                   - momega * momega * r * r * f.value(r)
                   + 2.0 * momega * (1.5 + s_weighted) * f.value(r)
                   - varpi2 / (r * r) * f.value(r) + e2_minus_m2 * f.value(r);
        max_res = std::max(max_res, std::abs(res));
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "ode oscillator-radial N=%d 2nu=%d 2ell=%d",
                  q.n_radial, q.two_nu, q.two_ell);
    return residual_report(buf, max_res, 1.0 + energy * energy, tol);
}

VerificationReport verify_ode_residual_coulomb_radial(const coulomb::CoulombState& state,
                                                      const WignerParams& params,
                                                      const coulomb::CoulombConfig& config,
                                                      double tol, double perturbation) {
    Function1D psi = coulomb::coulomb_radial(state, params, config);
    const double mu_sum = params.mu_sum();
    const double energy = coulomb::coulomb_energy(state, params, config) + perturbation;
    const double varsigma = std::sqrt(config.mass * config.mass - energy * energy);
    const double strength = coulomb::angular_strength(params, state.two_nu, state.two_ell);
    const double varpi2 = strength * strength - (mu_sum + 0.5) * (mu_sum + 0.5);
    const double g = config.g;
    // Residual in the scaled variable rho = 2 varsigma r, where the equation
    // reads Psi'' + 2(1+mu_sum)/rho Psi' + (E g / varsigma)/rho Psi
    //       + (g^2 - varpi^2)/rho^2 Psi - Psi/4 = 0.
    double max_res = 0.0;
    for (double rho : linspace(0.2, 10.0, 25)) {
        double r = rho / (2.0 * varsigma);
        double v = psi.value(r);
        double d1 = psi.d1(r) / (2.0 * varsigma);
        double d2 = psi.d2(r) / (4.0 * varsigma * varsigma);
        double res = d2 + 2.0 * (1.0 + mu_sum) / rho * d1
                   + (energy * g / varsigma) / rho * v
                   + (g * g - varpi2) / (rho * rho) * v - 0.25 * v;
        max_res = std::max(max_res, std::abs(res));
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "ode coulomb-radial n=%d 2nu=%d 2ell=%d g=%g",
                  state.n_radial, state.two_nu, state.two_ell, g);
    return residual_report(buf, max_res, 1.0 + energy * g / varsigma, tol);
}

VerificationReport verify_degeneracy_match(const WignerParams& params,
                                           const OscillatorConfig& config,
                                           double e2_cutoff, double perturbation) {
    LevelTable cart = cartesian::enumerate_cartesian_levels(params, config, e2_cutoff);
    LevelTable sph = spherical::enumerate_spherical_levels(params, config, e2_cutoff);
    if (perturbation != 0.0)
        for (Level& lvl : sph) {
            lvl.shell += perturbation;
            lvl.e2 += 2.0 * config.m_omega() * perturbation;
        }
    VerificationReport rep;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "degeneracy-match cutoff=%g", e2_cutoff);
    rep.quantity = buf;
    long long total_cart = 0, total_sph = 0;
    for (const Level& l : cart) total_cart += l.degeneracy;
    for (const Level& l : sph) total_sph += l.degeneracy;
    rep.closed_form = static_cast<double>(total_cart);
    rep.oracle = static_cast<double>(total_sph);
    rep.abs_err = std::abs(rep.closed_form - rep.oracle);
    rep.rel_err = rep.abs_err / std::max(1.0, rep.closed_form);
    rep.tolerance = 0.0;
    rep.pass = level_tables_equal(cart, sph);
    std::snprintf(buf, sizeof(buf), "levels=%zu states=%lld", cart.size(), total_cart);
    rep.detail = buf;
    if (!rep.pass) {
        std::size_t upto = std::min(cart.size(), sph.size());
        for (std::size_t i = 0; i < upto; ++i)
            if (cart[i].shell != sph[i].shell || cart[i].degeneracy != sph[i].degeneracy) {
                std::snprintf(buf, sizeof(buf),
                              " first mismatch: shell %.12g deg %lld vs shell %.12g deg %lld",
                              cart[i].shell, cart[i].degeneracy, sph[i].shell,
                              sph[i].degeneracy);
                rep.detail += buf;
                break;
            }
        if (cart.size() != sph.size()) rep.detail += " (level counts differ)";
    }
    return rep;
}

VerificationReport verify_coulomb_inverse(const coulomb::CoulombState& state,
                                          const WignerParams& params,
                                          const coulomb::CoulombConfig& config,
                                          double tol, double perturbation) {
    VerificationReport rep;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "coulomb-inverse n=%d 2nu=%d 2ell=%d g=%g",
                  state.n_radial, state.two_nu, state.two_ell, config.g);
    rep.quantity = buf;
    rep.closed_form = state.n_radial;
    rep.tolerance = tol;
    double energy = coulomb::coulomb_energy(state, params, config) + perturbation;
    try {
        double idx = coulomb::quantization_index(energy, state, params, config);
        rep.oracle = idx;
        rep.abs_err = std::abs(idx - state.n_radial);
        rep.rel_err = rep.abs_err;
        rep.pass = rep.abs_err < tol;
    } catch (const std::domain_error& e) {
        // A perturbed energy may leave the bound interval entirely; that is
        // still a detected inconsistency, not a crash.
        rep.oracle = energy;
        rep.abs_err = rep.rel_err = std::numeric_limits<double>::infinity();
        rep.pass = false;
        rep.detail = e.what();
    }
    return rep;
}

} // namespace dunklkg::oracle
