#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dunklkg/cartesian.hpp"
#include "dunklkg/coulomb.hpp"
#include "dunklkg/dunkl_operator.hpp"
#include "dunklkg/spherical.hpp"
#include "dunklkg/tables.hpp"

namespace dunklkg::cli {

namespace {

struct RunConfig {
    std::string problem = "cartesian";
    double mu1 = 0.0, mu2 = 0.0, mu3 = 0.0;
    double mass = 1.0;
    double omega = 1.0;
    double coupling = 0.1;
    int nmax = 3;
    std::string sectors = "all";
    double cutoff = -1.0;
    double grid_xmax = 0.0;
    int grid_npts = 0;
    std::string format = "csv";
    std::string out;
    std::vector<std::string> only;
    bool negative_control = false;

    WignerParams params() const { return WignerParams{mu1, mu2, mu3}; }
    OscillatorConfig oscillator() const { return OscillatorConfig{mass, omega}; }
    coulomb::CoulombConfig coulomb_config() const {
        coulomb::CoulombConfig c;
        c.mass = mass;
        c.g = coupling;
        return c;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(sep, start);
        if (end == std::string::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

int parity_char(char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw std::domain_error(std::string("bad parity character '") + c +
                            "' (expected '+' or '-')");
}

// 3D filter: "all" or comma-separated 3-character tokens like "+-+".
// The result preserves the canonical sector order.
std::vector<ParitySector> parse_sector_filter(const std::string& text) {
    const auto& canonical = ParitySector::all();
    std::vector<ParitySector> all(canonical.begin(), canonical.end());
    if (text == "all" || text.empty()) return all;
    std::set<int> wanted;
    for (const std::string& token : split(text, ',')) {
        if (token.size() != 3)
            throw std::domain_error("bad sector token '" + token +
                                    "' (expected three of '+'/'-')");
        ParitySector s{parity_char(token[0]), parity_char(token[1]), parity_char(token[2])};
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i].s1 == s.s1 && all[i].s2 == s.s2 && all[i].s3 == s.s3)
                wanted.insert(static_cast<int>(i));
    }
    std::vector<ParitySector> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (wanted.count(static_cast<int>(i))) out.push_back(all[i]);
    return out;
}

// 1D filter for density profiles: "all" or tokens "+" / "-".
std::vector<int> parse_parity_filter(const std::string& text) {
    if (text == "all" || text.empty()) return {1, -1};
    std::set<int> wanted;
    for (const std::string& token : split(text, ',')) {
        if (token.size() != 1)
            throw std::domain_error("bad parity token '" + token +
                                    "' (expected '+' or '-')");
        wanted.insert(parity_char(token[0]));
    }
    std::vector<int> out;
    if (wanted.count(1)) out.push_back(1);
    if (wanted.count(-1)) out.push_back(-1);
    return out;
}

bool admissible(const spherical::SphericalQuantum& q) {
    try {
        q.validate();
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

int emit(const tables::Table& t, const RunConfig& cfg) {
    std::string text = cfg.format == "json" ? t.to_json() : t.to_csv();
    if (cfg.out.empty())
        std::fwrite(text.data(), 1, text.size(), stdout);
    else
        tables::write_file(cfg.out, text);
    return 0;
}

std::string format_sector(const ParitySector& s) {
    std::string t;
    t += s.s1 > 0 ? '+' : '-';
    t += s.s2 > 0 ? '+' : '-';
    t += s.s3 > 0 ? '+' : '-';
    return t;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    std::size_t slash = path.find_last_of('/');
    std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum_cartesian(const RunConfig& cfg) {
    WignerParams params = cfg.params();
    params.validate();
    OscillatorConfig osc = cfg.oscillator();
    osc.validate();
    std::vector<ParitySector> sectors = parse_sector_filter(cfg.sectors);
    tables::Table t;
    t.columns = {"n1", "n2", "n3", "s1", "s2", "s3", "E", "E2"};
    for (int n1 = 0; n1 <= cfg.nmax; ++n1)
        for (int n2 = 0; n1 + n2 <= cfg.nmax; ++n2)
            for (int n3 = 0; n1 + n2 + n3 <= cfg.nmax; ++n3)
                for (const ParitySector& sec : sectors) {
                    cartesian::CartesianState st;
                    st.n1 = n1;
                    st.n2 = n2;
                    st.n3 = n3;
                    st.sector = sec;
                    double e = cartesian::total_energy_cartesian(st, params, osc);
                    t.add_row({double(n1), double(n2), double(n3), double(sec.s1),
                               double(sec.s2), double(sec.s3), e, e * e});
                }
    return emit(t, cfg);
}

int cmd_spectrum_spherical(const RunConfig& cfg) {
    WignerParams params = cfg.params();
    params.validate();
    OscillatorConfig osc = cfg.oscillator();
    osc.validate();
    std::vector<ParitySector> sectors = parse_sector_filter(cfg.sectors);
    struct Row {
        spherical::SphericalQuantum q;
        double e, e2;
    };
    std::vector<Row> rows;
    double max_e2 = 0.0;
    // nmax bounds the shell depth N + d + e (radial index plus the two Jacobi
    // degrees), the exact counterpart of n1+n2+n3 on the Cartesian side.
    for (int n = 0; n <= cfg.nmax; ++n)
        for (int two_nu = 0; two_nu <= 2 * cfg.nmax; ++two_nu)
            for (int two_ell = 0; two_ell <= 2 * cfg.nmax; ++two_ell)
                for (const ParitySector& sec : sectors) {
                    spherical::SphericalQuantum q;
                    q.n_radial = n;
                    q.two_nu = two_nu;
                    q.two_ell = two_ell;
                    q.sector = sec;
                    if (!admissible(q)) continue;
                    if (n + q.jacobi_degree_d() + q.jacobi_degree_e() > cfg.nmax)
                        continue;
                    double e = spherical::total_energy_spherical(q, params, osc);
                    rows.push_back({q, e, e * e});
                    max_e2 = std::max(max_e2, e * e);
                }
    double cutoff = cfg.cutoff > 0.0 ? cfg.cutoff : max_e2;
    LevelTable levels = spherical::enumerate_spherical_levels(params, osc, cutoff);
    tables::Table t;
    t.columns = {"N", "2nu", "2ell", "s1", "s2", "s3", "E", "E2", "degeneracy"};
    for (const Row& r : rows) {
        double deg = 0.0;
        for (const Level& l : levels)
            if (l.e2 == r.e2) deg = double(l.degeneracy);
        t.add_row({double(r.q.n_radial), double(r.q.two_nu), double(r.q.two_ell),
                   double(r.q.sector.s1), double(r.q.sector.s2), double(r.q.sector.s3),
                   r.e, r.e2, deg});
    }
    return emit(t, cfg);
}

int cmd_spectrum_coulomb(const RunConfig& cfg) {
    WignerParams params = cfg.params();
    params.validate();
    coulomb::CoulombConfig cc = cfg.coulomb_config();
    cc.validate();
    std::vector<ParitySector> sectors = parse_sector_filter(cfg.sectors);
    int angular_max = cfg.cutoff >= 0.0 ? int(cfg.cutoff) : 2;
    tables::Table t;
    t.columns = {"n",  "2nu",    "2ell",     "s1",     "s2", "s3",
                 "g",  "E",      "E_rest",   "E_nonrel", "E_fine"};
    int skipped = 0;
    for (int n = 0; n <= cfg.nmax; ++n)
        for (int two_nu = 0; two_nu <= angular_max; ++two_nu)
            for (int two_ell = 0; two_nu + two_ell <= angular_max; ++two_ell)
                for (const ParitySector& sec : sectors) {
                    coulomb::CoulombState st;
                    st.n_radial = n;
                    st.two_nu = two_nu;
                    st.two_ell = two_ell;
                    st.sector = sec;
                    if (!admissible(st)) continue;
                    if (!coulomb::bound_constraint(params, two_nu, two_ell, cc.g)) {
                        std::cerr << "warning: skipping n=" << n << " 2nu=" << two_nu
                                  << " 2ell=" << two_ell << " sector "
                                  << format_sector(sec)
                                  << ": no bound state, requires "
                                     "(mu1+mu2+mu3+2nu+2ell+1/2) > Ze^2\n";
                        ++skipped;
                        continue;
                    }
                    double e = coulomb::coulomb_energy(st, params, cc);
                    coulomb::FineStructureTerms terms =
                        coulomb::fine_structure_expansion(st, params, cc);
                    t.add_row({double(n), double(two_nu), double(two_ell),
                               double(sec.s1), double(sec.s2), double(sec.s3), cc.g, e,
                               terms.rest, terms.nonrel, terms.fine});
                }
    if (t.rows.empty()) {
        std::cerr << "error: no bound states; every requested channel violates "
                     "(mu1+mu2+mu3+2nu+2ell+1/2) > Ze^2\n";
        return 1;
    }
    if (skipped > 0)
        std::cerr << "warning: " << skipped << " channel(s) skipped\n";
    return emit(t, cfg);
}

int cmd_spectrum(const RunConfig& cfg) {
    if (cfg.problem == "cartesian") return cmd_spectrum_cartesian(cfg);
    if (cfg.problem == "spherical") return cmd_spectrum_spherical(cfg);
    if (cfg.problem == "coulomb") return cmd_spectrum_coulomb(cfg);
    std::cerr << "error: unknown problem '" << cfg.problem << "'\n";
    return 1;
}

// ---------------------------------------------------------------------------
// density

int cmd_density(const RunConfig& cfg) {
    OscillatorConfig osc = cfg.oscillator();
    osc.validate();
    if (cfg.mu1 < 0.0) throw std::domain_error("mu1 must be non-negative");
    std::vector<int> parities = parse_parity_filter(cfg.sectors);
    double x_max = cfg.grid_xmax > 0.0 ? cfg.grid_xmax : 5.0;
    int npts = cfg.grid_npts > 0 ? cfg.grid_npts : 1001;
    if (npts < 2) throw std::domain_error("grid must have at least 2 points");
    for (int n = 0; n <= cfg.nmax; ++n)
        for (int s : parities) {
            cartesian::DensityProfile prof =
                cartesian::density_profile(n, s, cfg.mu1, osc, x_max, npts);
            tables::Table t;
            t.columns = {"x", "psi", "density_bare", "density_weighted"};
            for (std::size_t i = 0; i < prof.x.size(); ++i)
                t.add_row({prof.x[i], prof.psi[i], prof.density_bare[i],
                           prof.density_weighted[i]});
            std::string suffix =
                "_n" + std::to_string(n) + (s > 0 ? "_sp" : "_sm");
            std::string text = cfg.format == "json" ? t.to_json() : t.to_csv();
            if (cfg.out.empty()) {
                std::string head = "# state n=" + std::to_string(n) +
                                   " s=" + (s > 0 ? std::string("+1") : std::string("-1")) +
                                   "\n";
                std::fwrite(head.data(), 1, head.size(), stdout);
                std::fwrite(text.data(), 1, text.size(), stdout);
            } else {
                tables::write_file(with_suffix(cfg.out, suffix), text);
            }
        }
    return 0;
}

// ---------------------------------------------------------------------------
// finestructure

// Smallest sector compatible with the requested index parities; energies do
// not depend on the sector beyond that compatibility.
ParitySector canonical_sector(int two_nu, int two_ell) {
    ParitySector s{1, 1, 1};
    if (two_nu % 2 != 0) s.s2 = -1;
    if (two_ell % 2 != 0) s.s3 = -1;
    return s;
}

int cmd_finestructure(const RunConfig& cfg) {
    WignerParams params = cfg.params();
    params.validate();
    coulomb::CoulombConfig cc = cfg.coulomb_config();
    cc.validate();
    int angular_max = cfg.cutoff >= 0.0 ? int(cfg.cutoff) : 2;
    tables::Table t;
    t.meta = {{"problem", "coulomb"},
              {"mu1", tables::format_double(cfg.mu1)},
              {"mu2", tables::format_double(cfg.mu2)},
              {"mu3", tables::format_double(cfg.mu3)},
              {"mass", tables::format_double(cfg.mass)},
              {"coupling", tables::format_double(cfg.coupling)},
              {"nmax", std::to_string(cfg.nmax)},
              {"angular-max", std::to_string(angular_max)}};
    t.columns = {"n",      "2nu",      "2ell",   "X",       "E",
                 "E_rest", "E_nonrel", "E_fine", "residual", "vanishing"};
    int skipped = 0;
    for (int n = 0; n <= cfg.nmax; ++n)
        for (int two_nu = 0; two_nu <= angular_max; ++two_nu)
            for (int two_ell = 0; two_nu + two_ell <= angular_max; ++two_ell) {
                if (!coulomb::bound_constraint(params, two_nu, two_ell, cc.g)) {
                    std::cerr << "warning: skipping n=" << n << " 2nu=" << two_nu
                              << " 2ell=" << two_ell
                              << ": no bound state, requires "
                                 "(mu1+mu2+mu3+2nu+2ell+1/2) > Ze^2\n";
                    ++skipped;
                    continue;
                }
                coulomb::CoulombState st;
                st.n_radial = n;
                st.two_nu = two_nu;
                st.two_ell = two_ell;
                st.sector = canonical_sector(two_nu, two_ell);
                double e = coulomb::coulomb_energy(st, params, cc);
                coulomb::FineStructureTerms terms =
                    coulomb::fine_structure_expansion(st, params, cc);
                double x = coulomb::fine_structure_parameter(params, two_nu, two_ell);
                bool vanish = coulomb::fine_structure_vanishing(params, two_nu, two_ell);
                t.add_row({double(n), double(two_nu), double(two_ell), x, e, terms.rest,
                           terms.nonrel, terms.fine, e - terms.sum(),
                           vanish ? 1.0 : 0.0});
            }
    if (t.rows.empty()) {
        std::cerr << "error: no bound states; every requested channel violates "
                     "(mu1+mu2+mu3+2nu+2ell+1/2) > Ze^2\n";
        return 1;
    }
    if (skipped > 0)
        std::cerr << "warning: " << skipped << " channel(s) skipped\n";
    return emit(t, cfg);
}

// ---------------------------------------------------------------------------
// verify battery

double poly_eval(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Function1D polynomial(std::vector<double> coeffs) {
    std::vector<double> c1, c2;
    for (std::size_t k = 1; k < coeffs.size(); ++k) c1.push_back(double(k) * coeffs[k]);
    for (std::size_t k = 1; k < c1.size(); ++k) c2.push_back(double(k) * c1[k]);
    Function1D f;
    f.value = [coeffs](double x) { return poly_eval(coeffs, x); };
    f.d1 = [c1](double x) { return poly_eval(c1, x); };
    f.d2 = [c2](double x) { return poly_eval(c2, x); };
    return f;
}

Function1D multiply(const Function1D& a, const Function1D& b) {
    Function1D p;
    p.value = [a, b](double x) { return a.value(x) * b.value(x); };
    p.d1 = [a, b](double x) { return a.d1(x) * b.value(x) + a.value(x) * b.d1(x); };
    p.d2 = [a, b](double x) {
        return a.d2(x) * b.value(x) + 2.0 * a.d1(x) * b.d1(x) + a.value(x) * b.d2(x);
    };
    return p;
}

std::vector<oracle::VerificationReport> job_algebra(const BatteryOptions&) {
    std::vector<std::vector<double>> battery;
    for (int k = 0; k <= 8; ++k) {
        std::vector<double> mono(k + 1, 0.0);
        mono[k] = 1.0;
        battery.push_back(mono);
    }
    battery.push_back({1.0, -2.0, 0.0, 0.5, 3.0, 0.0, 0.0, -1.0});
    battery.push_back({2.0, 0.0, 1.0, 0.0, 0.0, -4.0, 0.0, 0.0, 0.25});
    const std::vector<double> xs = {0.0,  0.35, -0.35, 0.8, -0.8,
                                    1.3, -1.3,  1.7,  -1.7, 2.1, -2.1};
    Function1D x_poly = polynomial({0.0, 1.0});
    Function1D g = polynomial({2.0, 0.0, 1.0, 0.0, 0.0, -4.0, 0.0, 0.0, 0.25});
    std::vector<oracle::VerificationReport> reports;
    for (double mu : {0.0, 0.3, 1.2}) {
        double dev = 0.0;
        for (const auto& coeffs : battery) {
            Function1D f = polynomial(coeffs);
            Function1D rf = reflect(f);
            Function1D xf = multiply(x_poly, f);
            Function1D fg = multiply(f, g);
            for (double x : xs) {
                // commutator with the position operator: [x, D] = 1 + 2 mu R
                double comm = dunkl_apply(xf, mu, x) - x * dunkl_apply(f, mu, x);
                dev = std::max(dev, std::abs(comm - f.value(x) - 2.0 * mu * f.value(-x)));
                // reflection anticommutation: R D = -D R
                dev = std::max(dev, std::abs(dunkl_apply(f, mu, -x) +
                                             dunkl_apply(rf, mu, x)));
                // deformed Leibniz rule
                double rhs = dunkl_apply(f, mu, x) * g.value(x) +
                             f.value(x) * dunkl_apply(g, mu, x);
                if (x != 0.0)
                    rhs -= (mu / x) * (f.value(x) - f.value(-x)) *
                           (g.value(x) - g.value(-x));
                dev = std::max(dev, std::abs(dunkl_apply(fg, mu, x) - rhs));
            }
        }
        oracle::VerificationReport rep;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "algebra identities mu=%g", mu);
        rep.quantity = buf;
        rep.closed_form = 0.0;
        rep.oracle = dev;
        rep.abs_err = rep.rel_err = dev;
        rep.tolerance = 1e-9;
        rep.pass = dev < rep.tolerance;
        rep.detail = "polynomial battery, degree <= 8";
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<oracle::VerificationReport> job_spectrum_1d(const BatteryOptions& opt) {
    OscillatorConfig osc{0.5, 1.0};
    std::vector<oracle::VerificationReport> reports;
    for (double mu : {0.0, 0.25, 0.5, 1.5})
        for (int s : {1, -1}) {
            auto r = oracle::verify_spectrum_1d(mu, s, osc, 5, opt.grid,
                                                oracle::Scheme::flux_form,
                                                opt.perturbation);
            reports.insert(reports.end(), r.begin(), r.end());
        }
    // Independent route: the x^mu similarity transform, on the parameter set
    // where its Dirichlet realization matches the reflection-symmetric
    // operator and converges at second order.
    for (double mu : {0.0, 0.5, 1.5}) {
        for (int s : {1, -1}) {
            if (s == 1 && mu != 0.0) continue;
            auto r = oracle::verify_spectrum_1d(mu, s, osc, 3, opt.grid,
                                                oracle::Scheme::u_transform,
                                                opt.perturbation);
            for (auto& rep : r) rep.quantity += " [u-transform]";
            reports.insert(reports.end(), r.begin(), r.end());
        }
    }
    return reports;
}

std::vector<oracle::VerificationReport> job_orthonormality_cartesian(const BatteryOptions&) {
    OscillatorConfig osc{0.5, 1.0};
    std::vector<oracle::VerificationReport> reports;
    for (double mu : {0.0, 0.25, 0.5, 1.5})
        reports.push_back(oracle::verify_orthonormality_cartesian_1d(mu, osc, 8));
    return reports;
}

std::vector<oracle::VerificationReport> job_orthonormality_angular(const BatteryOptions&) {
    std::vector<oracle::VerificationReport> reports;
    for (WignerParams p : {WignerParams{0.5, 0.5, 0.5}, WignerParams{0.3, 0.7, 1.1},
                           WignerParams{0.0, 0.0, 0.0}})
        reports.push_back(oracle::verify_orthonormality_spherical_angular(p, 4));
    return reports;
}

std::vector<oracle::VerificationReport> job_orthonormality_full(const BatteryOptions&) {
    OscillatorConfig osc{0.5, 1.0};
    std::vector<oracle::VerificationReport> reports;
    for (WignerParams p : {WignerParams{0.5, 0.5, 0.5}, WignerParams{0.3, 0.7, 1.1},
                           WignerParams{0.0, 0.0, 0.0}})
        reports.push_back(oracle::verify_orthonormality_spherical_full(p, osc, 4));
    return reports;
}

std::vector<oracle::VerificationReport> job_orthonormality_coulomb(const BatteryOptions&) {
    std::vector<oracle::VerificationReport> reports;
    coulomb::CoulombConfig cc;
    cc.mass = 1.0;
    cc.g = 0.1;
    reports.push_back(oracle::verify_orthonormality_coulomb_radial(
        WignerParams{0.5, 1.0 / 3.0, 0.0}, cc, 0, 0, ParitySector{1, 1, 1}, 6));
    reports.push_back(oracle::verify_orthonormality_coulomb_radial(
        WignerParams{0.3, 0.7, 1.1}, cc, 3, 1, ParitySector{-1, 1, -1}, 4));
    reports.push_back(oracle::verify_orthonormality_coulomb_radial(
        WignerParams{0.3, 0.7, 1.1}, cc, 2, 2, ParitySector{1, 1, 1}, 4));
    return reports;
}

spherical::SphericalQuantum make_q(int n, int two_nu, int two_ell, int s1, int s2, int s3) {
    spherical::SphericalQuantum q;
    q.n_radial = n;
    q.two_nu = two_nu;
    q.two_ell = two_ell;
    q.sector = ParitySector{s1, s2, s3};
    return q;
}

std::vector<oracle::VerificationReport> job_ode_residuals(const BatteryOptions& opt) {
    const double p = opt.perturbation;
    std::vector<oracle::VerificationReport> reports;
    OscillatorConfig osc{0.5, 1.0};
    for (double mu : {0.0, 0.3, 1.2})
        for (int s : {1, -1})
            for (int n : {0, 2, 4})
                reports.push_back(
                    oracle::verify_ode_residual_sector_1d(n, s, mu, osc, 1e-8, p));

    WignerParams wp{0.3, 0.7, 1.1};
    const std::vector<spherical::SphericalQuantum> angular = {
        make_q(0, 0, 0, 1, 1, 1),  make_q(0, 2, 0, 1, 1, 1),  make_q(0, 4, 0, 1, 1, 1),
        make_q(0, 1, 0, 1, -1, 1), make_q(0, 3, 0, 1, -1, 1), make_q(0, 1, 0, -1, 1, 1),
        make_q(0, 3, 0, -1, 1, 1), make_q(0, 2, 0, -1, -1, 1), make_q(0, 4, 0, -1, -1, 1)};
    for (const auto& q : angular)
        reports.push_back(oracle::verify_ode_residual_azimuthal(q, wp, 1e-8, p));

    const std::vector<spherical::SphericalQuantum> polar = {
        make_q(0, 0, 0, 1, 1, 1),   make_q(0, 0, 2, 1, 1, 1),  make_q(0, 0, 4, 1, 1, 1),
        make_q(0, 2, 0, 1, 1, 1),   make_q(0, 2, 2, 1, 1, 1),  make_q(0, 4, 0, 1, 1, 1),
        make_q(0, 1, 1, 1, -1, -1), make_q(0, 1, 3, 1, -1, -1), make_q(0, 3, 1, 1, -1, -1)};
    for (const auto& q : polar)
        reports.push_back(oracle::verify_ode_residual_polar(q, wp, 1e-8, p));
    reports.push_back(oracle::verify_ode_residual_polar(
        make_q(0, 2, 1, 1, 1, -1), WignerParams{0.3, 0.7, 0.2}, 1e-8, p));

    const std::vector<spherical::SphericalQuantum> radial = {
        make_q(0, 0, 0, 1, 1, 1), make_q(0, 0, 2, 1, 1, 1), make_q(0, 2, 0, 1, 1, 1),
        make_q(1, 0, 0, 1, 1, 1), make_q(1, 2, 2, 1, 1, 1), make_q(2, 0, 0, 1, 1, 1),
        make_q(1, 2, 0, -1, -1, 1), make_q(0, 3, 1, 1, -1, -1)};
    for (const auto& q : radial)
        reports.push_back(
            oracle::verify_ode_residual_oscillator_radial(q, wp, osc, 1e-8, p));

    coulomb::CoulombConfig cc;
    cc.mass = 1.0;
    cc.g = 0.1;
    WignerParams wc{0.5, 1.0 / 3.0, 0.0};
    const std::vector<spherical::SphericalQuantum> coul = {
        make_q(0, 0, 0, 1, 1, 1), make_q(1, 0, 0, 1, 1, 1), make_q(2, 0, 0, 1, 1, 1),
        make_q(1, 0, 2, 1, 1, 1), make_q(0, 1, 1, 1, -1, -1), make_q(1, 2, 0, -1, -1, 1)};
    for (const auto& st : coul)
        reports.push_back(oracle::verify_ode_residual_coulomb_radial(st, wc, cc, 1e-8, p));
    return reports;
}

std::vector<oracle::VerificationReport> job_degeneracy(const BatteryOptions& opt) {
    OscillatorConfig osc{0.5, 1.0};
    return {
        oracle::verify_degeneracy_match(WignerParams{0.5, 0.5, 0.5}, osc, 12.25,
                                        opt.perturbation),
        oracle::verify_degeneracy_match(WignerParams{0.0, 0.0, 0.0}, osc, 12.25,
                                        opt.perturbation),
        oracle::verify_degeneracy_match(WignerParams{0.3, 0.7, 1.1}, osc, 14.0,
                                        opt.perturbation),
    };
}

std::vector<oracle::VerificationReport> job_coulomb_inverse(const BatteryOptions& opt) {
    std::vector<oracle::VerificationReport> reports;
    WignerParams wp{0.3, 0.7, 1.1};
    WignerParams wc{0.5, 1.0 / 3.0, 0.0};
    for (double g : {0.1, 0.5}) {
        coulomb::CoulombConfig cc;
        cc.mass = 1.0;
        cc.g = g;
        reports.push_back(oracle::verify_coulomb_inverse(
            make_q(0, 0, 0, 1, 1, 1), wc, cc, 1e-10, -opt.perturbation));
        reports.push_back(oracle::verify_coulomb_inverse(
            make_q(3, 0, 0, 1, 1, 1), wc, cc, 1e-10, -opt.perturbation));
        reports.push_back(oracle::verify_coulomb_inverse(
            make_q(1, 1, 1, 1, -1, -1), wp, cc, 1e-10, -opt.perturbation));
    }
    return reports;
}

std::vector<oracle::VerificationReport> job_fine_structure(const BatteryOptions& opt) {
    std::vector<oracle::VerificationReport> reports;
    // Order of the expansion defect as g -> 0 for the ground channel, the one
    // case where the quoted quartic coefficient is exact; see the acceptance
    // notes for the general-channel behaviour.
    {
        WignerParams wp{0.0, 0.0, 0.0};
        coulomb::CoulombState st = make_q(0, 0, 0, 1, 1, 1);
        double res[3];
        int i = 0;
        for (double g : {0.1, 0.05, 0.025}) {
            coulomb::CoulombConfig cc;
            cc.mass = 1.0;
            cc.g = g;
            double exact = coulomb::coulomb_energy(st, wp, cc) + opt.perturbation;
            res[i++] = std::abs(exact - coulomb::fine_structure_expansion(st, wp, cc).sum());
        }
        double order = std::min(std::log2(res[0] / res[1]), std::log2(res[1] / res[2]));
        oracle::VerificationReport rep;
        rep.quantity = "fine-structure expansion order, ground channel";
        rep.closed_form = 6.0;
        rep.oracle = order;
        rep.abs_err = std::abs(order - 6.0);
        rep.rel_err = rep.abs_err / 6.0;
        rep.tolerance = 0.5;
        rep.pass = std::isfinite(order) && order >= 5.5;
        rep.history = {res[0], res[1], res[2]};
        reports.push_back(std::move(rep));
    }
    // Vanishing of the quartic term at mu_sum + 2(nu+ell) = 5/6.
    {
        WignerParams wp{0.5, 1.0 / 3.0, 0.0};
        coulomb::CoulombConfig cc;
        cc.mass = 1.0;
        cc.g = 0.1;
        coulomb::FineStructureTerms terms =
            coulomb::fine_structure_expansion(make_q(0, 0, 0, 1, 1, 1), wp, cc);
        double fine = terms.fine + opt.perturbation;
        oracle::VerificationReport rep;
        rep.quantity = "fine-structure vanishing at X=5/6";
        rep.closed_form = 0.0;
        rep.oracle = fine;
        rep.abs_err = rep.rel_err = std::abs(fine);
        rep.tolerance = 1e-14 * cc.mass;
        rep.pass = std::abs(fine) < rep.tolerance &&
                   coulomb::fine_structure_vanishing(wp, 0, 0);
        reports.push_back(std::move(rep));
    }
    return reports;
}

using JobFn = std::vector<oracle::VerificationReport> (*)(const BatteryOptions&);

const std::vector<std::pair<std::string, JobFn>>& battery_jobs() {
    static const std::vector<std::pair<std::string, JobFn>> jobs = {
        {"algebra", job_algebra},
        {"spectrum-1d", job_spectrum_1d},
        {"orthonormality-cartesian-1d", job_orthonormality_cartesian},
        {"orthonormality-angular", job_orthonormality_angular},
        {"orthonormality-full-3d", job_orthonormality_full},
        {"orthonormality-coulomb-radial", job_orthonormality_coulomb},
        {"ode-residuals", job_ode_residuals},
        {"degeneracy", job_degeneracy},
        {"coulomb-inverse", job_coulomb_inverse},
        {"fine-structure", job_fine_structure},
    };
    return jobs;
}

int cmd_verify(const RunConfig& cfg) {
    BatteryOptions opt;
    opt.only = cfg.only;
    opt.perturbation = cfg.negative_control ? 0.01 : 0.0;
    if (cfg.grid_xmax > 0.0) opt.grid.x_max = cfg.grid_xmax;
    if (cfg.grid_npts > 0) opt.grid.npts = cfg.grid_npts;
    opt.grid.validate();
    for (const std::string& id : opt.only) {
        bool known = false;
        for (const auto& [name, fn] : battery_jobs()) known = known || name == id;
        if (!known) {
            std::cerr << "error: unknown verification job '" << id << "'\n";
            return 1;
        }
    }
    std::vector<oracle::VerificationReport> reports = run_battery(opt);
    std::string json = tables::verification_report_json(reports);
    if (cfg.out.empty())
        std::fwrite(json.data(), 1, json.size(), stdout);
    else
        tables::write_file(cfg.out, json);
    int failures = 0;
    for (const auto& r : reports)
        if (!r.pass) {
            ++failures;
            std::cerr << "FAIL: " << r.quantity << "\n";
        }
    if (failures > 0) {
        std::cerr << failures << " of " << reports.size() << " checks failed\n";
        return 2;
    }
    return 0;
}

} // namespace

const std::vector<std::string>& battery_job_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : battery_jobs()) v.push_back(name);
        return v;
    }();
    return ids;
}

std::vector<oracle::VerificationReport> run_battery(const BatteryOptions& options) {
    std::vector<oracle::VerificationReport> all;
    for (const auto& [name, fn] : battery_jobs()) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), name) ==
                options.only.end())
            continue;
        std::vector<oracle::VerificationReport> r = fn(options);
        all.insert(all.end(), r.begin(), r.end());
    }
    return all;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// CLI11 2.4 ignores a config file attached to a subcommand, so the file is
// applied by hand before parsing: each key=value becomes the new default of
// the matching option, which keeps explicit command-line flags winning.
bool apply_config_file(CLI::App* sub, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read config file '" << path << "'\n";
        return false;
    }
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: config line is not key=value: '" << t << "'\n";
            return false;
        }
        std::string key = trimmed(t.substr(0, eq));
        std::string value = trimmed(t.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front())
            value = value.substr(1, value.size() - 2);
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr || key == "config") {
            std::cerr << "error: unknown config key '" << key << "' for subcommand '"
                      << sub->get_name() << "'\n";
            return false;
        }
        try {
            if (opt->get_expected_min() == 0) {
                // flag-like option: only a truthy value turns it on
                if (value == "true" || value == "1" || value == "yes" || value == "on")
                    opt->add_result("true");
                else if (value != "false" && value != "0" && value != "no" &&
                         value != "off") {
                    std::cerr << "error: config key '" << key
                              << "' expects a boolean, got '" << value << "'\n";
                    return false;
                }
            } else {
                opt->default_val(value);
            }
        } catch (const CLI::Error& e) {
            std::cerr << "error: bad config value for '" << key << "': " << e.what()
                      << "\n";
            return false;
        }
    }
    return true;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Dunkl-deformed Klein-Gordon oscillator and Coulomb problem toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string dummy_config_path;

    auto add_common = [&cfg, &dummy_config_path](CLI::App* sub, bool with_coupling) {
        sub->add_option("--mu1", cfg.mu1, "deformation parameter, axis 1")
            ->capture_default_str();
        sub->add_option("--mu2", cfg.mu2, "deformation parameter, axis 2")
            ->capture_default_str();
        sub->add_option("--mu3", cfg.mu3, "deformation parameter, axis 3")
            ->capture_default_str();
        sub->add_option("--mass", cfg.mass, "particle mass m")->capture_default_str();
        if (with_coupling)
            sub->add_option("--coupling", cfg.coupling, "Coulomb coupling Z e^2")
                ->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "output path (default: standard output)");
        sub->add_option("--config", dummy_config_path,
                        "key=value configuration file; command-line flags override");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "emit a level table");
    spectrum->add_option("--problem", cfg.problem, "cartesian | spherical | coulomb")
        ->check(CLI::IsMember({"cartesian", "spherical", "coulomb"}))
        ->capture_default_str();
    add_common(spectrum, true);
    spectrum->add_option("--omega", cfg.omega, "oscillator frequency")
        ->capture_default_str();
    spectrum->add_option("--nmax", cfg.nmax,
                         "cartesian: bound on n1+n2+n3; spherical: bound on the "
                         "shell depth N+d+e; coulomb: bound on the radial index")
        ->capture_default_str();
    spectrum->add_option("--sectors", cfg.sectors,
                         "'all' or comma-separated sector tokens like '+-+'")
        ->capture_default_str();
    spectrum->add_option(
        "--cutoff", cfg.cutoff,
        "spherical: E^2 cutoff for the degeneracy enumeration (default: largest "
        "table entry); coulomb: largest 2nu+2ell to tabulate (default 2)");

    CLI::App* density = app.add_subcommand(
        "density", "emit axis density profiles for n = 0..nmax, both parities");
    add_common(density, false);
    density->add_option("--omega", cfg.omega, "oscillator frequency")
        ->capture_default_str();
    density->add_option("--nmax", cfg.nmax, "largest 1D excitation")
        ->capture_default_str();
    density->add_option("--sectors", cfg.sectors, "'all' or tokens '+'/'-'")
        ->capture_default_str();
    density->add_option("--grid-xmax", cfg.grid_xmax, "half-width of the grid (default 5)");
    density->add_option("--grid-npts", cfg.grid_npts, "number of grid points (default 1001)");

    CLI::App* fine = app.add_subcommand("finestructure",
                                        "emit the small-coupling expansion report");
    add_common(fine, true);
    fine->add_option("--nmax", cfg.nmax, "largest radial index")->capture_default_str();
    fine->add_option("--cutoff", cfg.cutoff, "largest 2nu+2ell to tabulate (default 2)");

    CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("--only", cfg.only,
                       "restrict to the named jobs (repeatable)")
        ->delimiter(',');
    verify->add_flag("--negative-control", cfg.negative_control,
                     "corrupt closed-form energies by 0.01; the battery must fail");
    verify->add_option("--grid-xmax", cfg.grid_xmax, "oracle domain half-width");
    verify->add_option("--grid-npts", cfg.grid_npts, "oracle base grid resolution");
    verify->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    verify->add_option("--config", dummy_config_path,
                       "key=value configuration file; command-line flags override");

    // Locate a --config request and the subcommand it belongs to before the
    // real parse, so the file's values are in place as defaults.
    std::string config_path;
    CLI::App* config_target = nullptr;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc)
            config_path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            config_path = arg.substr(9);
        else if (config_target == nullptr)
            for (CLI::App* sub : {spectrum, density, fine, verify})
                if (arg == sub->get_name()) config_target = sub;
    }
    if (!config_path.empty()) {
        if (config_target == nullptr) {
            std::cerr << "error: --config requires a subcommand\n";
            return 1;
        }
        if (!apply_config_file(config_target, config_path)) return 1;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*spectrum) return cmd_spectrum(cfg);
        if (*density) return cmd_density(cfg);
        if (*fine) return cmd_finestructure(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace dunklkg::cli
