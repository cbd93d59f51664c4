#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunklkg/cartesian.hpp"
#include "dunklkg/spherical.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace dunklkg;

namespace {

spherical::SphericalQuantum make_q(int n, int two_nu, int two_ell, int s1, int s2,
                                   int s3) {
    spherical::SphericalQuantum q;
    q.n_radial = n;
    q.two_nu = two_nu;
    q.two_ell = two_ell;
    q.sector = ParitySector{s1, s2, s3};
    return q;
}

} // namespace

TEST_CASE("admissibility: separation indices must fit the sector parities") {
    CHECK_NOTHROW(make_q(0, 0, 0, 1, 1, 1).validate());
    CHECK_NOTHROW(make_q(2, 4, 2, 1, 1, 1).validate());
    CHECK_NOTHROW(make_q(0, 1, 1, 1, -1, -1).validate());
    CHECK_NOTHROW(make_q(0, 2, 0, -1, -1, 1).validate());
    // two_nu parity must match k+p
    CHECK_THROWS_AS(make_q(0, 1, 0, 1, 1, 1).validate(), std::domain_error);
    CHECK_THROWS_AS(make_q(0, 2, 0, 1, -1, 1).validate(), std::domain_error);
    // two_nu must be at least k+p
    CHECK_THROWS_AS(make_q(0, 0, 0, -1, -1, 1).validate(), std::domain_error);
    // two_ell parity must match sigma
    CHECK_THROWS_AS(make_q(0, 0, 1, 1, 1, 1).validate(), std::domain_error);
    CHECK_THROWS_AS(make_q(0, 0, 2, 1, 1, -1).validate(), std::domain_error);
    CHECK_THROWS_AS(make_q(-1, 0, 0, 1, 1, 1).validate(), std::domain_error);

    spherical::SphericalQuantum q = make_q(3, 4, 1, 1, 1, -1);
    CHECK(q.nu() == doctest::Approx(2.0));
    CHECK(q.ell() == doctest::Approx(0.5));
    CHECK(q.jacobi_degree_d() == 2);
    CHECK(q.jacobi_degree_e() == 0);
}

TEST_CASE("separation constants: pinned values") {
    WignerParams half{0.5, 0.5, 0.5};
    WignerParams zero{0.0, 0.0, 0.0};

    CHECK(spherical::separation_omega2(make_q(0, 0, 0, 1, 1, 1), half) == 0.0);
    // nu = 1, mu1 = mu2 = 1/2: omega^2 = 2 nu (2 nu + 2 mu1 + 2 mu2) = 8
    CHECK(spherical::separation_omega2(make_q(0, 2, 0, 1, 1, 1), half) ==
          doctest::Approx(8.0));
    // nu = 1/2 undeformed: odd azimuthal ladder value 1
    CHECK(spherical::separation_omega2(make_q(0, 1, 0, 1, -1, 1), zero) ==
          doctest::Approx(1.0));

    CHECK(spherical::separation_varpi2(make_q(0, 0, 0, 1, 1, 1), half) == 0.0);
    // nu = ell = 1/2, all mu = 1/2: varpi^2 = 12
    CHECK(spherical::separation_varpi2(make_q(0, 1, 1, 1, -1, -1), half) ==
          doctest::Approx(12.0));
}

TEST_CASE("spherical total energy: pinned value and cartesian agreement") {
    OscillatorConfig osc{0.5, 1.0};
    WignerParams half{0.5, 0.5, 0.5};
    CHECK(spherical::total_energy_spherical(make_q(0, 2, 1, -1, -1, -1), half, osc) ==
          doctest::Approx(2.5));
    CHECK(spherical::total_energy_spherical(make_q(0, 0, 0, 1, 1, 1), half, osc) ==
          doctest::Approx(osc.mass));
    // negative branch mirrors
    CHECK(spherical::total_energy_spherical(make_q(1, 2, 0, 1, 1, 1), half, osc, -1) ==
          doctest::Approx(
              -spherical::total_energy_spherical(make_q(1, 2, 0, 1, 1, 1), half, osc)));

    // both coordinate systems produce identical level tables
    for (double cutoff : {5.0, 12.25}) {
        LevelTable c = cartesian::enumerate_cartesian_levels(half, osc, cutoff);
        LevelTable s = spherical::enumerate_spherical_levels(half, osc, cutoff);
        CHECK(level_tables_equal(c, s));
    }
    WignerParams generic{0.3, 0.7, 1.1};
    LevelTable c = cartesian::enumerate_cartesian_levels(generic, osc, 9.0);
    LevelTable s = spherical::enumerate_spherical_levels(generic, osc, 9.0);
    CHECK(level_tables_equal(c, s));
}

TEST_CASE("angular factors satisfy their separation equations pointwise") {
    WignerParams mu{0.3, 0.7, 1.1};
    for (const auto& q :
         {make_q(0, 2, 0, 1, 1, 1), make_q(0, 3, 1, 1, -1, -1),
          make_q(0, 1, 2, -1, 1, 1), make_q(0, 4, 2, -1, -1, 1)}) {
        double omega2 = spherical::separation_omega2(q, mu);
        Function1D phi = spherical::azimuthal_factor(q, mu);
        for (double x : {0.3, 0.7, 1.1, 1.4}) {
            double c = std::cos(x), s = std::sin(x);
            double res = phi.d2(x) +
                         2.0 * (mu.mu2 * c / s - mu.mu1 * s / c) * phi.d1(x) -
                         mu.mu1 * (1.0 - q.sector.s1) / (c * c) * phi.value(x) -
                         mu.mu2 * (1.0 - q.sector.s2) / (s * s) * phi.value(x) +
                         omega2 * phi.value(x);
            CHECK(std::fabs(res) < 1e-9 * (1.0 + omega2));
        }

        double varpi2 = spherical::separation_varpi2(q, mu);
        Function1D theta = spherical::polar_factor(q, mu);
        double musum12 = mu.mu1 + mu.mu2;
        for (double x : {0.4, 0.9, 1.3}) {
            double c = std::cos(x), s = std::sin(x);
            double res =
                theta.d2(x) +
                ((1.0 + 2.0 * musum12) * c / s - 2.0 * mu.mu3 * s / c) * theta.d1(x) -
                mu.mu3 * (1.0 - q.sector.s3) / (c * c) * theta.value(x) -
                omega2 / (s * s) * theta.value(x) + varpi2 * theta.value(x);
            CHECK(std::fabs(res) < 1e-9 * (1.0 + varpi2));
        }
    }
}

TEST_CASE("radial factor: origin behaviour and oscillator equation") {
    OscillatorConfig osc{0.5, 1.0};
    WignerParams mu{0.3, 0.7, 1.1};
    const double mw = osc.m_omega();
    const double musum = mu.mu_sum();

    // rho^{nu+ell} prefactor kills the origin value once nu+ell > 0
    Function1D f0 = spherical::radial_factor(make_q(1, 2, 0, 1, 1, 1), mu, osc);
    CHECK(f0.value(1e-300) == 0.0);
    Function1D g0 = spherical::radial_factor(make_q(0, 0, 0, 1, 1, 1), mu, osc);
    CHECK(g0.value(0.0) != 0.0);

    for (const auto& q : {make_q(0, 0, 0, 1, 1, 1), make_q(2, 2, 2, 1, 1, 1),
                          make_q(1, 1, 1, 1, -1, -1)}) {
        double varpi2 = spherical::separation_varpi2(q, mu);
        double e = spherical::total_energy_spherical(q, mu, osc);
        Function1D f = spherical::radial_factor(q, mu, osc);
        // the non-minimal coupling shift carries the reflection eigenvalues,
        // not the bare deformation sum
        double sw = q.sector.s1 * mu.mu1 + q.sector.s2 * mu.mu2 +
                    q.sector.s3 * mu.mu3;
        for (double r : {0.5, 1.1, 2.3}) {
            double res = f.d2(r) + 2.0 * (1.0 + musum) / r * f.d1(r) -
                         mw * mw * r * r * f.value(r) +
                         2.0 * mw * (1.5 + sw) * f.value(r) -
                         varpi2 / (r * r) * f.value(r) +
                         (e * e - osc.mass * osc.mass) * f.value(r);
            CHECK(std::fabs(res) < 1e-9 * (1.0 + e * e));
        }
    }
}

TEST_CASE("factor normalizations against trapezoid oracles") {
    OscillatorConfig osc{0.5, 1.0};
    WignerParams mu{0.3, 0.7, 1.1};
    const double pi = std::acos(-1.0);
    for (const auto& q : {make_q(0, 0, 0, 1, 1, 1), make_q(1, 2, 2, 1, 1, 1),
                          make_q(0, 3, 1, 1, -1, -1)}) {
        Function1D phi = spherical::azimuthal_factor(q, mu);
        double nphi = testoracle::trapezoid_fn(
            [&](double x) {
                double v = phi.value(x);
                return v * v * std::pow(std::fabs(std::cos(x)), 2.0 * mu.mu1) *
                       std::pow(std::fabs(std::sin(x)), 2.0 * mu.mu2);
            },
            0.0, 2.0 * pi, 200000);
        CHECK(nphi == doctest::Approx(1.0).epsilon(1e-6));

        Function1D th = spherical::polar_factor(q, mu);
        double nth = testoracle::trapezoid_fn(
            [&](double x) {
                double v = th.value(x);
                return v * v *
                       std::pow(std::sin(x), 2.0 * (mu.mu1 + mu.mu2) + 1.0) *
                       std::pow(std::fabs(std::cos(x)), 2.0 * mu.mu3);
            },
            0.0, pi, 200000);
        CHECK(nth == doctest::Approx(1.0).epsilon(1e-6));

        Function1D ra = spherical::radial_factor(q, mu, osc);
        double nr = testoracle::trapezoid_fn(
            [&](double r) {
                double v = ra.value(r);
                return v * v * std::pow(r, 2.0 + 2.0 * mu.mu_sum());
            },
            0.0, 14.0, 200000);
        CHECK(nr == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("assembled wavefunction is the product of its factors") {
    OscillatorConfig osc{0.5, 1.0};
    WignerParams mu{0.5, 0.5, 0.5};
    auto q = make_q(1, 2, 1, 1, 1, -1);
    auto w = spherical::assemble_wavefunction(q, mu, osc);
    Function1D ra = spherical::radial_factor(q, mu, osc);
    Function1D th = spherical::polar_factor(q, mu);
    Function1D az = spherical::azimuthal_factor(q, mu);
    for (double r : {0.4, 1.2})
        for (double t : {0.6, 1.1})
            for (double p : {0.3, 2.5})
                CHECK(w.value(r, t, p) ==
                      doctest::Approx(ra.value(r) * th.value(t) * az.value(p)));
}
