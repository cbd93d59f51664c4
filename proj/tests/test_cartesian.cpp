#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunklkg/cartesian.hpp"
#include "dunklkg/specfun.hpp"

#include "oracles.hpp"

#include <cmath>
#include <vector>

using namespace dunklkg;

TEST_CASE("sector energies: pinned values") {
    OscillatorConfig half{0.5, 1.0};
    OscillatorConfig unit{1.0, 1.0};
    for (double mu : {0.0, 0.3, 1.7})
        CHECK(cartesian::energy_1d(0, 1, mu, half) == 0.0);
    CHECK(cartesian::energy_1d(0, -1, 0.5, half) == doctest::Approx(2.0));
    CHECK(cartesian::energy_1d(1, -1, 0.0, unit) == doctest::Approx(6.0));
    // equal spacing 4 m omega within a sector
    for (int s : {1, -1})
        for (int n = 0; n < 4; ++n)
            CHECK(cartesian::energy_1d(n + 1, s, 0.8, half) -
                      cartesian::energy_1d(n, s, 0.8, half) ==
                  doctest::Approx(4.0 * half.m_omega()));
    CHECK_THROWS_AS(cartesian::energy_1d(-1, 1, 0.5, half), std::domain_error);
    CHECK_THROWS_AS(cartesian::energy_1d(0, 2, 0.5, half), std::domain_error);
}

TEST_CASE("total energy: pinned values and sector-sum consistency") {
    OscillatorConfig osc{0.5, 1.0};
    WignerParams mu{0.5, 0.5, 0.5};

    cartesian::CartesianState ground;
    CHECK(cartesian::total_energy_cartesian(ground, mu, osc) == osc.mass);

    cartesian::CartesianState odd;
    odd.sector = ParitySector{-1, -1, -1};
    CHECK(cartesian::total_energy_cartesian(odd, mu, osc) == doctest::Approx(2.5));
    CHECK(cartesian::total_energy_cartesian(odd, mu, osc, -1) ==
          doctest::Approx(-2.5));

    // E^2 - m^2 equals the sum of the three 1D sector eigenvalues
    for (const ParitySector& sec : ParitySector::all())
        for (int n1 : {0, 2})
            for (int n3 : {0, 1}) {
                cartesian::CartesianState st;
                st.n1 = n1;
                st.n2 = 1;
                st.n3 = n3;
                st.sector = sec;
                double e = cartesian::total_energy_cartesian(st, mu, osc);
                double sum = cartesian::energy_1d(n1, sec.s1, mu.mu1, osc) +
                             cartesian::energy_1d(1, sec.s2, mu.mu2, osc) +
                             cartesian::energy_1d(n3, sec.s3, mu.mu3, osc);
                CHECK(e * e - osc.mass * osc.mass ==
                      doctest::Approx(sum).epsilon(1e-13));
            }
}

TEST_CASE("undeformed limit reproduces the textbook tower bit-exactly") {
    OscillatorConfig osc{0.5, 1.0};
    WignerParams zero{0.0, 0.0, 0.0};
    for (const ParitySector& sec : ParitySector::all())
        for (int n1 = 0; n1 <= 2; ++n1)
            for (int n2 = 0; n2 <= 2; ++n2)
                for (int n3 = 0; n3 <= 2; ++n3) {
                    cartesian::CartesianState st;
                    st.n1 = n1;
                    st.n2 = n2;
                    st.n3 = n3;
                    st.sector = sec;
                    // textbook form: E = sqrt(2 m omega [2n + (1-s1)/2 +
                    // (1-s2)/2 + (1-s3)/2] + m^2), built with the same
                    // accumulation order
                    double q = 2.0 * (n1 + n2 + n3);
                    q += 0.5 * (1.0 - sec.s1);
                    q += 0.5 * (1.0 - sec.s2);
                    q += 0.5 * (1.0 - sec.s3);
                    double expect =
                        std::sqrt(2.0 * osc.m_omega() * q + osc.mass * osc.mass);
                    CHECK(cartesian::total_energy_cartesian(st, zero, osc) == expect);
                }
}

TEST_CASE("1D normalization constants against a trapezoid norm oracle") {
    OscillatorConfig osc{0.5, 1.0};
    for (double mu : {0.0, 0.25, 0.5, 1.5})
        for (int s : {1, -1})
            for (int n : {0, 1, 2, 4}) {
                Function1D psi = cartesian::wavefunction_1d(n, s, mu, osc);
                // substitute x = u^2 on the half line: the weight kink
                // |x|^{2mu} becomes the smooth power u^{4mu+1}, so trapezoid
                // plus one Richardson step resolves the integral fully
                auto integrand = [&](double u) {
                    double x = u * u;
                    double v = psi.value(x);
                    return 4.0 * u * v * v * std::pow(x, 2.0 * mu);
                };
                double b = std::sqrt(12.0);
                double coarse = testoracle::trapezoid_fn(integrand, 0.0, b, 20000);
                double fine = testoracle::trapezoid_fn(integrand, 0.0, b, 40000);
                double norm = (4.0 * fine - coarse) / 3.0;
                CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
            }
}

TEST_CASE("wavefunctions match an independent series construction") {
    OscillatorConfig osc{0.5, 1.0};
    const double mw = osc.m_omega();
    for (double mu : {0.0, 0.5, 1.2})
        for (int s : {1, -1})
            for (int n : {0, 1, 3}) {
                double alpha = mu - 0.5 * s;
                // C = sqrt(n! (m w)^{mu+1/2} / Gamma(n+alpha+1))
                double c = std::sqrt(std::exp(testoracle::lg(n + 1.0) +
                                              (mu + 0.5) * std::log(mw) -
                                              testoracle::lg(n + alpha + 1.0)));
                Function1D psi = cartesian::wavefunction_1d(n, s, mu, osc);
                for (double x : {-2.0, -0.9, 0.4, 1.5, 3.0}) {
                    double xi = mw * x * x;
                    double pre = s == 1 ? 1.0 : std::sqrt(mw) * x;
                    double expect = c * pre * std::exp(-xi / 2.0) *
                                    testoracle::laguerre_series(n, alpha, xi);
                    CHECK(psi.value(x) == doctest::Approx(expect).epsilon(1e-11));
                }
                // analytic first derivative vs central differences
                const double h = 1e-6;
                for (double x : {-1.3, 0.6}) {
                    double fd = (psi.value(x + h) - psi.value(x - h)) / (2.0 * h);
                    CHECK(psi.d1(x) == doctest::Approx(fd).epsilon(1e-7));
                }
            }
}

TEST_CASE("wavefunction boundary behaviour at the reflection point") {
    OscillatorConfig osc{0.5, 1.0};
    for (double mu : {0.0, 0.5, 1.5}) {
        Function1D even = cartesian::wavefunction_1d(0, 1, mu, osc);
        CHECK(even.value(0.0) > 0.0);
        for (int n : {0, 1, 2}) {
            Function1D oddf = cartesian::wavefunction_1d(n, -1, mu, osc);
            CHECK(oddf.value(0.0) == 0.0);
            // parity: psi(-x) = s psi(x)
            CHECK(oddf.value(-1.1) == doctest::Approx(-oddf.value(1.1)));
            Function1D evenf = cartesian::wavefunction_1d(n, 1, mu, osc);
            CHECK(evenf.value(-1.1) == doctest::Approx(evenf.value(1.1)));
        }
    }
}

TEST_CASE("density profiles: grid structure and weighted normalization") {
    OscillatorConfig osc{0.5, 1.0};
    auto prof = cartesian::density_profile(2, -1, 0.5, osc, 10.0, 10001);
    REQUIRE(prof.x.size() == 10001);
    REQUIRE(prof.psi.size() == 10001);
    CHECK(prof.x.front() == doctest::Approx(-10.0));
    CHECK(prof.x.back() == doctest::Approx(10.0));
    // odd state: both densities vanish exactly at the center
    std::size_t mid = prof.x.size() / 2;
    CHECK(prof.x[mid] == 0.0);
    CHECK(prof.density_bare[mid] == 0.0);
    CHECK(prof.density_weighted[mid] == 0.0);
    for (std::size_t i = 0; i < prof.x.size(); ++i) {
        CHECK(prof.density_bare[i] >= 0.0);
        CHECK(prof.density_weighted[i] >= 0.0);
    }
    CHECK(testoracle::trapezoid(prof.x, prof.density_weighted) ==
          doctest::Approx(1.0).epsilon(1e-6));

    // even ground state: bare density maximal at the center
    auto even = cartesian::density_profile(0, 1, 0.5, osc, 10.0, 10001);
    double center = even.density_bare[even.x.size() / 2];
    for (double v : even.density_bare) CHECK(v <= center + 1e-15);
    // weighted density vanishes at the center through the |x|^{2mu} factor
    CHECK(even.density_weighted[even.x.size() / 2] == 0.0);
}

TEST_CASE("level enumeration: undeformed degeneracies and cutoffs") {
    OscillatorConfig osc{0.5, 1.0};
    WignerParams zero{0.0, 0.0, 0.0};
    LevelTable t = cartesian::enumerate_cartesian_levels(zero, osc, 12.25);
    REQUIRE(t.size() >= 5);
    for (int k = 0; k <= 4; ++k) {
        CHECK(t[k].shell == doctest::Approx(double(k)));
        CHECK(t[k].degeneracy == (k + 1) * (k + 2) / 2);
        CHECK(t[k].e2 ==
              doctest::Approx(osc.mass * osc.mass + 2.0 * osc.m_omega() * k));
    }
    // cutoff below the first excited level leaves the singleton ground shell
    LevelTable low = cartesian::enumerate_cartesian_levels(zero, osc, 0.3);
    REQUIRE(low.size() == 1);
    CHECK(low[0].degeneracy == 1);
}
