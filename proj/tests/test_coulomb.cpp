#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunklkg/coulomb.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace dunklkg;

namespace {

coulomb::CoulombState make_state(int n, int two_nu, int two_ell, int s1, int s2,
                                 int s3) {
    coulomb::CoulombState st;
    st.n_radial = n;
    st.two_nu = two_nu;
    st.two_ell = two_ell;
    st.sector = ParitySector{s1, s2, s3};
    return st;
}

} // namespace

TEST_CASE("bound-state constraint: pinned boundary cases") {
    WignerParams zero{0.0, 0.0, 0.0};
    WignerParams half{0.5, 0.5, 0.5};
    CHECK(coulomb::angular_strength(zero, 0, 0) == doctest::Approx(0.5));
    CHECK(coulomb::angular_strength(half, 1, 1) == doctest::Approx(4.0));
    CHECK(coulomb::bound_constraint(zero, 0, 0, 0.4));
    CHECK_FALSE(coulomb::bound_constraint(zero, 0, 0, 0.5)); // equality excluded
    CHECK(coulomb::bound_constraint(half, 1, 1, 3.9));
    CHECK_FALSE(coulomb::bound_constraint(half, 1, 1, 4.0));
}

TEST_CASE("radial exponent eta: pinned value and defining quadratic") {
    WignerParams zero{0.0, 0.0, 0.0};
    // mu = 0, nu = 0, 2l = 1, g = 0.5: eta = sqrt(2) - 1/2
    CHECK(coulomb::eta(zero, 0, 1, 0.5) ==
          doctest::Approx(std::sqrt(2.0) - 0.5).epsilon(1e-14));
    CHECK(coulomb::eta(zero, 0, 1, 0.5) == doctest::Approx(0.914214).epsilon(1e-6));
    // g -> 0 undeformed s-wave: eta -> 0
    CHECK(coulomb::eta(zero, 0, 0, 1e-9) == doctest::Approx(0.0).epsilon(1e-8));

    // eta solves eta(eta-1) + 2 eta (1+mu_sum) + g^2 - varpi^2 = 0 with
    // varpi^2 = 4 (nu+ell)(nu+ell+mu_sum+1/2)
    WignerParams mu{0.5, 1.0 / 3.0, 0.2};
    for (int two_nu : {0, 1, 2})
        for (int two_ell : {0, 2})
            for (double g : {0.1, 0.45}) {
                double nl = 0.5 * (two_nu + two_ell);
                double varpi2 = 4.0 * nl * (nl + mu.mu_sum() + 0.5);
                double e = coulomb::eta(mu, two_nu, two_ell, g);
                double quad =
                    e * (e - 1.0) + 2.0 * e * (1.0 + mu.mu_sum()) + g * g - varpi2;
                CHECK(std::fabs(quad) < 1e-12 * (1.0 + varpi2));
            }
}

TEST_CASE("coulomb energy: pinned value, limits, monotonicity") {
    WignerParams zero{0.0, 0.0, 0.0};
    coulomb::CoulombConfig cc;
    cc.mass = 1.0;
    cc.g = 0.5;
    auto st = make_state(0, 0, 1, 1, 1, -1);
    CHECK(coulomb::coulomb_energy(st, zero, cc) ==
          doctest::Approx(0.967538).epsilon(5e-7));

    cc.g = 1e-8;
    CHECK(coulomb::coulomb_energy(st, zero, cc) == doctest::Approx(1.0));

    // energies increase with n toward the rest mass and stay inside (0, m)
    cc.g = 0.3;
    double prev = 0.0;
    for (int n = 0; n <= 5; ++n) {
        double e = coulomb::coulomb_energy(make_state(n, 0, 1, 1, 1, -1), zero, cc);
        CHECK(e > prev);
        CHECK(e < cc.mass);
        prev = e;
    }

    // unbound channel throws
    cc.g = 0.6;
    CHECK_THROWS_AS(coulomb::coulomb_energy(make_state(0, 0, 0, 1, 1, 1), zero, cc),
                    std::domain_error);
}

TEST_CASE("undeformed limit reproduces the textbook spectrum bit-exactly") {
    WignerParams zero{0.0, 0.0, 0.0};
    coulomb::CoulombConfig cc;
    cc.mass = 1.0;
    cc.g = 0.3;
    for (int big_l : {1, 2, 3, 4})
        for (int n = 0; n <= 3; ++n) {
            // textbook Klein-Gordon-Coulomb level with L = 2 ell, built with
            // the same floating-point operation order
            double s = double(big_l) + 0.5;
            double dg = n + 0.5 + std::sqrt(s * s - cc.g * cc.g);
            double expect = cc.mass / std::sqrt(1.0 + cc.g * cc.g / (dg * dg));
            auto st = make_state(n, 0, big_l, 1, 1, big_l % 2 == 0 ? 1 : -1);
            CHECK(coulomb::coulomb_energy(st, zero, cc) == expect);
        }
}

TEST_CASE("quantization index inverts the spectrum") {
    WignerParams mu{0.5, 1.0 / 3.0, 0.0};
    coulomb::CoulombConfig cc;
    cc.mass = 1.0;
    for (double g : {0.1, 0.5})
        for (int n : {0, 1, 4}) {
            cc.g = g;
            auto st = make_state(n, 0, 0, 1, 1, 1);
            double e = coulomb::coulomb_energy(st, mu, cc);
            CHECK(coulomb::quantization_index(e, st, mu, cc) ==
                  doctest::Approx(double(n)).epsilon(1e-10));
        }
    // an energy outside the bound interval is rejected
    auto st = make_state(0, 0, 0, 1, 1, 1);
    cc.g = 0.1;
    CHECK_THROWS_AS(coulomb::quantization_index(1.01, st, mu, cc), std::domain_error);
}

TEST_CASE("fine structure terms: pinned structure and expansion orders") {
    WignerParams zero{0.0, 0.0, 0.0};
    coulomb::CoulombConfig cc;
    cc.mass = 1.0;
    cc.g = 0.1;
    auto st = make_state(0, 0, 0, 1, 1, 1);
    auto terms = coulomb::fine_structure_expansion(st, zero, cc);
    CHECK(terms.rest == cc.mass);
    // D = 1, X = 0: nonrel = -m g^2/2, fine = -m g^4 (1 - 3/8)
    CHECK(terms.nonrel == doctest::Approx(-0.5 * cc.mass * 0.01).epsilon(1e-13));
    CHECK(terms.fine == doctest::Approx(-cc.mass * 1e-4 * (1.0 - 0.375)).epsilon(1e-13));

    CHECK(coulomb::fine_structure_parameter(zero, 0, 0) == 0.0);
    WignerParams mu{0.5, 1.0 / 3.0, 0.0};
    CHECK(coulomb::fine_structure_parameter(mu, 0, 0) ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(coulomb::fine_structure_vanishing(mu, 0, 0));
    CHECK_FALSE(coulomb::fine_structure_vanishing(zero, 0, 0));
    // X = 5/6 reachable through angular momentum too: mu_sum = 5/6 - 2(nu+ell)
    // impossible for nu+ell > 0, so only the mu route triggers it
    CHECK_FALSE(coulomb::fine_structure_vanishing(zero, 1, 0));

    // two-term truncation E - (rest + nonrel) is O(g^4): order >= 3.5
    double r1[3];
    int i = 0;
    for (double g : {0.1, 0.05, 0.025}) {
        cc.g = g;
        auto t = coulomb::fine_structure_expansion(st, zero, cc);
        r1[i++] = std::fabs(coulomb::coulomb_energy(st, zero, cc) - t.rest - t.nonrel);
    }
    double order2 = std::min(std::log2(r1[0] / r1[1]), std::log2(r1[1] / r1[2]));
    CHECK(order2 >= 3.5);

    // full three-term truncation on the ground channel is O(g^6)
    i = 0;
    for (double g : {0.1, 0.05, 0.025}) {
        cc.g = g;
        auto t = coulomb::fine_structure_expansion(st, zero, cc);
        r1[i++] = std::fabs(coulomb::coulomb_energy(st, zero, cc) - t.sum());
    }
    double order3 = std::min(std::log2(r1[0] / r1[1]), std::log2(r1[1] / r1[2]));
    CHECK(order3 >= 5.5);

    // at X = 5/6 the quartic term is exactly zero
    cc.g = 0.1;
    CHECK(std::fabs(coulomb::fine_structure_expansion(make_state(0, 0, 0, 1, 1, 1), mu,
                                                      cc)
                        .fine) < 1e-14 * cc.mass);
}

TEST_CASE("radial functions: node count, decay, orthogonality forms") {
    WignerParams mu{0.5, 1.0 / 3.0, 0.0};
    coulomb::CoulombConfig cc;
    cc.mass = 1.0;
    cc.g = 0.5;

    // node count on (0, inf) equals the radial index
    for (int n : {0, 1, 2, 3}) {
        Function1D f = coulomb::coulomb_radial(make_state(n, 0, 0, 1, 1, 1), mu, cc);
        int sign_changes = 0;
        double prev = f.value(0.05);
        for (double r = 0.1; r < 120.0; r += 0.05) {
            double v = f.value(r);
            if (prev * v < 0.0) ++sign_changes;
            if (v != 0.0) prev = v;
        }
        CHECK(sign_changes == n);
        // decay length 1/varsigma grows with n; 400 is ~40 lengths even at n=3
        CHECK(std::fabs(f.value(400.0)) < 1e-10);
    }

    // plain-measure normalization integrates to one...
    auto st0 = make_state(0, 0, 0, 1, 1, 1);
    auto st1 = make_state(1, 0, 0, 1, 1, 1);
    double w = 2.0 + 2.0 * mu.mu_sum();
    Function1D p0 =
        coulomb::coulomb_radial(st0, mu, cc, coulomb::RadialNormalization::plain_measure);
    double n0 = testoracle::trapezoid_fn(
        [&](double r) { return p0.value(r) * p0.value(r) * std::pow(r, w); }, 1e-9,
        300.0, 400000);
    CHECK(n0 == doctest::Approx(1.0).epsilon(1e-6));

    // ...but distinct levels are NOT orthogonal under the plain measure
    Function1D p1 =
        coulomb::coulomb_radial(st1, mu, cc, coulomb::RadialNormalization::plain_measure);
    double cross_plain = testoracle::trapezoid_fn(
        [&](double r) { return p0.value(r) * p1.value(r) * std::pow(r, w); }, 1e-9,
        300.0, 400000);
    CHECK(std::fabs(cross_plain) > 1e-3);

    // the energy-weighted bilinear form is the one that separates them
    double e0 = coulomb::coulomb_energy(st0, mu, cc);
    double e1 = coulomb::coulomb_energy(st1, mu, cc);
    Function1D q0 = coulomb::coulomb_radial(st0, mu, cc,
                                            coulomb::RadialNormalization::energy_weighted);
    Function1D q1 = coulomb::coulomb_radial(st1, mu, cc,
                                            coulomb::RadialNormalization::energy_weighted);
    double diag = testoracle::trapezoid_fn(
        [&](double r) {
            return q0.value(r) * q0.value(r) * (2.0 * e0 + 2.0 * cc.g / r) *
                   std::pow(r, w);
        },
        1e-9, 300.0, 400000);
    CHECK(diag == doctest::Approx(1.0).epsilon(1e-6));
    double cross = testoracle::trapezoid_fn(
        [&](double r) {
            return q0.value(r) * q1.value(r) * (e0 + e1 + 2.0 * cc.g / r) *
                   std::pow(r, w);
        },
        1e-9, 300.0, 400000);
    CHECK(std::fabs(cross) < 1e-6);
}
