#pragma once

#include "dunklkg/dunkl_operator.hpp"
#include "dunklkg/levels.hpp"
#include "dunklkg/types.hpp"

namespace dunklkg::spherical {

// Quantum numbers of one separated oscillator state. The separation indices
// are stored doubled (two_nu = 2nu, two_ell = 2ell) so the half-integer
// values forced by odd sectors stay exact integers.
struct SphericalQuantum {
    int n_radial = 0;
    int two_nu = 0;
    int two_ell = 0;
    ParitySector sector;

    // Throws std::domain_error when the indices are inadmissible for the
    // sector: two_nu must have the parity of k+p and be at least k+p, and
    // two_ell must have the parity of sigma.
    void validate() const;

    double nu() const { return 0.5 * two_nu; }
    double ell() const { return 0.5 * two_ell; }
    // Degrees of the Jacobi polynomials carried by the angular factors.
    int jacobi_degree_d() const;
    int jacobi_degree_e() const;
};

// Separation constants: omega2 couples the azimuthal and polar equations,
// varpi2 couples the polar and radial equations.
double separation_omega2(const SphericalQuantum& q, const WignerParams& params);
double separation_varpi2(const SphericalQuantum& q, const WignerParams& params);

// Normalization constants with respect to the reflection-weighted measures
// |cos phi|^{2mu1}|sin phi|^{2mu2} dphi on [0,2pi),
// sin^{2mu1+2mu2+1} theta |cos theta|^{2mu3} dtheta on [0,pi], and
// r^{2+2(mu1+mu2+mu3)} dr on [0,inf).
double normalization_azimuthal(const SphericalQuantum& q, const WignerParams& params);
double normalization_polar(const SphericalQuantum& q, const WignerParams& params);
double normalization_radial(const SphericalQuantum& q, const WignerParams& params,
                            const OscillatorConfig& config);

// Normalized factors with analytic first and second derivatives.
Function1D azimuthal_factor(const SphericalQuantum& q, const WignerParams& params);
Function1D polar_factor(const SphericalQuantum& q, const WignerParams& params);
Function1D radial_factor(const SphericalQuantum& q, const WignerParams& params,
                         const OscillatorConfig& config);

double total_energy_spherical(const SphericalQuantum& q, const WignerParams& params,
                              const OscillatorConfig& config, int branch = 1);

struct SphericalWavefunction {
    Function1D radial;
    Function1D polar;
    Function1D azimuthal;
    double value(double r, double theta, double phi) const {
        return radial.value(r) * polar.value(theta) * azimuthal.value(phi);
    }
};

SphericalWavefunction assemble_wavefunction(const SphericalQuantum& q,
                                            const WignerParams& params,
                                            const OscillatorConfig& config);

// Enumerates all admissible (n_radial, two_nu, two_ell, sector) states with
// squared energy at most e2_cutoff, grouped into shared-key levels so the
// result is comparable against the Cartesian enumeration.
LevelTable enumerate_spherical_levels(const WignerParams& params,
                                      const OscillatorConfig& config, double e2_cutoff);

} // namespace dunklkg::spherical
