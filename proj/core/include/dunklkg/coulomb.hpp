#pragma once

#include "dunklkg/dunkl_operator.hpp"
#include "dunklkg/spherical.hpp"
#include "dunklkg/types.hpp"

namespace dunklkg::coulomb {

// The Coulomb problem separates with the same angular structure as the
// oscillator; a bound state is labelled by the radial index n_radial plus the
// angular quantum numbers, so the oscillator's state type is reused.
using CoulombState = spherical::SphericalQuantum;

struct CoulombConfig {
    double mass = 1.0;
    double g = 0.1; // coupling Z e^2 in natural units
    void validate() const;
};

// S = mu1+mu2+mu3 + 2(nu+ell) + 1/2; bound states require g < S.
double angular_strength(const WignerParams& params, int two_nu, int two_ell);
bool bound_constraint(const WignerParams& params, int two_nu, int two_ell, double g);

// Exponent eta of the leading r^eta behaviour of the radial factor, the
// admissible root of eta(eta-1) + 2 eta (1+mu_sum) + g^2 - varpi^2 = 0.
double eta(const WignerParams& params, int two_nu, int two_ell, double g);

// Exact bound-state energy, 0 < E < mass (positive branch only).
double coulomb_energy(const CoulombState& state, const WignerParams& params,
                      const CoulombConfig& config);

// Inverse of the spectrum: n = E g / sqrt(m^2-E^2) - (1 + eta + mu_sum).
// Integral exactly on the bound spectrum.
double quantization_index(double energy, const CoulombState& state,
                          const WignerParams& params, const CoulombConfig& config);

enum class RadialNormalization {
    none,            // e^{-rho/2} rho^eta L_n(rho) as written, rho = 2 sqrt(m^2-E^2) r
    plain_measure,   // int psi^2 r^{2+2 mu_sum} dr = 1
    energy_weighted, // int psi^2 (2E + 2g/r) r^{2+2 mu_sum} dr = 1; distinct
                     // bound states are orthogonal under this bilinear form
};

Function1D coulomb_radial(const CoulombState& state, const WignerParams& params,
                          const CoulombConfig& config,
                          RadialNormalization norm = RadialNormalization::none);

// Weak-coupling expansion E ~ rest + nonrel + fine with
//   rest = m, nonrel = -(m/2) g^2/D^2, fine = -m (g^4/D^4)(1/(2X+1) - 3/8),
// where X = mu_sum + 2(nu+ell) and D = n + X + 1.
struct FineStructureTerms {
    double rest = 0.0;
    double nonrel = 0.0;
    double fine = 0.0;
    double sum() const { return rest + nonrel + fine; }
};

FineStructureTerms fine_structure_expansion(const CoulombState& state,
                                            const WignerParams& params,
                                            const CoulombConfig& config);

double fine_structure_parameter(const WignerParams& params, int two_nu, int two_ell); // X

// The g^4 term vanishes exactly at X = 5/6.
bool fine_structure_vanishing(const WignerParams& params, int two_nu, int two_ell,
                              double tol = 1e-12);

} // namespace dunklkg::coulomb
