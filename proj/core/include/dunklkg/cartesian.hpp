#pragma once

#include "dunklkg/dunkl_operator.hpp"
#include "dunklkg/levels.hpp"
#include "dunklkg/types.hpp"

#include <vector>

namespace dunklkg::cartesian {

// One 3D product state: total energy depends only on n1+n2+n3 and the sector.
struct CartesianState {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;
    ParitySector sector;

    int n_total() const { return n1 + n2 + n3; }
    void validate() const;
};

struct DensityProfile {
    std::vector<double> x;
    std::vector<double> psi;
    std::vector<double> density_bare;      // |psi|^2
    std::vector<double> density_weighted;  // |psi|^2 |x|^{2 mu}
};

// Sector energy of the 1D factor: 2 m omega [2n + (1/2 + mu)(1 - s)].
double energy_1d(int n, int s, double mu, const OscillatorConfig& config);

// Total energy E = branch * sqrt(2 m omega [2n + sum_j (mu_j+1/2)(1-s_j)] + m^2),
// branch = +1 or -1.
double total_energy_cartesian(const CartesianState& state, const WignerParams& params,
                              const OscillatorConfig& config, int branch = +1);

// Normalization constant making <psi|psi> = 1 under the |x|^{2 mu} measure:
//   C = sqrt( n! (m omega)^{mu+1/2} / Gamma(n + mu - s/2 + 1) ).
double normalization_1d(int n, int s, double mu, const OscillatorConfig& config);

// Normalized sector eigenfunction
//   psi(x) = C * pre(x) * exp(-xi/2) * L_n^{mu - s/2}(xi),  xi = m omega x^2,
// with pre = 1 for s = +1 and pre = sqrt(m omega) x for s = -1 (odd in x).
// Value and the first two derivatives are all analytic.
Function1D wavefunction_1d(int n, int s, double mu, const OscillatorConfig& config);

// Sampled |psi|^2 with and without the Dunkl weight on a uniform symmetric
// grid of npts points covering [-x_max, x_max].
DensityProfile density_profile(int n, int s, double mu, const OscillatorConfig& config,
                               double x_max, int npts);

// All levels with E^2 <= e2_cutoff, grouped by exact shell value.
LevelTable enumerate_cartesian_levels(const WignerParams& params,
                                      const OscillatorConfig& config, double e2_cutoff);

} // namespace dunklkg::cartesian
