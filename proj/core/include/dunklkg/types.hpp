#pragma once

#include <array>
#include <vector>

namespace dunklkg {

// Reflection-group deformation parameters mu_j >= 0, one per Cartesian axis.
struct WignerParams {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;

    void validate() const;
    double mu_sum() const { return mu1 + mu2 + mu3; }
    double mu(int axis) const;  // axis in {1,2,3}
};

// Simultaneous parity eigenvalues (s1,s2,s3), each +1 or -1, of the three
// coordinate reflections.
struct ParitySector {
    int s1 = +1;
    int s2 = +1;
    int s3 = +1;

    void validate() const;
    int s(int axis) const;

    // Half-odd exponents attached to the odd sectors: k=(1-s1)/2, p=(1-s2)/2,
    // sigma=(1-s3)/2.
    int k() const { return (1 - s1) / 2; }
    int p() const { return (1 - s2) / 2; }
    int sigma() const { return (1 - s3) / 2; }

    // All eight sectors, (+1,+1,+1) first, -1 varying fastest on axis 3.
    static std::array<ParitySector, 8> all();
};

struct OscillatorConfig {
    double mass = 1.0;
    double omega = 1.0;

    void validate() const;
    double m_omega() const { return mass * omega; }
};

} // namespace dunklkg
