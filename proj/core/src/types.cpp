#include "dunklkg/types.hpp"

#include <stdexcept>
#include <string>

namespace dunklkg {

void WignerParams::validate() const {
    for (double m : {mu1, mu2, mu3}) {
        if (!(m >= 0.0))
            throw std::domain_error("WignerParams: mu must be non-negative");
        if (!(m < 100.0))
            throw std::domain_error("WignerParams: mu exceeds sanity bound 100");
    }
}

double WignerParams::mu(int axis) const {
    switch (axis) {
        case 1: return mu1;
        case 2: return mu2;
        case 3: return mu3;
    }
    throw std::domain_error("WignerParams::mu: axis must be 1, 2 or 3");
}

void ParitySector::validate() const {
    for (int v : {s1, s2, s3})
        if (v != 1 && v != -1)
            throw std::domain_error("ParitySector: entries must be +1 or -1");
}

int ParitySector::s(int axis) const {
    switch (axis) {
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
    }
    throw std::domain_error("ParitySector::s: axis must be 1, 2 or 3");
}

std::array<ParitySector, 8> ParitySector::all() {
    std::array<ParitySector, 8> out;
    int idx = 0;
    for (int a : {+1, -1})
        for (int b : {+1, -1})
            for (int c : {+1, -1})
                out[idx++] = ParitySector{a, b, c};
    return out;
}

void OscillatorConfig::validate() const {
    if (!(mass > 0.0))
        throw std::domain_error("OscillatorConfig: mass must be positive");
    if (!(omega > 0.0))
        throw std::domain_error("OscillatorConfig: omega must be positive");
}

} // namespace dunklkg
