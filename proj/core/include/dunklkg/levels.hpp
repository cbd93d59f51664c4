#pragma once

#include "dunklkg/types.hpp"

#include <map>
#include <vector>

namespace dunklkg {

// One energy level of the squared spectrum, E^2 = m^2 + 2 m omega * shell.
// `shell` is kept alongside E^2 so level tables built by different coordinate
// systems can be compared exactly: both builders obtain it as
// double(integer part) + odd_mask_mu_sum(...), with identical rounding.
struct Level {
    double shell = 0.0;
    double e2 = 0.0;
    long long degeneracy = 0;
};

using LevelTable = std::vector<Level>;

// Sum of 2*mu_j over the axes with s_j = -1, accumulated in fixed axis order
// so that every enumeration produces bit-identical keys.
double odd_mask_mu_sum(const WignerParams& params, const ParitySector& sector);

// Shared conversion from accumulated shell counts to a sorted level table.
LevelTable level_table_from_counts(const std::map<double, long long>& counts,
                                   const OscillatorConfig& config);

// Exact comparison: same shells, same degeneracies.
bool level_tables_equal(const LevelTable& a, const LevelTable& b);

} // namespace dunklkg
