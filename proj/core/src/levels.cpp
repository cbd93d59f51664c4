#include "dunklkg/levels.hpp"

namespace dunklkg {

double odd_mask_mu_sum(const WignerParams& params, const ParitySector& sector) {
    double acc = 0.0;
    if (sector.s1 == -1) acc += 2.0 * params.mu1;
    if (sector.s2 == -1) acc += 2.0 * params.mu2;
    if (sector.s3 == -1) acc += 2.0 * params.mu3;
    return acc;
}

LevelTable level_table_from_counts(const std::map<double, long long>& counts,
                                   const OscillatorConfig& config) {
    LevelTable table;
    table.reserve(counts.size());
    for (const auto& [shell, degeneracy] : counts) {
        Level lvl;
        lvl.shell = shell;
        lvl.e2 = config.mass * config.mass + 2.0 * config.m_omega() * shell;
        lvl.degeneracy = degeneracy;
        table.push_back(lvl);
    }
    return table;
}

bool level_tables_equal(const LevelTable& a, const LevelTable& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].shell != b[i].shell || a[i].degeneracy != b[i].degeneracy)
            return false;
    return true;
}

} // namespace dunklkg
