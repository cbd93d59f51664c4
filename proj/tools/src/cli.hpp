#pragma once

#include <string>
#include <vector>

#include "dunklkg/oracle.hpp"

namespace dunklkg::cli {

// Identifiers accepted by `verify --only`, in battery execution order.
const std::vector<std::string>& battery_job_ids();

struct BatteryOptions {
    std::vector<std::string> only; // empty: run everything
    double perturbation = 0.0;     // shifts closed-form energies (negative control)
    oracle::GridSpec grid;         // finite-difference oracle resolution
};

// Runs the verification battery and returns the merged reports in job order.
std::vector<oracle::VerificationReport> run_battery(const BatteryOptions& options);

// Command-line entry point; returns the process exit code
// (0 success, 1 validation error, 2 verification failure).
int run(int argc, const char* const* argv);

} // namespace dunklkg::cli
