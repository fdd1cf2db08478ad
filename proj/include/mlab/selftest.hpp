#pragma once

#include <random>
#include <string>
#include <vector>

#include "mlab/model.hpp"

namespace mlab {

struct SuiteResult {
    std::string name;
    double max_error;
    double tolerance;
    bool passed;
};

// Draws a random admissible point, strictly inside the disc with a margin so
// Omega_2(0) stays well away from zero.
OscillatorParams random_admissible(std::mt19937& rng);

// Runs the oracle-equivalence suites with a fixed seed.
std::vector<SuiteResult> run_selftest();

}  // namespace mlab
