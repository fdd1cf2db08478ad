#pragma once

#include <numbers>
#include <utility>

#include "mlab/errors.hpp"

namespace mlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPeriod = kPi / 2.0;

// A point in the dimensionless parameter space: squared parametric frequency,
// quench amplitude, coupling amplitude. The quencher period is fixed to pi.
struct OscillatorParams {
    double omega0_sq = 1.0;  // omega_0^2 > 0
    double epsilon = 0.0;    // quench amplitude >= 0
    double j0 = 0.0;         // coupling amplitude >= 0
    double period = kPi;
};

// The four half-period normal frequencies and the decoupling rotation angle.
// Mode 1 runs at sqrt(plus) while the quencher is +1 and at sqrt(minus)
// afterwards; mode 2 swaps the two values.
struct NormalModeData {
    double mode1_sq_plus;
    double mode1_sq_minus;
    double mode2_sq_plus;
    double mode2_sq_minus;
    double alpha;  // rotation angle in [0, pi/4]
};

// Square-wave quencher: +1 on [0, pi/2) mod pi, -1 on [pi/2, pi).
int quencher(double t);

// (omega_1^2, omega_2^2) = omega_0^2 +- epsilon * Theta(t).
std::pair<double, double> bare_frequencies_sq(const OscillatorParams& p, double t);

// (Omega_1^2, Omega_2^2) = omega_0^2 +- Theta(t) * sqrt(epsilon^2 + j0^2).
// Throws ForbiddenPointError when Omega_2(0) = 0.
std::pair<double, double> normal_frequencies_sq(const OscillatorParams& p, double t);

// Constant decoupling angle alpha = atan2(j0, epsilon) / 2.
double rotation_angle(const OscillatorParams& p);

// True iff epsilon^2 + j0^2 < omega_0^4 (open disc, strict).
bool is_bounded(const OscillatorParams& p);

NormalModeData normal_mode_data(const OscillatorParams& p);

// Throws ForbiddenPointError unless the point is strictly inside the
// admissible disc with Omega_2(0) > 0.
void require_admissible(const OscillatorParams& p);

}  // namespace mlab
