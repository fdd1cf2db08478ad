#include "mlab/model.hpp"

#include <cmath>

namespace mlab {

int quencher(double t) {
    double phase = std::fmod(t, kPi);
    if (phase < 0.0) phase += kPi;
    return phase < kHalfPeriod ? +1 : -1;
}

std::pair<double, double> bare_frequencies_sq(const OscillatorParams& p, double t) {
    const double d = p.epsilon * quencher(t);
    return {p.omega0_sq + d, p.omega0_sq - d};
}

std::pair<double, double> normal_frequencies_sq(const OscillatorParams& p, double t) {
    const double r = std::hypot(p.epsilon, p.j0);
    if (p.omega0_sq - r == 0.0)
        throw ForbiddenPointError("Omega_2(0) = 0: point lies on the forbidden circle");
    const double d = r * quencher(t);
    return {p.omega0_sq + d, p.omega0_sq - d};
}

double rotation_angle(const OscillatorParams& p) {
    // tan(2 alpha) = 2 J(t) / (omega_1^2 - omega_2^2) = j0 / epsilon, constant
    // in time. atan2(0, 0) = 0 covers the fully degenerate point.
    return 0.5 * std::atan2(p.j0, p.epsilon);
}

bool is_bounded(const OscillatorParams& p) {
    return p.epsilon * p.epsilon + p.j0 * p.j0 < p.omega0_sq * p.omega0_sq;
}

NormalModeData normal_mode_data(const OscillatorParams& p) {
    require_admissible(p);
    const double r = std::hypot(p.epsilon, p.j0);
    return NormalModeData{
        p.omega0_sq + r, p.omega0_sq - r,
        p.omega0_sq - r, p.omega0_sq + r,
        rotation_angle(p),
    };
}

void require_admissible(const OscillatorParams& p) {
    if (p.omega0_sq <= 0.0)
        throw ForbiddenPointError("omega0_sq must be positive");
    if (!is_bounded(p))
        throw ForbiddenPointError("unbounded: epsilon^2 + j0^2 >= omega0_sq^2");
    const double r = std::hypot(p.epsilon, p.j0);
    if (p.omega0_sq - r <= 0.0)
        throw ForbiddenPointError("Omega_2(0) = 0: point lies on the forbidden circle");
}

}  // namespace mlab
