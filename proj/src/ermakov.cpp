#include "mlab/ermakov.hpp"

#include <cmath>

namespace mlab {

namespace {

// (first, second) half-period squared frequencies of the requested profile.
std::pair<double, double> profile(const OscillatorParams& p, int mode, Dilatation which) {
    if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
    require_admissible(p);
    const double shift = which == Dilatation::normal ? std::hypot(p.epsilon, p.j0) : p.epsilon;
    const double hi = p.omega0_sq + shift;
    const double lo = p.omega0_sq - shift;
    return mode == 1 ? std::pair{hi, lo} : std::pair{lo, hi};
}

}  // namespace

DilatationState pinney_from_profile(double first_sq, double second_sq, double t) {
    const FundamentalPair f = alternating_fundamental(first_sq, second_sq, t);
    const double h_sq = f.x1 * f.x1 + first_sq * f.x2 * f.x2;
    const double h = std::sqrt(h_sq);
    const double h_dot = (f.x1 * f.x1_dot + first_sq * f.x2 * f.x2_dot) / h;
    return {h, h_dot, t};
}

DilatationState h_pinney(const OscillatorParams& p, int mode, double t) {
    const auto [first, second] = profile(p, mode, Dilatation::normal);
    return pinney_from_profile(first, second, t);
}

DilatationState nu(const OscillatorParams& p, int mode, double t) {
    const auto [first, second] = profile(p, mode, Dilatation::bare);
    return pinney_from_profile(first, second, t);
}

DilatationState h_closed_first_period(const OscillatorParams& p, int mode, double t) {
    if (t < 0.0 || t >= kPi)
        throw DomainError("h_closed_first_period: t must lie in [0, pi)");
    const auto [first, second] = profile(p, mode, Dilatation::normal);
    if (t < kHalfPeriod) return {1.0, 0.0, t};
    // h^2 = (second - first)/(2 second) cos(2 sqrt(second) (t - pi/2))
    //       + (first + second)/(2 second)
    const double w = std::sqrt(second);
    const double s = t - kHalfPeriod;
    const double amp = (second - first) / (2.0 * second);
    const double h_sq = amp * std::cos(2.0 * w * s) + (first + second) / (2.0 * second);
    const double dh_sq = -2.0 * w * amp * std::sin(2.0 * w * s);
    const double h = std::sqrt(h_sq);
    return {h, dh_sq / (2.0 * h), t};
}

double ermakov_residual(const OscillatorParams& p, int mode, double t, Dilatation which) {
    const long k = static_cast<long>(std::llround(t / kHalfPeriod));
    if (k >= 1 && std::abs(t - static_cast<double>(k) * kHalfPeriod) < 1e-9)
        throw DomainError("ermakov_residual: hddot is undefined at quench instants");
    const auto [first, second] = profile(p, mode, which);
    const FundamentalPair f = alternating_fundamental(first, second, t);
    const long piece = static_cast<long>(std::floor(t / kHalfPeriod));
    const double w_sq = piece % 2 == 0 ? first : second;
    const double c = first;  // Omega^2(0)
    const double h_sq = f.x1 * f.x1 + c * f.x2 * f.x2;
    const double h = std::sqrt(h_sq);
    const double h_dot = (f.x1 * f.x1_dot + c * f.x2 * f.x2_dot) / h;
    const double h_ddot =
        (f.x1_dot * f.x1_dot + c * f.x2_dot * f.x2_dot - w_sq * h_sq - h_dot * h_dot) / h;
    return std::abs(h_ddot + w_sq * h - c / (h_sq * h));
}

}  // namespace mlab
