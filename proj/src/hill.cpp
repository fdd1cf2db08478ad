#include "mlab/hill.hpp"

#include <array>
#include <cmath>

namespace mlab {

Propagator constant_propagator(double omega_sq, double tau) {
    if (omega_sq <= 0.0)
        throw DomainError("constant_propagator: omega_sq must be positive");
    if (tau < 0.0)
        throw DomainError("constant_propagator: tau must be non-negative");
    const double w = std::sqrt(omega_sq);
    const double c = std::cos(w * tau);
    const double s = std::sin(w * tau);
    return {c, s / w, -w * s, c};
}

Propagator monodromy(const OscillatorParams& p, int mode) {
    if (mode != 1 && mode != 2) throw DomainError("monodromy: mode must be 1 or 2");
    const NormalModeData nm = normal_mode_data(p);
    const double first = (mode == 1) ? nm.mode1_sq_plus : nm.mode2_sq_plus;
    const double second = (mode == 1) ? nm.mode1_sq_minus : nm.mode2_sq_minus;
    return constant_propagator(second, kHalfPeriod) * constant_propagator(first, kHalfPeriod);
}

double lambda_param(const OscillatorParams& p) {
    const NormalModeData nm = normal_mode_data(p);
    const double a = std::sqrt(nm.mode1_sq_plus);
    const double b = std::sqrt(nm.mode1_sq_minus);
    const double ca = std::cos(a * kHalfPeriod), sa = std::sin(a * kHalfPeriod);
    const double cb = std::cos(b * kHalfPeriod), sb = std::sin(b * kHalfPeriod);
    return std::abs(ca * cb - 0.5 * (a / b + b / a) * sa * sb);
}

StabilityResult stability(const OscillatorParams& p) {
    const double lambda = lambda_param(p);
    const double s = std::max(1.0 - lambda, 0.0);
    const double growth = lambda > 1.0 ? lambda + std::sqrt(lambda * lambda - 1.0) : 1.0;
    return {lambda, s, growth};
}

FundamentalPair alternating_fundamental(double first_sq, double second_sq, double t) {
    if (t < 0.0) throw DomainError("fundamental solutions require t >= 0");
    Propagator m = Propagator::identity();
    const long k = static_cast<long>(std::floor(t / kHalfPeriod));
    for (long i = 0; i < k; ++i)
        m = constant_propagator(i % 2 == 0 ? first_sq : second_sq, kHalfPeriod) * m;
    const double rem = t - static_cast<double>(k) * kHalfPeriod;
    if (rem > 0.0)
        m = constant_propagator(k % 2 == 0 ? first_sq : second_sq, rem) * m;
    return {m.m11, m.m21, m.m12, m.m22};
}

FundamentalPair fundamental_solutions(const OscillatorParams& p, int mode, double t) {
    if (mode != 1 && mode != 2) throw DomainError("fundamental_solutions: mode must be 1 or 2");
    const NormalModeData nm = normal_mode_data(p);
    const double first = (mode == 1) ? nm.mode1_sq_plus : nm.mode2_sq_plus;
    const double second = (mode == 1) ? nm.mode1_sq_minus : nm.mode2_sq_minus;
    return alternating_fundamental(first, second, t);
}

namespace {

using State = std::array<double, 4>;  // x1, x1', x2, x2'

State deriv(const std::function<double(double)>& omega_sq, double t, const State& y) {
    const double w2 = omega_sq(t);
    return {y[1], -w2 * y[0], y[3], -w2 * y[2]};
}

void rk4_step(const std::function<double(double)>& omega_sq, double t, double h, State& y) {
    const State k1 = deriv(omega_sq, t, y);
    State tmp;
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    const State k2 = deriv(omega_sq, t + 0.5 * h, tmp);
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    const State k3 = deriv(omega_sq, t + 0.5 * h, tmp);
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + h * k3[i];
    const State k4 = deriv(omega_sq, t + h, tmp);
    for (int i = 0; i < 4; ++i)
        y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace

FundamentalPair rk4_oracle(const std::function<double(double)>& omega_sq_of_t,
                           double t_end, double step) {
    if (step <= 0.0) throw DomainError("rk4_oracle: step must be positive");
    if (t_end < 0.0) throw DomainError("rk4_oracle: t_end must be non-negative");
    State y{1.0, 0.0, 0.0, 1.0};
    double t = 0.0;
    // Integrate each constant piece separately so the discontinuities at
    // multiples of pi/2 are grid points. Midpoint stage evaluations then
    // never straddle a jump.
    long seg = 0;
    while (t < t_end) {
        const double seg_end = std::min(static_cast<double>(seg + 1) * kHalfPeriod, t_end);
        const double len = seg_end - t;
        if (len > 0.0) {
            // The k4 stage of the last step lands on seg_end, which already
            // belongs to the next piece; clamp evaluations to the left limit.
            const double left_limit = std::nextafter(seg_end, t);
            const std::function<double(double)> clamped = [&](double tau) {
                return omega_sq_of_t(std::min(tau, left_limit));
            };
            const long n = std::max(1L, static_cast<long>(std::ceil(len / step)));
            const double h = len / static_cast<double>(n);
            for (long i = 0; i < n; ++i) rk4_step(clamped, t + i * h, h, y);
        }
        t = seg_end;
        ++seg;
    }
    return {y[0], y[1], y[2], y[3]};
}

}  // namespace mlab
