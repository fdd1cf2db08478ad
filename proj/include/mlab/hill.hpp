#pragma once

#include <functional>

#include "mlab/model.hpp"

namespace mlab {

// Real 2x2 matrix mapping (x, xdot) at t0 to (x, xdot) at t1.
// Wronskian preservation keeps det = 1.
struct Propagator {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;

    double det() const { return m11 * m22 - m12 * m21; }
    double trace() const { return m11 + m22; }

    static Propagator identity() { return {}; }

    // Composition: (*this) after rhs.
    Propagator operator*(const Propagator& rhs) const {
        return {m11 * rhs.m11 + m12 * rhs.m21, m11 * rhs.m12 + m12 * rhs.m22,
                m21 * rhs.m11 + m22 * rhs.m21, m21 * rhs.m12 + m22 * rhs.m22};
    }
};

// The two fundamental solutions x1 (x1(0)=1, x1'(0)=0) and x2 (x2(0)=0,
// x2'(0)=1) evaluated at one time.
struct FundamentalPair {
    double x1 = 1.0, x1_dot = 0.0;
    double x2 = 0.0, x2_dot = 1.0;

    double wronskian() const { return x1 * x2_dot - x2 * x1_dot; }
};

struct StabilityResult {
    double lambda;       // |trace|/2 of the monodromy, >= 0
    double s;            // max(1 - lambda, 0); stable iff s > 0
    double growth_rate;  // per-period multiplier magnitude, >= 1

    bool stable() const { return s > 0.0; }
};

// Exact propagator of xddot + omega^2 x = 0 over a constant piece of
// length tau. Throws DomainError for omega_sq <= 0 or tau < 0.
Propagator constant_propagator(double omega_sq, double tau);

// One-period propagator of the requested normal mode (mode 1 or 2).
Propagator monodromy(const OscillatorParams& p, int mode);

// Closed-form Floquet parameter of the Meissner pair (both modes share it).
double lambda_param(const OscillatorParams& p);

StabilityResult stability(const OscillatorParams& p);

// Exact piecewise evaluation of the fundamental pair at time t >= 0.
FundamentalPair fundamental_solutions(const OscillatorParams& p, int mode, double t);

// Fundamental pair for a general half-period-alternating frequency profile:
// first_sq on even half-periods, second_sq on odd ones. Shared by the
// normal-mode and bare-frequency constructions.
FundamentalPair alternating_fundamental(double first_sq, double second_sq, double t);

// Fixed-step RK4 integration of xddot = -omega_sq(t) x for both
// initial-condition sets; verification oracle only. Segments are split at
// multiples of pi/2 so piece boundaries land on grid points.
FundamentalPair rk4_oracle(const std::function<double(double)>& omega_sq_of_t,
                           double t_end, double step);

}  // namespace mlab
