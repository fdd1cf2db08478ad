#pragma once

#include "mlab/hill.hpp"
#include "mlab/model.hpp"

namespace mlab {

// One sample of a dilatation function: value, derivative, sample time.
struct DilatationState {
    double h;
    double h_dot;
    double t;
};

enum class Dilatation { normal, bare };  // h_j (normal frequencies) vs nu_j (bare)

// Pinney construction h^2 = x1^2 + Omega^2(0) x2^2 from the exact piecewise
// fundamental pair; valid for all t >= 0.
DilatationState h_pinney(const OscillatorParams& p, int mode, double t);

// First-period closed form; DomainError outside [0, pi).
DilatationState h_closed_first_period(const OscillatorParams& p, int mode, double t);

// Same construction driven by the bare frequencies omega_j^2(t).
DilatationState nu(const OscillatorParams& p, int mode, double t);

// |hddot + W^2(t) h - W^2(0)/h^3| with analytic hddot from the active piece.
// DomainError at quench instants, where hddot is undefined.
double ermakov_residual(const OscillatorParams& p, int mode, double t, Dilatation which);

// Shared helper: dilatation from an alternating two-frequency profile.
DilatationState pinney_from_profile(double first_sq, double second_sq, double t);

}  // namespace mlab
