#pragma once

#include <array>
#include <complex>

#include "mlab/ermakov.hpp"
#include "mlab/model.hpp"

namespace mlab {

// Gaussian exponent coefficients of the vacuum wavefunction
// psi ~ exp(-A1 x1^2/2 - A2 x2^2/2 + A12 x1 x2), plus the scaled
// frequencies varpi_j = Omega_j(0)/h_j^2 they are built from.
struct VacuumCoefficients {
    std::complex<double> a1;
    std::complex<double> a2;
    std::complex<double> a12;
    double varpi1;
    double varpi2;
    double alpha;
};

struct EntanglementRecord {
    double mu;          // marginal purity in (0, 1]
    double lambda_min;  // minimal PT symplectic eigenvalue
    double e_n;         // logarithmic negativity >= 0
};

struct ExcitationRecord {
    double n1;
    double n2;
    double m12;  // sqrt(n1 * n2)
};

enum class LogBase { natural, two };

// Full set of symmetrized second moments of the two-mode vacuum.
// xp entries are (1/2)<x p + p x>.
struct MomentSet {
    double xx11, xx22, xx12;
    double pp11, pp22, pp12;
    double xp11, xp22;  // <x_j p_j>_sym
    double xp12, xp21;  // <x_1 p_2>_sym, <x_2 p_1>_sym

    // Covariance matrix in the convention where vacuum = identity
    // (V = 2 * moments), ordering (x1, p1, x2, p2).
    std::array<std::array<double, 4>, 4> covariance() const;
};

struct QuadratureResult {
    MomentSet moments;
    std::array<double, 2> symplectic;     // {min, max} of V
    std::array<double, 2> pt_symplectic;  // {min, max} after partial transpose
};

VacuumCoefficients vacuum_coefficients(const OscillatorParams& p, double t);

double purity(const VacuumCoefficients& c);

// Minimal PT symplectic eigenvalue from the standard-form covariance matrix:
// Delta = 2(2 mu^-2 - 1), lambda_min^2 = (Delta - sqrt(Delta^2 - 4))/2.
double pt_symplectic_min(const VacuumCoefficients& c);

double log_negativity(const VacuumCoefficients& c, LogBase base = LogBase::natural);

EntanglementRecord entanglement(const VacuumCoefficients& c, LogBase base = LogBase::natural);

// Symmetrized marginal moments (<x_j^2>, <p_j^2>, <x_j p_j>_sym) of mode j.
std::array<double, 3> marginal_moments(const OscillatorParams& p, int mode, double t);

ExcitationRecord photon_numbers(const OscillatorParams& p, double t);

// Time-independent limit for an arbitrary (omega1, omega2, J0) triple.
// DomainError when omega1^2 omega2^2 <= J0^2.
ExcitationRecord photon_numbers_static(double omega1, double omega2, double j0);

// <H_mode>_n = (2n+1)/(4 Omega(0)) (hdot^2 + Omega^2(t) h^2 + Omega^2(0)/h^2).
double energy_average(const OscillatorParams& p, int mode, int n, double t);

// Trapezoidal 2-D quadrature over |psi|^2 and its derivatives; refines until
// every moment is stable to 1e-8. Throws NonConvergedError otherwise.
QuadratureResult quadrature_oracle(const VacuumCoefficients& c);

}  // namespace mlab
