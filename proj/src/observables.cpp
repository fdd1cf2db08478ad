#include "mlab/observables.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

namespace mlab {

namespace {

struct ModeFrame {
    double alpha;
    double varpi1, varpi2;  // Omega_j(0) / h_j^2
    double g1, g2;          // hdot_j / h_j
};

ModeFrame mode_frame(const OscillatorParams& p, double t) {
    const NormalModeData nm = normal_mode_data(p);
    const DilatationState h1 = h_pinney(p, 1, t);
    const DilatationState h2 = h_pinney(p, 2, t);
    return {nm.alpha,
            std::sqrt(nm.mode1_sq_plus) / (h1.h * h1.h),
            std::sqrt(nm.mode2_sq_plus) / (h2.h * h2.h),
            h1.h_dot / h1.h, h2.h_dot / h2.h};
}

double clamp_roundoff(double n) {
    return (n < 0.0 && n > -1e-12) ? 0.0 : n;
}

}  // namespace

VacuumCoefficients vacuum_coefficients(const OscillatorParams& p, double t) {
    const ModeFrame f = mode_frame(p, t);
    const double c2 = std::cos(f.alpha) * std::cos(f.alpha);
    const double s2 = 1.0 - c2;
    const double sc = std::sin(f.alpha) * std::cos(f.alpha);
    return {
        {f.varpi1 * c2 + f.varpi2 * s2, -(f.g1 * c2 + f.g2 * s2)},
        {f.varpi1 * s2 + f.varpi2 * c2, -(f.g1 * s2 + f.g2 * c2)},
        {sc * (f.varpi1 - f.varpi2), sc * (f.g2 - f.g1)},
        f.varpi1, f.varpi2, f.alpha,
    };
}

double purity(const VacuumCoefficients& c) {
    const double prod = c.varpi1 * c.varpi2;
    return std::sqrt(prod / (prod + std::norm(c.a12)));
}

double pt_symplectic_min(const VacuumCoefficients& c) {
    const double mu = purity(c);
    const double u = 1.0 / (mu * mu);
    const double lam_sq = (2.0 * u - 1.0) - 2.0 * std::sqrt(std::max(u * u - u, 0.0));
    return std::sqrt(std::max(lam_sq, 0.0));
}

double log_negativity(const VacuumCoefficients& c, LogBase base) {
    const double lam = pt_symplectic_min(c);
    const double en = std::max(0.0, -std::log(lam));
    return base == LogBase::natural ? en : en / std::numbers::ln2;
}

EntanglementRecord entanglement(const VacuumCoefficients& c, LogBase base) {
    return {purity(c), pt_symplectic_min(c), log_negativity(c, base)};
}

std::array<double, 3> marginal_moments(const OscillatorParams& p, int mode, double t) {
    if (mode != 1 && mode != 2) throw DomainError("marginal_moments: mode must be 1 or 2");
    const ModeFrame f = mode_frame(p, t);
    const double c2 = std::cos(f.alpha) * std::cos(f.alpha);
    const double s2 = 1.0 - c2;
    const double vj = mode == 1 ? f.varpi1 : f.varpi2;
    const double vk = mode == 1 ? f.varpi2 : f.varpi1;
    const double gj = mode == 1 ? f.g1 : f.g2;
    const double gk = mode == 1 ? f.g2 : f.g1;
    const double xx = (vj * s2 + vk * c2) / (2.0 * vj * vk);
    const double pp = 0.5 * (vj * c2 + vk * s2 + gj * gj * c2 / vj + gk * gk * s2 / vk);
    const double xp = (vk * c2 * gj + vj * s2 * gk) / (2.0 * vj * vk);
    return {xx, pp, xp};
}

ExcitationRecord photon_numbers(const OscillatorParams& p, double t) {
    require_admissible(p);
    double n[2];
    for (int mode = 1; mode <= 2; ++mode) {
        const double w0_sq = mode == 1 ? p.omega0_sq + p.epsilon : p.omega0_sq - p.epsilon;
        const double w0 = std::sqrt(w0_sq);
        const DilatationState d = nu(p, mode, t);
        const auto [xx, pp, xp] = marginal_moments(p, mode, t);
        const double nn = d.h * d.h;
        const double val = (w0_sq / nn + d.h_dot * d.h_dot) * xx / (2.0 * w0)
                         + nn * pp / (2.0 * w0)
                         + d.h * d.h_dot * xp / w0
                         - 0.5;
        n[mode - 1] = clamp_roundoff(val);
    }
    return {n[0], n[1], std::sqrt(std::max(n[0] * n[1], 0.0))};
}

ExcitationRecord photon_numbers_static(double omega1, double omega2, double j0) {
    const double w1_sq = omega1 * omega1;
    const double w2_sq = omega2 * omega2;
    if (w1_sq * w2_sq <= j0 * j0)
        throw DomainError("photon_numbers_static: unbounded (omega1^2 omega2^2 <= J0^2)");
    const double alpha = 0.5 * std::atan2(2.0 * j0, w1_sq - w2_sq);
    const double disc = std::sqrt((w1_sq - w2_sq) * (w1_sq - w2_sq) + 4.0 * j0 * j0);
    const double big1 = std::sqrt(0.5 * (w1_sq + w2_sq + disc));
    const double big2 = std::sqrt(0.5 * (w1_sq + w2_sq - disc));
    const double c2 = std::cos(alpha) * std::cos(alpha);
    const double s2 = 1.0 - c2;
    const auto sum = [](double a, double b) { return a / b + b / a; };
    const double n1 = clamp_roundoff(
        0.25 * c2 * sum(big1, omega1) + 0.25 * s2 * sum(big2, omega1) - 0.5);
    const double n2 = clamp_roundoff(
        0.25 * s2 * sum(big1, omega2) + 0.25 * c2 * sum(big2, omega2) - 0.5);
    return {n1, n2, std::sqrt(std::max(n1 * n2, 0.0))};
}

double energy_average(const OscillatorParams& p, int mode, int n, double t) {
    if (n < 0) throw DomainError("energy_average: excitation index must be >= 0");
    const NormalModeData nm = normal_mode_data(p);
    const double omega0_sq = mode == 1 ? nm.mode1_sq_plus : nm.mode2_sq_plus;
    const auto [w1_sq, w2_sq] = normal_frequencies_sq(p, t);
    const double omega_t_sq = mode == 1 ? w1_sq : w2_sq;
    const DilatationState d = h_pinney(p, mode, t);
    const double h_sq = d.h * d.h;
    return (2.0 * n + 1.0) / (4.0 * std::sqrt(omega0_sq))
         * (d.h_dot * d.h_dot + omega_t_sq * h_sq + omega0_sq / h_sq);
}

namespace {

MomentSet integrate_moments(const VacuumCoefficients& c, int n) {
    const double r1 = c.a1.real(), r2 = c.a2.real(), r12 = c.a12.real();
    const double detq = r1 * r2 - r12 * r12;
    // 8 sigma of each marginal
    const double l1 = 8.0 * std::sqrt(r2 / (2.0 * detq));
    const double l2 = 8.0 * std::sqrt(r1 / (2.0 * detq));
    const double d1 = 2.0 * l1 / (n - 1);
    const double d2 = 2.0 * l2 / (n - 1);

    std::vector<double> x1(n), x2(n), e1(n), e2(n), w(n);
    for (int i = 0; i < n; ++i) {
        x1[i] = -l1 + i * d1;
        x2[i] = -l2 + i * d2;
        e1[i] = std::exp(-r1 * x1[i] * x1[i]);
        e2[i] = std::exp(-r2 * x2[i] * x2[i]);
        w[i] = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    }

    const std::complex<double> a1 = c.a1, a2 = c.a2, a12 = c.a12;
    double z = 0, xx11 = 0, xx22 = 0, xx12 = 0;
    double pp11 = 0, pp22 = 0, pp12 = 0;
    double xp11 = 0, xp22 = 0, xp12 = 0, xp21 = 0;
    for (int i = 0; i < n; ++i) {
        const double u = x1[i];
        for (int j = 0; j < n; ++j) {
            const double v = x2[j];
            const double rho = w[i] * w[j] * e1[i] * e2[j] * std::exp(2.0 * r12 * u * v);
            if (rho < 1e-300) continue;
            const std::complex<double> dl1 = -a1 * u + a12 * v;  // (d psi / d x1) / psi
            const std::complex<double> dl2 = -a2 * v + a12 * u;
            z += rho;
            xx11 += u * u * rho;
            xx22 += v * v * rho;
            xx12 += u * v * rho;
            pp11 += std::norm(dl1) * rho;
            pp22 += std::norm(dl2) * rho;
            pp12 += (std::conj(dl1) * dl2).real() * rho;
            xp11 += u * dl1.imag() * rho;
            xp22 += v * dl2.imag() * rho;
            xp12 += u * dl2.imag() * rho;
            xp21 += v * dl1.imag() * rho;
        }
    }
    return {xx11 / z, xx22 / z, xx12 / z, pp11 / z, pp22 / z, pp12 / z,
            xp11 / z, xp22 / z, xp12 / z, xp21 / z};
}

std::array<double, 2> symplectic_pair(const Eigen::Matrix4d& v) {
    Eigen::Matrix4d form;
    form << 0, 1, 0, 0,
           -1, 0, 0, 0,
            0, 0, 0, 1,
            0, 0, -1, 0;
    const Eigen::EigenSolver<Eigen::Matrix4d> solver(form * v);
    std::array<double, 4> mags;
    for (int i = 0; i < 4; ++i) mags[i] = std::abs(solver.eigenvalues()[i]);
    std::sort(mags.begin(), mags.end());
    return {mags[0], mags[3]};
}

}  // namespace

std::array<std::array<double, 4>, 4> MomentSet::covariance() const {
    return {{{2 * xx11, 2 * xp11, 2 * xx12, 2 * xp12},
             {2 * xp11, 2 * pp11, 2 * xp21, 2 * pp12},
             {2 * xx12, 2 * xp21, 2 * xx22, 2 * xp22},
             {2 * xp12, 2 * pp12, 2 * xp22, 2 * pp22}}};
}

QuadratureResult quadrature_oracle(const VacuumCoefficients& c) {
    if (c.a1.real() <= 0.0 || c.a2.real() <= 0.0 ||
        c.a1.real() * c.a2.real() - c.a12.real() * c.a12.real() <= 0.0)
        throw DomainError("quadrature_oracle: non-normalizable Gaussian");

    MomentSet prev = integrate_moments(c, 301);
    for (int n = 601; n <= 4801; n = 2 * n - 1) {
        const MomentSet cur = integrate_moments(c, n);
        const double diffs[] = {
            cur.xx11 - prev.xx11, cur.xx22 - prev.xx22, cur.xx12 - prev.xx12,
            cur.pp11 - prev.pp11, cur.pp22 - prev.pp22, cur.pp12 - prev.pp12,
            cur.xp11 - prev.xp11, cur.xp22 - prev.xp22,
            cur.xp12 - prev.xp12, cur.xp21 - prev.xp21};
        double worst = 0.0;
        for (double d : diffs) worst = std::max(worst, std::abs(d));
        if (worst <= 1e-8) {
            const auto cov = cur.covariance();
            Eigen::Matrix4d v;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) v(i, j) = cov[i][j];
            Eigen::Matrix4d pt = Eigen::Matrix4d::Identity();
            pt(3, 3) = -1.0;  // momentum flip on mode 2
            return {cur, symplectic_pair(v), symplectic_pair(pt * v * pt)};
        }
        prev = cur;
    }
    throw NonConvergedError("quadrature_oracle: moments did not stabilize to 1e-8");
}

}  // namespace mlab
