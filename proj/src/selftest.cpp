#include "mlab/selftest.hpp"

#include <cmath>

#include "mlab/ermakov.hpp"
#include "mlab/hill.hpp"
#include "mlab/observables.hpp"

namespace mlab {

OscillatorParams random_admissible(std::mt19937& rng) {
    std::uniform_real_distribution<double> uw(0.3, 2.0);
    std::uniform_real_distribution<double> ur(0.0, 0.9);
    std::uniform_real_distribution<double> uphi(0.0, kHalfPeriod);
    const double w0_sq = uw(rng);
    const double r = ur(rng) * w0_sq;
    const double phi = uphi(rng);
    return {w0_sq, r * std::cos(phi), r * std::sin(phi)};
}

namespace {

SuiteResult suite_closed_vs_pinney(std::mt19937& rng) {
    double worst = 0.0;
    std::uniform_real_distribution<double> ut(0.0, kPi);
    for (int k = 0; k < 50; ++k) {
        const OscillatorParams p = random_admissible(rng);
        for (int mode = 1; mode <= 2; ++mode) {
            for (int s = 0; s < 64; ++s) {
                const double t = std::min(ut(rng), std::nextafter(kPi, 0.0));
                const DilatationState a = h_closed_first_period(p, mode, t);
                const DilatationState b = h_pinney(p, mode, t);
                worst = std::max({worst, std::abs(a.h - b.h), std::abs(a.h_dot - b.h_dot)});
            }
        }
    }
    return {"closed-form h vs Pinney [0,pi)", worst, 1e-10, worst <= 1e-10};
}

SuiteResult suite_pinney_vs_rk4(std::mt19937& rng, double tolerance = 1e-6) {
    double worst = 0.0;
    const double checkpoints[] = {kPi / 3.0, kPi, 2.5 * kPi, 4.0 * kPi};
    for (int k = 0; k < 50; ++k) {
        const OscillatorParams p = random_admissible(rng);
        const NormalModeData nm = normal_mode_data(p);
        for (int mode = 1; mode <= 2; ++mode) {
            const double first = mode == 1 ? nm.mode1_sq_plus : nm.mode2_sq_plus;
            const double second = mode == 1 ? nm.mode1_sq_minus : nm.mode2_sq_minus;
            const auto profile = [&](double t) {
                const long piece = static_cast<long>(std::floor(t / kHalfPeriod));
                return piece % 2 == 0 ? first : second;
            };
            for (const double t : checkpoints) {
                const FundamentalPair exact = fundamental_solutions(p, mode, t);
                const FundamentalPair num = rk4_oracle(profile, t, 1e-4);
                worst = std::max({worst,
                                  std::abs(exact.x1 - num.x1), std::abs(exact.x2 - num.x2),
                                  std::abs(exact.x1_dot - num.x1_dot),
                                  std::abs(exact.x2_dot - num.x2_dot)});
            }
        }
    }
    return {"piecewise propagators vs RK4 [0,4pi]", worst, tolerance, worst <= tolerance};
}

SuiteResult suite_lambda_vs_monodromy(std::mt19937& rng) {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const OscillatorParams p = random_admissible(rng);
        const double closed = lambda_param(p);
        for (int mode = 1; mode <= 2; ++mode)
            worst = std::max(worst,
                             std::abs(closed - 0.5 * std::abs(monodromy(p, mode).trace())));
    }
    return {"Lambda closed form vs monodromy trace", worst, 1e-12, worst <= 1e-12};
}

SuiteResult suite_moments_vs_quadrature(std::mt19937& rng, double* lam_worst) {
    double worst = 0.0;
    *lam_worst = 0.0;
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    for (int k = 0; k < 50; ++k) {
        const OscillatorParams p = random_admissible(rng);
        const double t = ut(rng);
        const VacuumCoefficients c = vacuum_coefficients(p, t);
        const QuadratureResult q = quadrature_oracle(c);
        for (int mode = 1; mode <= 2; ++mode) {
            const auto [xx, pp, xp] = marginal_moments(p, mode, t);
            const double qxx = mode == 1 ? q.moments.xx11 : q.moments.xx22;
            const double qpp = mode == 1 ? q.moments.pp11 : q.moments.pp22;
            const double qxp = mode == 1 ? q.moments.xp11 : q.moments.xp22;
            worst = std::max({worst, std::abs(xx - qxx), std::abs(pp - qpp),
                              std::abs(xp - qxp)});
        }
        *lam_worst = std::max(*lam_worst,
                              std::abs(pt_symplectic_min(c) - q.pt_symplectic[0]));
    }
    return {"analytic moments vs 2-D quadrature", worst, 1e-8, worst <= 1e-8};
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
    std::mt19937 rng(0x5eed);
    std::vector<SuiteResult> out;
    out.push_back(suite_closed_vs_pinney(rng));
    out.push_back(suite_lambda_vs_monodromy(rng));
    out.push_back(suite_pinney_vs_rk4(rng));
    double lam_worst = 0.0;
    out.push_back(suite_moments_vs_quadrature(rng, &lam_worst));
    out.push_back({"lambda_min purity route vs quadrature PT", lam_worst, 1e-6,
                   lam_worst <= 1e-6});
    return out;
}

}  // namespace mlab
